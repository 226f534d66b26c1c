#pragma once

#include <bit>
#include <cstdint>
#include <vector>

namespace hyperchroma {

// Dynamic fixed-capacity bitset sized at construction.
class Bitset {
public:
    Bitset() = default;

    explicit Bitset(int bits) : bits_(bits), words_((bits + 63) / 64, 0) {}

    int size() const { return bits_; }

    void set(int i) { words_[i >> 6] |= (uint64_t{1} << (i & 63)); }

    void reset(int i) { words_[i >> 6] &= ~(uint64_t{1} << (i & 63)); }

    bool test(int i) const { return (words_[i >> 6] >> (i & 63)) & 1; }

    void clear() {
        for (auto& w : words_) w = 0;
    }

    int count() const {
        int total = 0;
        for (auto w : words_) total += std::popcount(w);
        return total;
    }

    bool any() const {
        for (auto w : words_)
            if (w) return true;
        return false;
    }

    bool intersects(const Bitset& other) const {
        for (size_t i = 0; i < words_.size(); ++i)
            if (words_[i] & other.words_[i]) return true;
        return false;
    }

    Bitset& operator&=(const Bitset& other) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
        return *this;
    }

    Bitset& operator|=(const Bitset& other) {
        for (size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
        return *this;
    }

    // Index of the lowest set bit, or -1 if none.
    int find_first() const { return find_next(-1); }

    // Index of the lowest set bit above `after`, or -1 if none.
    int find_next(int after) const {
        int start = after + 1;
        if (start >= bits_) return -1;
        size_t wi = static_cast<size_t>(start) >> 6;
        uint64_t w = words_[wi] & (~uint64_t{0} << (start & 63));
        while (true) {
            if (w) return static_cast<int>(wi * 64 + std::countr_zero(w));
            if (++wi >= words_.size()) return -1;
            w = words_[wi];
        }
    }

    friend bool operator==(const Bitset& a, const Bitset& b) {
        return a.bits_ == b.bits_ && a.words_ == b.words_;
    }

private:
    int bits_ = 0;
    std::vector<uint64_t> words_;
};

} // namespace hyperchroma
