#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace hyperchroma {

// Finite field GF(p^m) with elements encoded as integers 0..q-1: the
// element with polynomial coordinates (c_0, ..., c_{m-1}) over GF(p) is
// encoded as sum c_i p^i. Addition and multiplication are table-driven;
// the prime case reduces to arithmetic mod p.
class GaloisField {
public:
    explicit GaloisField(int order) : q_(order) {
        if (order < 2) throw std::invalid_argument("field order must be at least 2");
        factor(order);
        if (m_ >= 2) find_modulus();
        build_tables();
    }

    int order() const { return q_; }
    int characteristic() const { return p_; }
    int degree() const { return m_; }

    // Coefficients of the reduction polynomial, constant term first,
    // including the leading 1; empty in the prime case.
    const std::vector<int>& modulus() const { return modulus_; }

    int add(int a, int b) const { return add_[range(a) * q_ + range(b)]; }
    int mul(int a, int b) const { return mul_[range(a) * q_ + range(b)]; }
    int neg(int a) const { return neg_[range(a)]; }
    int sub(int a, int b) const { return add(a, neg(b)); }

    int inv(int a) const {
        range(a);
        if (a == 0) throw std::domain_error("inverse of zero");
        return inv_[a];
    }

private:
    int range(int a) const {
        if (a < 0 || a >= q_) throw std::out_of_range("field element out of range");
        return a;
    }

    void factor(int order) {
        int rest = order;
        for (int p = 2; p * p <= rest; ++p) {
            if (rest % p == 0) {
                p_ = p;
                while (rest % p == 0) {
                    rest /= p;
                    ++m_;
                }
                if (rest != 1)
                    throw std::invalid_argument(
                        "not a prime power: " + std::to_string(order) + " = " +
                        std::to_string(p) + "^" + std::to_string(m_) + " * " +
                        std::to_string(rest));
                return;
            }
        }
        p_ = rest;
        m_ = 1;
    }

    // Polynomials over GF(p) are encoded as base-p integers, coefficient of
    // x^i in digit i. Multiplication and remainder work on that encoding.
    int poly_mul_mod(long long a, long long b, long long mod, int deg_mod) const {
        std::vector<int> prod(2 * deg_mod, 0);
        std::vector<int> da = digits(a, 2 * deg_mod);
        std::vector<int> db = digits(b, 2 * deg_mod);
        for (int i = 0; i < deg_mod; ++i)
            for (int j = 0; j < deg_mod; ++j)
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        std::vector<int> dm = digits(mod, deg_mod + 1);
        for (int i = 2 * deg_mod - 1; i >= deg_mod; --i) {
            int c = prod[i];
            if (c == 0) continue;
            for (int j = 0; j <= deg_mod; ++j) {
                int idx = i - deg_mod + j;
                prod[idx] = ((prod[idx] - c * dm[j]) % p_ + p_) % p_;
            }
        }
        long long out = 0;
        for (int i = deg_mod - 1; i >= 0; --i) out = out * p_ + prod[i];
        return static_cast<int>(out);
    }

    std::vector<int> digits(long long v, int count) const {
        std::vector<int> d(count, 0);
        for (int i = 0; i < count && v > 0; ++i) {
            d[i] = static_cast<int>(v % p_);
            v /= p_;
        }
        return d;
    }

    int poly_degree(long long v) const {
        int d = -1;
        for (int i = 0; v > 0; ++i) {
            if (v % p_) d = i;
            v /= p_;
        }
        return d;
    }

    // Remainder of a by b in GF(p)[x], encoded form.
    long long poly_rem(long long a, long long b) const {
        int db = poly_degree(b);
        std::vector<int> ra = digits(a, 64);
        std::vector<int> rb = digits(b, db + 1);
        int lead_inv = 1;
        for (int t = 1; t < p_; ++t)
            if (rb[db] * t % p_ == 1) lead_inv = t;
        for (int i = static_cast<int>(ra.size()) - 1; i >= db; --i) {
            int c = ra[i] * lead_inv % p_;
            if (c == 0) continue;
            for (int j = 0; j <= db; ++j)
                ra[i - db + j] = ((ra[i - db + j] - c * rb[j]) % p_ + p_) % p_;
        }
        long long out = 0;
        for (int i = db - 1; i >= 0; --i) out = out * p_ + ra[i];
        return out;
    }

    // Scan for the smallest monic irreducible of degree m_, comparing
    // coefficient tuples high-degree-first; with the leading coefficient
    // fixed at 1 that order is the numeric order of the low-part encoding.
    void find_modulus() {
        long long pm = 1;
        for (int i = 0; i < m_; ++i) pm *= p_;
        for (long long low = 0; low < pm; ++low) {
            long long candidate = pm + low;
            if (is_irreducible(candidate)) {
                modulus_ = digits(candidate, m_ + 1);
                modulus_encoded_ = candidate;
                return;
            }
        }
        throw std::logic_error("no irreducible polynomial found");
    }

    bool is_irreducible(long long poly) const {
        int d = poly_degree(poly);
        // Trial division by every monic polynomial of degree 1..d/2.
        for (int dd = 1; dd * 2 <= d; ++dd) {
            long long base = 1;
            for (int i = 0; i < dd; ++i) base *= p_;
            for (long long low = 0; low < base; ++low)
                if (poly_rem(poly, base + low) == 0) return false;
        }
        return true;
    }

    void build_tables() {
        if (q_ > 1024) throw std::invalid_argument("field order above 1024 not supported");
        add_.resize(static_cast<size_t>(q_) * q_);
        mul_.resize(static_cast<size_t>(q_) * q_);
        neg_.resize(q_);
        inv_.assign(q_, 0);
        for (int a = 0; a < q_; ++a) {
            for (int b = 0; b < q_; ++b) {
                int sum;
                if (m_ == 1) {
                    sum = (a + b) % p_;
                } else {
                    sum = 0;
                    long long pw = 1;
                    long long va = a, vb = b;
                    for (int i = 0; i < m_; ++i) {
                        sum += static_cast<int>((va % p_ + vb % p_) % p_ * pw);
                        va /= p_;
                        vb /= p_;
                        pw *= p_;
                    }
                }
                add_[static_cast<size_t>(a) * q_ + b] = sum;
                int prod = m_ == 1 ? static_cast<int>(static_cast<long long>(a) * b % p_)
                                   : poly_mul_mod(a, b, modulus_encoded_, m_);
                mul_[static_cast<size_t>(a) * q_ + b] = prod;
                if (sum == 0) neg_[a] = b;
                if (prod == 1) inv_[a] = b;
            }
        }
    }

    int q_ = 0;
    int p_ = 0;
    int m_ = 0;
    std::vector<int> modulus_;
    long long modulus_encoded_ = 0;
    std::vector<int> add_;
    std::vector<int> mul_;
    std::vector<int> neg_;
    std::vector<int> inv_;
};

} // namespace hyperchroma
