#pragma once

#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "coloring.hpp"
#include "hypergraph.hpp"

namespace hyperchroma {

// Error with the 1-based line number where parsing failed.
class ParseError : public std::runtime_error {
public:
    ParseError(int line, const std::string& message)
        : std::runtime_error("line " + std::to_string(line) + ": " + message),
          line_(line),
          message_(message) {}

    int line() const { return line_; }
    const std::string& message() const { return message_; }

private:
    int line_;
    std::string message_;
};

namespace detail {

struct NumberedLine {
    int number;
    std::string text;
};

// Splits into data lines, dropping blanks and '#' comments. Requires the
// text to end with a newline so truncated files are caught early.
inline std::vector<NumberedLine> data_lines(const std::string& text) {
    if (text.empty() || text.back() != '\n') {
        int lines = 1;
        for (char c : text)
            if (c == '\n') ++lines;
        throw ParseError(lines, "missing trailing newline");
    }
    std::vector<NumberedLine> out;
    int number = 0;
    size_t pos = 0;
    while (pos < text.size()) {
        size_t end = text.find('\n', pos);
        std::string line = text.substr(pos, end - pos);
        pos = end + 1;
        ++number;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        size_t first = line.find_first_not_of(" \t");
        if (first == std::string::npos || line[first] == '#') continue;
        out.push_back({number, line});
    }
    return out;
}

inline std::vector<long long> parse_integers(const NumberedLine& line) {
    std::istringstream in(line.text);
    std::vector<long long> out;
    std::string token;
    while (in >> token) {
        size_t used = 0;
        long long value = 0;
        try {
            value = std::stoll(token, &used);
        } catch (const std::exception&) {
            used = 0;
        }
        if (used != token.size())
            throw ParseError(line.number, "expected integer, got '" + token + "'");
        out.push_back(value);
    }
    return out;
}

}  // namespace detail

// Hypergraph text format: first data line is "n m", then one line per edge
// listing its vertex ids in strictly increasing order. '#' begins a comment
// line and a trailing newline is required. Edge order is preserved.
inline Hypergraph parse_hg(const std::string& text) {
    std::vector<detail::NumberedLine> lines = detail::data_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header line");

    std::vector<long long> header = detail::parse_integers(lines[0]);
    if (header.size() != 2)
        throw ParseError(lines[0].number, "header must be 'n m'");
    long long n = header[0], m = header[1];
    if (n < 0 || m < 0)
        throw ParseError(lines[0].number, "header counts must be nonnegative");
    if (n > 1'000'000 || m > 1'000'000)
        throw ParseError(lines[0].number, "header counts are too large");

    if (static_cast<long long>(lines.size()) - 1 < m) {
        int last = lines.empty() ? 1 : lines.back().number;
        throw ParseError(last, "expected " + std::to_string(m) + " edges, found " +
                                   std::to_string(lines.size() - 1));
    }
    if (static_cast<long long>(lines.size()) - 1 > m)
        throw ParseError(lines[1 + m].number,
                         "unexpected content after " + std::to_string(m) + " edges");

    EdgeList edges;
    std::set<Edge> seen;
    for (long long i = 0; i < m; ++i) {
        const detail::NumberedLine& line = lines[1 + i];
        std::vector<long long> ids = detail::parse_integers(line);
        if (ids.empty()) throw ParseError(line.number, "empty edge");
        Edge e;
        for (long long id : ids) {
            if (id < 0 || id >= n)
                throw ParseError(line.number,
                                 "vertex id " + std::to_string(id) + " out of range [0, " +
                                     std::to_string(n) + ")");
            if (!e.empty() && id <= e.back())
                throw ParseError(line.number, "vertex ids must be strictly increasing");
            e.push_back(static_cast<int>(id));
        }
        if (!seen.insert(e).second) throw ParseError(line.number, "duplicate edge");
        edges.push_back(std::move(e));
    }
    return Hypergraph::make_ordered(static_cast<int>(n), edges);
}

inline std::string emit_hg(const Hypergraph& h) {
    std::ostringstream out;
    out << h.n() << ' ' << h.m() << '\n';
    for (const Edge& e : h.edges()) {
        for (size_t i = 0; i < e.size(); ++i) {
            if (i) out << ' ';
            out << e[i];
        }
        out << '\n';
    }
    return out.str();
}

// Coloring text format: first data line is "m q", then one "edge_index color"
// line per edge, each index appearing exactly once.
inline EdgeColoring parse_col(const std::string& text) {
    std::vector<detail::NumberedLine> lines = detail::data_lines(text);
    if (lines.empty()) throw ParseError(1, "missing header line");

    std::vector<long long> header = detail::parse_integers(lines[0]);
    if (header.size() != 2)
        throw ParseError(lines[0].number, "header must be 'm q'");
    long long m = header[0], q = header[1];
    if (m < 0 || q < 0)
        throw ParseError(lines[0].number, "header counts must be nonnegative");
    if (m > 1'000'000 || q > 1'000'000)
        throw ParseError(lines[0].number, "header counts are too large");

    if (static_cast<long long>(lines.size()) - 1 < m) {
        int last = lines.empty() ? 1 : lines.back().number;
        throw ParseError(last, "expected " + std::to_string(m) + " entries, found " +
                                   std::to_string(lines.size() - 1));
    }
    if (static_cast<long long>(lines.size()) - 1 > m)
        throw ParseError(lines[1 + m].number,
                         "unexpected content after " + std::to_string(m) + " entries");

    EdgeColoring out;
    out.num_colors = static_cast<int>(q);
    out.color.assign(static_cast<size_t>(m), -1);
    for (long long i = 0; i < m; ++i) {
        const detail::NumberedLine& line = lines[1 + i];
        std::vector<long long> ids = detail::parse_integers(line);
        if (ids.size() != 2)
            throw ParseError(line.number, "entry must be 'edge_index color'");
        long long index = ids[0], color = ids[1];
        if (index < 0 || index >= m)
            throw ParseError(line.number, "edge index " + std::to_string(index) +
                                              " out of range [0, " + std::to_string(m) + ")");
        if (color < 0 || color >= q)
            throw ParseError(line.number, "color " + std::to_string(color) +
                                              " out of range [0, " + std::to_string(q) + ")");
        if (out.color[index] != -1)
            throw ParseError(line.number,
                             "edge index " + std::to_string(index) + " listed twice");
        out.color[index] = static_cast<int>(color);
    }
    return out;
}

inline std::string emit_col(const EdgeColoring& c) {
    std::ostringstream out;
    out << c.color.size() << ' ' << c.num_colors << '\n';
    for (size_t i = 0; i < c.color.size(); ++i) out << i << ' ' << c.color[i] << '\n';
    return out.str();
}

inline std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write file: " + path);
    out << content;
    if (!out) throw std::runtime_error("cannot write file: " + path);
}

}  // namespace hyperchroma
