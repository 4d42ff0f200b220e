#pragma once

#include "tourlab/errors.hpp"
#include "tourlab/matching.hpp"
#include "tourlab/tournament.hpp"

#include <cctype>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace tourlab {

// tmt/1: a line holding n, then n rows of n characters over {0,1};
// row v, column u is 1 iff v -> u. Diagonal must be 0.

inline std::string to_tmt(const Tournament& t) {
    std::string s = std::to_string(t.size()) + "\n";
    for (int v = 0; v < t.size(); ++v) {
        for (int u = 0; u < t.size(); ++u) s += t.edge(v, u) ? '1' : '0';
        s += '\n';
    }
    return s;
}

namespace detail {

inline std::string strip_cr(std::string line) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    return line;
}

} // namespace detail

/// Strict tmt/1 reader. Throws ParseError with the offending line/column.
inline Tournament read_tmt(std::istream& in) {
    std::string line;
    int lineno = 1;
    if (!std::getline(in, line)) throw ParseError(1, 1, "empty input, expected vertex count");
    line = detail::strip_cr(line);
    if (line.empty()) throw ParseError(1, 1, "expected vertex count");
    int n = 0;
    for (std::size_t i = 0; i < line.size(); ++i) {
        if (!std::isdigit(static_cast<unsigned char>(line[i])))
            throw ParseError(1, static_cast<int>(i) + 1, "vertex count must be a non-negative integer");
        n = n * 10 + (line[i] - '0');
        if (n > kMaxVertices) throw CapacityError("tmt/1: vertex count exceeds 64");
    }
    std::vector<VertexSet> out(n);
    for (int v = 0; v < n; ++v) {
        ++lineno;
        if (!std::getline(in, line)) throw ParseError(lineno, 1, "missing row " + std::to_string(v));
        line = detail::strip_cr(line);
        for (int u = 0; u < static_cast<int>(line.size()); ++u) {
            const char c = line[u];
            if (u >= n) throw ParseError(lineno, u + 1, "row longer than " + std::to_string(n) + " characters");
            if (c != '0' && c != '1') throw ParseError(lineno, u + 1, std::string("unexpected character '") + c + "'");
            if (c == '1') {
                if (u == v) throw ParseError(lineno, u + 1, "diagonal entry must be 0");
                out[v].insert(u);
            }
        }
        if (static_cast<int>(line.size()) < n)
            throw ParseError(lineno, static_cast<int>(line.size()) + 1, "row shorter than " + std::to_string(n) + " characters");
    }
    // Only blank lines may follow.
    while (std::getline(in, line)) {
        ++lineno;
        line = detail::strip_cr(line);
        for (std::size_t i = 0; i < line.size(); ++i)
            if (!std::isspace(static_cast<unsigned char>(line[i])))
                throw ParseError(lineno, static_cast<int>(i) + 1, "trailing content after the last row");
    }
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (out[u].contains(v) == out[v].contains(u))
                throw ParseError(u + 2, v + 1, "entries (" + std::to_string(u) + "," + std::to_string(v) + ") and (" +
                                                   std::to_string(v) + "," + std::to_string(u) + ") must differ");
    return Tournament::from_out_sets(out);
}

inline Tournament parse_tmt(const std::string& text) {
    std::istringstream in(text);
    return read_tmt(in);
}

// Compact format: "n:" followed by the lower-triangular entries (i, j), i > j,
// in row-major order (1,0),(2,0),(2,1),(3,0),...; bit = 1 iff i -> j. Bits are
// packed most-significant-first into hex digits, zero padded.

inline std::vector<bool> lower_triangle_bits(const Tournament& t) {
    std::vector<bool> bits;
    for (int i = 1; i < t.size(); ++i)
        for (int j = 0; j < i; ++j) bits.push_back(t.edge(i, j));
    return bits;
}

inline std::string to_compact(const Tournament& t) {
    static constexpr char kHex[] = "0123456789abcdef";
    const std::vector<bool> bits = lower_triangle_bits(t);
    std::string s = std::to_string(t.size()) + ":";
    for (std::size_t k = 0; k < bits.size(); k += 4) {
        int d = 0;
        for (std::size_t b = 0; b < 4; ++b) d = (d << 1) | ((k + b < bits.size() && bits[k + b]) ? 1 : 0);
        s += kHex[d];
    }
    return s;
}

inline Tournament parse_compact(const std::string& text) {
    const auto colon = text.find(':');
    if (colon == std::string::npos || colon == 0) throw ParseError(1, 1, "compact tournament must start with 'n:'");
    int n = 0;
    for (std::size_t i = 0; i < colon; ++i) {
        if (!std::isdigit(static_cast<unsigned char>(text[i])))
            throw ParseError(1, static_cast<int>(i) + 1, "vertex count must be a non-negative integer");
        n = n * 10 + (text[i] - '0');
        if (n > kMaxVertices) throw CapacityError("compact: vertex count exceeds 64");
    }
    const std::size_t nbits = static_cast<std::size_t>(n) * (n > 0 ? n - 1 : 0) / 2;
    const std::size_t ndigits = (nbits + 3) / 4;
    const std::string hex = text.substr(colon + 1);
    if (hex.size() != ndigits)
        throw ParseError(1, static_cast<int>(colon) + 2, "expected " + std::to_string(ndigits) + " hex digits, got " + std::to_string(hex.size()));
    std::vector<bool> bits;
    for (std::size_t k = 0; k < hex.size(); ++k) {
        const char c = hex[k];
        int d;
        if (c >= '0' && c <= '9') d = c - '0';
        else if (c >= 'a' && c <= 'f') d = c - 'a' + 10;
        else throw ParseError(1, static_cast<int>(colon + 2 + k), std::string("bad hex digit '") + c + "'");
        for (int b = 3; b >= 0; --b) bits.push_back((d >> b) & 1);
    }
    for (std::size_t k = nbits; k < bits.size(); ++k)
        if (bits[k]) throw ParseError(1, static_cast<int>(colon + 2 + k / 4), "padding bits must be zero");
    std::size_t k = 0;
    std::vector<std::vector<bool>> lower(n, std::vector<bool>(n, false));
    for (int i = 1; i < n; ++i)
        for (int j = 0; j < i; ++j) lower[i][j] = bits[k++];
    return Tournament::from_predicate(n, [&](int u, int v) { return !lower[v][u]; });
}

// Matchings: whitespace-separated "a-b" tokens.

inline std::string to_matching_text(const IntegerMatching& m) {
    std::string s;
    for (const auto& [a, b] : m.pairs()) {
        if (!s.empty()) s += ' ';
        s += std::to_string(a) + "-" + std::to_string(b);
    }
    return s;
}

inline IntegerMatching parse_matching(const std::string& text) {
    std::istringstream in(text);
    std::string tok;
    std::vector<IntegerMatching::Pair> pairs;
    int index = 0;
    while (in >> tok) {
        ++index;
        const auto dash = tok.find('-', 1);
        if (dash == std::string::npos) throw ParseError(1, index, "matching token '" + tok + "' is not of the form a-b");
        try {
            std::size_t p1 = 0, p2 = 0;
            const long long a = std::stoll(tok.substr(0, dash), &p1);
            const long long b = std::stoll(tok.substr(dash + 1), &p2);
            if (p1 != dash || p2 != tok.size() - dash - 1) throw std::invalid_argument("junk");
            pairs.emplace_back(a, b);
        } catch (const std::logic_error&) {
            throw ParseError(1, index, "matching token '" + tok + "' is not of the form a-b");
        }
    }
    return IntegerMatching{std::move(pairs)};
}

} // namespace tourlab
