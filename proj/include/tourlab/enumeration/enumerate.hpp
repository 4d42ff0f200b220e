#pragma once

#include "tourlab/enumeration/canonical.hpp"
#include "tourlab/errors.hpp"
#include "tourlab/io.hpp"
#include "tourlab/tournament.hpp"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <ostream>
#include <string>
#include <vector>

namespace tourlab {

inline constexpr int kEnumerateMax = 7;

/// Canonical codes on n vertices, ascending. A canonical code's first
/// C(n-1, 2) bits form a canonical code on n-1 vertices, so each class is
/// produced exactly once by appending a last row to a smaller canonical code.
inline std::vector<std::uint64_t> canonical_codes(int n, const Deadline& deadline = Deadline::none()) {
    if (n < 0) throw std::invalid_argument("enumerate_all: n must be non-negative");
    if (n > kEnumerateMax) throw CapacityError("enumerate_all: limited to n <= 7");
    std::vector<std::uint64_t> level{0};
    std::uint64_t nodes = 0;
    for (int m = 2; m <= n; ++m) {
        std::vector<std::uint64_t> next;
        const int row = m - 1;
        for (std::uint64_t base : level)
            for (std::uint64_t r = 0; r < (std::uint64_t{1} << row); ++r) {
                deadline.poll(++nodes);
                const std::uint64_t code = (base << row) | r;
                if (canonical_form(from_code(m, code)).code == code) next.push_back(code);
            }
        std::sort(next.begin(), next.end());
        level = std::move(next);
    }
    return level;
}

/// One representative per isomorphism class, in canonical order.
inline std::vector<Tournament> enumerate_all(int n, const Deadline& deadline = Deadline::none()) {
    std::vector<Tournament> out;
    for (std::uint64_t c : canonical_codes(n, deadline)) out.push_back(from_code(n, c));
    return out;
}

/// Corpus cache: one compact-format tournament per line.
inline void write_corpus(std::ostream& os, const std::vector<Tournament>& corpus) {
    for (const auto& t : corpus) os << to_compact(t) << '\n';
}

inline std::vector<Tournament> read_corpus(std::istream& is) {
    std::vector<Tournament> out;
    std::string line;
    int lineno = 0;
    while (std::getline(is, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        try {
            out.push_back(parse_compact(line));
        } catch (const ParseError& e) {
            throw ParseError(lineno, e.column(), e.message());
        }
    }
    return out;
}

} // namespace tourlab
