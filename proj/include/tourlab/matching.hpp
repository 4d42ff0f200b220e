#pragma once

#include <algorithm>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace tourlab {

/// A set of integer pairs (a, b), a < b, with all endpoints distinct.
class IntegerMatching {
public:
    using Pair = std::pair<long long, long long>;

    IntegerMatching() = default;
    explicit IntegerMatching(std::vector<Pair> pairs) : pairs_(std::move(pairs)) {
        std::set<long long> seen;
        for (const auto& [a, b] : pairs_) {
            if (!(a < b)) throw std::invalid_argument("matching pair (" + std::to_string(a) + "," + std::to_string(b) + ") needs a < b");
            if (!seen.insert(a).second || !seen.insert(b).second)
                throw std::invalid_argument("matching endpoints are not distinct");
        }
    }

    const std::vector<Pair>& pairs() const { return pairs_; }
    int size() const { return static_cast<int>(pairs_.size()); }

    /// Order-preserving relabelling of the endpoints onto 1..2|P|, pairs
    /// sorted by second coordinate.
    IntegerMatching normalized() const {
        std::vector<long long> ends;
        for (const auto& [a, b] : pairs_) {
            ends.push_back(a);
            ends.push_back(b);
        }
        std::sort(ends.begin(), ends.end());
        auto rank = [&](long long x) {
            return static_cast<long long>(std::lower_bound(ends.begin(), ends.end(), x) - ends.begin()) + 1;
        };
        std::vector<Pair> out;
        for (const auto& [a, b] : pairs_) out.emplace_back(rank(a), rank(b));
        std::sort(out.begin(), out.end(), [](const Pair& x, const Pair& y) { return x.second < y.second; });
        return IntegerMatching{std::move(out)};
    }

    /// {(a + s, b + s)}
    IntegerMatching shifted(long long s) const {
        std::vector<Pair> out;
        for (const auto& [a, b] : pairs_) out.emplace_back(a + s, b + s);
        return IntegerMatching{std::move(out)};
    }

    long long max_endpoint() const {
        long long m = 0;
        for (const auto& p : pairs_) m = std::max(m, p.second);
        return m;
    }

    /// Copy relation: same pairs after normalization.
    friend bool same_shape(const IntegerMatching& x, const IntegerMatching& y) {
        return x.normalized().pairs_ == y.normalized().pairs_;
    }

private:
    std::vector<Pair> pairs_;
};

} // namespace tourlab
