#pragma once

#include "tourlab/chromatic.hpp"
#include "tourlab/domination.hpp"
#include "tourlab/tournament.hpp"

#include <cmath>
#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <random>
#include <shared_mutex>
#include <string>
#include <unordered_map>

namespace tourlab {

/// A set function on the vertex subsets of one tournament, expected to be
/// normalized, increasing and subadditive. Evaluations are memoized in a
/// cache shared by all copies; concurrent readers are fine and racing writers
/// store the same value.
class Submeasure {
public:
    using Fn = std::function<double(VertexSet)>;

    Submeasure(std::string name, int n, Fn fn)
        : name_(std::move(name)), n_(n), fn_(std::move(fn)), cache_(std::make_shared<Cache>()) {}

    const std::string& name() const { return name_; }
    int size() const { return n_; }

    double operator()(VertexSet s) const {
        {
            std::shared_lock lock(cache_->mutex);
            if (auto it = cache_->values.find(s.bits()); it != cache_->values.end()) return it->second;
        }
        const double v = fn_(s);
        std::unique_lock lock(cache_->mutex);
        cache_->values.emplace(s.bits(), v);
        return v;
    }

    std::size_t cached() const {
        std::shared_lock lock(cache_->mutex);
        return cache_->values.size();
    }

private:
    struct Cache {
        mutable std::shared_mutex mutex;
        std::unordered_map<std::uint64_t, double> values;
    };

    std::string name_;
    int n_;
    Fn fn_;
    std::shared_ptr<Cache> cache_;
};

/// chi as a submeasure; backed by the subset table when n <= 16.
inline Submeasure chi_measure(const Tournament& t) {
    if (t.size() <= 16) {
        auto table = std::make_shared<ChiTable>(t);
        return Submeasure{"chi", t.size(), [table](VertexSet s) { return static_cast<double>((*table)(s)); }};
    }
    return Submeasure{"chi", t.size(), [t](VertexSet s) { return static_cast<double>(chi(t, s)); }};
}

/// External domination number: the submeasure with mu(V) = dom and
/// mu(N+(v)) = 1.
inline Submeasure edom_measure(const Tournament& t) {
    return Submeasure{"edom", t.size(), [t](VertexSet s) { return static_cast<double>(edom(t, s)); }};
}

/// chi_L on subsets: only law members inside s constrain a partition of s.
inline Submeasure law_measure(const Tournament& t, const Law& law) {
    law.validate(t);
    return Submeasure{"chi_law", t.size(), [t, law](VertexSet s) {
                          const Induced ind = induce(t, s);
                          Law local{ind.t.size(), {}};
                          for (VertexSet m : law.members) {
                              if (!m.subset_of(s)) continue;
                              VertexSet r;
                              for (int i = 0; i < ind.t.size(); ++i)
                                  if (m.contains(ind.map[i])) r.insert(i);
                              local.members.push_back(r);
                          }
                          return static_cast<double>(chi_law(ind.t, local));
                      }};
}

struct SubmeasureViolation {
    std::string property;  // "normalized", "monotone" or "subadditive"
    VertexSet a, b;
    std::string detail;
};

struct SubmeasureCheck {
    bool ok = true;
    bool exhaustive = false;
    std::uint64_t checks = 0;
    std::optional<SubmeasureViolation> violation;
};

/// Checks mu(∅) = 0, monotonicity and subadditivity. Exhaustive over all
/// pairs when n <= exhaustive_max, otherwise on `samples` random pairs.
inline SubmeasureCheck validate_submeasure(const Submeasure& mu, int samples = 2000, std::uint64_t seed = 1,
                                           int exhaustive_max = 12) {
    constexpr double eps = 1e-9;
    SubmeasureCheck r;
    const int n = mu.size();
    const VertexSet all = VertexSet::range(n);
    auto fail = [&](std::string prop, VertexSet a, VertexSet b, std::string detail) {
        r.ok = false;
        r.violation = SubmeasureViolation{std::move(prop), a, b, std::move(detail)};
    };
    if (std::abs(mu(VertexSet{})) > eps) {
        fail("normalized", {}, {}, "mu(empty) = " + std::to_string(mu(VertexSet{})));
        return r;
    }
    auto check_pair = [&](VertexSet a, VertexSet b) {
        ++r.checks;
        const double ma = mu(a), mb = mu(b), mu_union = mu(a | b);
        if (ma < 0) {
            fail("normalized", a, b, "negative value");
            return false;
        }
        if (ma > mu_union + eps) {
            fail("monotone", a, a | b, std::to_string(ma) + " > " + std::to_string(mu_union));
            return false;
        }
        if (mu_union > ma + mb + eps) {
            fail("subadditive", a, b, std::to_string(mu_union) + " > " + std::to_string(ma) + " + " + std::to_string(mb));
            return false;
        }
        return true;
    };
    if (n <= exhaustive_max) {
        r.exhaustive = true;
        const std::uint64_t total = std::uint64_t{1} << n;
        for (std::uint64_t a = 0; a < total; ++a)
            for (std::uint64_t b = a; b < total; ++b)
                if (!check_pair(VertexSet{a}, VertexSet{b}) || !check_pair(VertexSet{b}, VertexSet{a})) return r;
        return r;
    }
    std::mt19937_64 rng(seed);
    for (int i = 0; i < samples; ++i) {
        const VertexSet a = VertexSet{rng()} & all, b = VertexSet{rng()} & all;
        if (!check_pair(a, b) || !check_pair(b, a)) return r;
    }
    return r;
}

} // namespace tourlab
