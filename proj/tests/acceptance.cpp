// Acceptance gate: one PASS/FAIL line per criterion, non-zero exit on any
// failure. Reference values come from the brute-force oracles.

#include "oracles.hpp"

#include "tourlab/tourlab.hpp"

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <thread>

using namespace tourlab;

namespace {

int threads() { return std::max(1u, std::thread::hardware_concurrency()); }

struct Check {
    bool ok = true;
    std::string detail;

    void expect(bool cond, const std::string& what) {
        if (!cond && ok) {
            ok = false;
            detail = what;
        }
    }
};

int failures = 0;

void criterion(int id, const char* title, double budget_seconds, const std::function<Check()>& body) {
    const auto start = std::chrono::steady_clock::now();
    Check c;
    try {
        c = body();
    } catch (const std::exception& e) {
        c.ok = false;
        c.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.ok && secs > budget_seconds) {
        c.ok = false;
        c.detail = "over time budget of " + std::to_string(budget_seconds) + " s";
    }
    if (!c.ok) ++failures;
    std::printf("[%s] %2d %s (%.2f s)%s%s\n", c.ok ? "PASS" : "FAIL", id, title, secs, c.detail.empty() ? "" : ": ",
                c.detail.c_str());
    std::fflush(stdout);
}

std::vector<std::vector<int>> all_orders(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

} // namespace

int main() {
    criterion(1, "chi of C3, S_3, S_4, T_3 against the partition oracle", 60, [] {
        Check c;
        const Tournament c3 = cyclic_triangle(), s3 = s_t(3), s4 = s_t(4), t3 = t_t(3);
        c.expect(chi(c3) == 2 && oracle::chi_partitions(c3, c3.vertices()) == 2, "chi(C3) != 2");
        c.expect(chi(s3) == 3 && oracle::chi_partitions(s3, s3.vertices()) == 3, "chi(S_3) != 3");
        c.expect(chi(t3) == 3 && oracle::chi_partitions(t3, t3.vertices()) == 3, "chi(T_3) != 3");
        c.expect(chi(s4) == 4, "library chi(S_4) != 4");
        c.expect(!oracle::k_colourable(s4, 3) && oracle::k_colourable(s4, 4), "oracle chi(S_4) != 4");
        return c;
    });

    criterion(2, "dom of C3, Paley(7), Paley(19) and S_4", 30, [] {
        Check c;
        const Tournament c3 = cyclic_triangle(), p7 = paley(7), p19 = paley(19), s4 = s_t(4);
        c.expect(dom(c3) == 2 && oracle::dom(c3) == 2, "dom(C3) != 2");
        c.expect(dom(p7) == 3 && oracle::dom(p7) == 3, "dom(Paley 7) != 3");
        c.expect(dom(p19) == 4 && oracle::dom(p19) == 4, "dom(Paley 19) != 4");
        c.expect(dom(s4) <= 3 && oracle::dom(s4) == dom(s4), "dom(S_4) > 3 or disagrees with oracle");
        return c;
    });

    criterion(3, "backedge sandwich on 1000 random numbered tournaments, n <= 10", 120, [] {
        Check c;
        std::mt19937_64 rng(20240301);
        for (int trial = 0; trial < 1000 && c.ok; ++trial) {
            const int n = 1 + static_cast<int>(rng() % 10);
            const Tournament t = random_tournament(n, rng());
            const Numbering nb = random_numbering(n, rng);
            const Graph g = backedge_graph({t, nb});
            const int chi_t = chi(t), chi_g = graph_chi(g), omega = graph_omega(g);
            c.expect(chi_t <= chi_g && chi_g <= omega * chi_t, "violated on " + to_compact(t));
        }
        return c;
    });

    criterion(4, "crossing tournaments: local chi <= 2, transitive sides, no S_3 (200 matchings)", 120, [] {
        Check c;
        std::mt19937_64 rng(20240302);
        const Tournament s3 = s_t(3);
        for (int trial = 0; trial < 200 && c.ok; ++trial) {
            const int pairs = 1 + static_cast<int>(rng() % 15);
            const CrossingTournament x = crossing(random_matching(pairs, rng));
            const std::string tag = to_matching_text(x.matching);
            std::vector<int> order(x.t.size());
            std::iota(order.begin(), order.end(), 0);
            c.expect(local_chromatic_number({x.t, x.canonical()}) <= 2, "local chi > 2 for " + tag);
            c.expect(oracle::local_chromatic(x.t, order) <= 2, "oracle local chi > 2 for " + tag);
            for (int v = 0; v < x.t.size(); ++v) {
                std::vector<int> forward_in, backward_out;
                for (int u = 0; u < x.t.size(); ++u) {
                    if (u > v && x.t.edge(u, v)) forward_in.push_back(u);
                    if (u < v && x.t.edge(v, u)) backward_out.push_back(u);
                }
                c.expect(oracle::acyclic(x.t, forward_in) && oracle::acyclic(x.t, backward_out),
                         "non-transitive side at vertex " + std::to_string(v) + " of " + tag);
            }
            c.expect(!contains(x.t, s3), "contains S_3: " + tag);
        }
        return c;
    });

    criterion(5, "diamond <= 2 local chi and dom <= local chi + 1, all numberings, n <= 5", 600, [] {
        Check c;
        for (int n = 1; n <= 5; ++n) {
            const auto orders = all_orders(n);
            for (const Tournament& t : enumerate_all(n)) {
                const int diamond = oracle::max_diamond(t), d = oracle::dom(t);
                for (const auto& order : orders) {
                    const int local = oracle::local_chromatic(t, order);
                    c.expect(diamond <= 2 * local, "diamond bound fails on " + to_compact(t));
                    c.expect(d <= local + 1, "dom bound fails on " + to_compact(t));
                }
            }
        }
        return c;
    });

    criterion(6, "S_3: minimum local chi over all 5040 numberings (golden 1)", 10, [] {
        Check c;
        const Tournament s3 = s_t(3);
        int best = s3.size();
        for (const auto& order : all_orders(7)) best = std::min(best, oracle::local_chromatic(s3, order));
        c.expect(best >= 1, "minimum below 1");
        c.expect(best == 1, "golden changed: minimum is " + std::to_string(best));
        c.expect(min_local_numbering(s3).value == best, "branch and bound disagrees");
        return c;
    });

    criterion(7, "oracle equivalences: max_diamond, best_complete_pair, chi_all_subsets", 900, [] {
        Check c;
        for (int n = 1; n <= 6; ++n)
            for (const Tournament& t : enumerate_all(n)) {
                const auto d = max_diamond(t);
                c.expect((d ? d->chromatic : 0) == oracle::max_diamond(t), "max_diamond differs on " + to_compact(t));
            }
        std::mt19937_64 rng(20240307);
        for (int trial = 0; trial < 50; ++trial) {
            const Tournament t = random_tournament(1 + static_cast<int>(rng() % 7), rng());
            c.expect(best_complete_pair(t).quality == oracle::best_complete_pair(t),
                     "best_complete_pair differs on " + to_compact(t));
        }
        for (int trial = 0; trial < 20; ++trial) {
            const Tournament t = random_tournament(1 + static_cast<int>(rng() % 12), rng());
            const ChiTable table = chi_all_subsets(t);
            for (int k = 0; k < 200; ++k) {
                const VertexSet s = VertexSet{rng()} & t.vertices();
                c.expect(table(s) == chi(t, s), "table differs on " + to_compact(t) + " " + s.to_string());
            }
        }
        return c;
    });

    criterion(8, "canonical counts 1,1,2,4,12 and byte-identical corpus files", 60, [] {
        Check c;
        const std::size_t expected[] = {1, 1, 2, 4, 12};
        for (int n = 1; n <= 5; ++n) {
            const std::size_t lib = enumerate_all(n).size(), ref = oracle::class_count(n);
            c.expect(lib == expected[n - 1] && ref == expected[n - 1],
                     "n = " + std::to_string(n) + ": " + std::to_string(lib) + " vs oracle " + std::to_string(ref));
        }
        const auto dir = std::filesystem::temp_directory_path();
        const auto write = [&](const std::filesystem::path& path) {
            std::vector<Tournament> all;
            for (int n = 1; n <= 6; ++n)
                for (auto& t : enumerate_all(n)) all.push_back(std::move(t));
            std::ofstream f(path, std::ios::binary);
            write_corpus(f, all);
        };
        const auto a = dir / "tourlab_corpus_a.txt", b = dir / "tourlab_corpus_b.txt";
        write(a);
        write(b);
        auto slurp = [](const std::filesystem::path& p) {
            std::ifstream f(p, std::ios::binary);
            std::stringstream s;
            s << f.rdbuf();
            return s.str();
        };
        c.expect(!slurp(a).empty() && slurp(a) == slurp(b), "corpus files differ");
        std::filesystem::remove(a);
        std::filesystem::remove(b);
        return c;
    });

    criterion(9, "legend frontier for transitive 2-vertex patterns, n <= 6 (golden 1)", 600, [] {
        Check c;
        for (const Numbering& sigma : {Numbering::identity(2), Numbering::reversed(2)}) {
            const SearchReport r = legend_frontier(Tournament::transitive(2), sigma, {.n_max = 6, .threads = threads()});
            const int frontier = r.results.at("frontier").get<int>();
            c.expect(r.outcome == "exhausted" && frontier < 8, "dom >= 8 while avoiding the pattern");
            c.expect(frontier == 1, "golden changed: frontier is " + std::to_string(frontier));
        }
        return c;
    });

    criterion(10, "edom(N+(v)) = 1 and edom(V) = dom on all canonical tournaments, n <= 6", 60, [] {
        Check c;
        for (int n = 1; n <= 6; ++n)
            for (const Tournament& t : enumerate_all(n)) {
                for (int v = 0; v < n; ++v)
                    if (!t.out(v).empty())
                        c.expect(edom(t, t.out(v)) == 1 && oracle::edom(t, t.out(v)) == 1,
                                 "edom(N+(" + std::to_string(v) + ")) != 1 on " + to_compact(t));
                c.expect(edom(t, t.vertices()) == dom(t) && oracle::edom(t, t.vertices()) == oracle::dom(t),
                         "edom(V) != dom on " + to_compact(t));
            }
        return c;
    });

    criterion(11, "chi2 (c = 2) and tribip (d = 2) scans to n = 6 with re-validated outcomes", 1800, [] {
        Check c;
        for (const SearchReport& r : {scan_chi2(2, {.n_max = 6, .threads = threads()}),
                                      scan_tribip(2, {.n_max = 6, .threads = threads()})}) {
            const SearchReport back = report_from_json(Json::parse(report_text(r)));
            c.expect(back.outcome == "exhausted" || revalidate(back), r.scan + " witness fails re-validation");
            std::printf("     %s: %s%s\n", r.scan.c_str(), r.outcome.c_str(),
                        r.witness ? (" " + r.witness->dump()).c_str() : "");
        }
        return c;
    });

    std::printf("%s: %d failing criteria\n", failures ? "FAIL" : "PASS", failures);
    return failures ? 1 : 0;
}
