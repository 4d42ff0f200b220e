// A random crossing tournament: its canonical numbering keeps every local
// set transitive-coverable by two classes, and S_3 never appears.

#include "tourlab/tourlab.hpp"

#include <cstdio>
#include <random>

using namespace tourlab;

int main(int argc, char** argv) {
    const int pairs = argc > 1 ? std::atoi(argv[1]) : 12;
    std::mt19937_64 rng(argc > 2 ? std::strtoull(argv[2], nullptr, 10) : 7);
    const CrossingTournament x = crossing(random_matching(pairs, rng));
    const OrderedTournament ot{x.t, x.canonical()};
    const Graph g = backedge_graph(ot);

    std::printf("matching: %s\n", to_matching_text(x.matching).c_str());
    std::printf("tournament: %s\n", to_compact(x.t).c_str());
    std::printf("chi = %d, dom = %d\n", chi(x.t), dom(x.t));
    std::printf("canonical numbering: local %d, strong %d, backedges %d (crossing pairs)\n", local_chromatic_number(ot),
                strong_chromatic_number(ot), g.edge_count());
    std::printf("contains S_3: %s\n", contains(x.t, s_t(3)) ? "yes" : "no");
    const auto r = diamond_free_numbering(x.t, 2);
    std::printf("diamond-free numbering at c = 2: %s\n", std::holds_alternative<Numbering>(r) ? "found" : "diamond");
}
