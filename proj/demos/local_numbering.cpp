// Minimum local chromatic number of S_3 and the numbering that achieves it,
// compared with the identity numbering and the diamond-free construction.

#include "tourlab/tourlab.hpp"

#include <cstdio>

using namespace tourlab;

int main() {
    const Tournament s3 = s_t(3);
    const OrderedTournament identity{s3, Numbering::identity(s3.size())};
    std::printf("S_3: %d vertices, chi = %d, dom = %d\n", s3.size(), chi(s3), dom(s3));
    std::printf("identity numbering: local %d, strong %d, backedge clique %d\n", local_chromatic_number(identity),
                strong_chromatic_number(identity), numbering_clique(identity));

    const LocalNumbering best = min_local_numbering(s3);
    std::printf("minimum local chromatic number: %d, order:", best.value);
    for (int v : best.order.perm()) std::printf(" %d", v);
    std::printf("\n");
    const OrderedTournament ot{s3, best.order};
    for (int v = 0; v < s3.size(); ++v) std::printf("  local set of %d: %s\n", v, local_set(ot, v).to_string().c_str());

    for (int c = 0; c <= 1; ++c) {
        const auto r = diamond_free_numbering(s3, c);
        if (const auto* nb = std::get_if<Numbering>(&r))
            std::printf("threshold c = %d: numbering with local %d\n", c, local_chromatic_number({s3, *nb}));
        else
            std::printf("threshold c = %d: diamond of chromatic number %d\n", c, std::get<Diamond>(r).chromatic);
    }
}
