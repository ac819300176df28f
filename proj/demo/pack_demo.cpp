// Minimal library tour: build a pair of graphs, decide packing, inspect a
// near-packing, and evaluate the sufficient conditions.

#include <iostream>

#include "gpack/gpack.hpp"

int main() {
    using namespace gpack;

    // C4 packs with 2.K2: the matching maps onto the diagonals
    const Graph c4 = cycle(4);
    const Graph m = matching(4);
    const PackingResult res = packs_exact(c4, m);
    std::cout << "C4 + 2K2 pack: " << (res.packs() ? "yes" : "no") << "\n";
    if (res.witness) {
        std::cout << "witness labeling:";
        for (int v : res.witness->perm) std::cout << " " << v;
        std::cout << "\n";
    }

    // the Sauer-Spencer sharpness pair does not pack
    const auto [g1, g2] = sauer_spencer_tight_pair(3);
    std::cout << "3K2 + (K4 u 2K1) pack: " << (packs_exact(g1, g2).packs() ? "yes" : "no")
              << "\n";

    // a near-packing and its first purple edge
    const NearPacking np(g1, g2, Labeling::identity(6));
    std::cout << "identity labeling has " << np.purple().size() << " purple edges\n";

    // closed-form machinery
    const AlphaStar a = alpha_star(2, 1);
    std::cout << "alpha*(2,1) = " << a.value << "\n";
    const auto verdict = evaluate_conditions(72, 35, 1, 1, 0, 2, 1);
    for (const auto& e : verdict.entries)
        std::cout << "  " << e.name << ": " << (e.holds ? "holds" : "-") << "\n";
    return 0;
}
