#pragma once

#include <cstdint>

#include "rcw/budget.hpp"
#include "rcw/coloring.hpp"

namespace rcw::constructions {

/// K_{2m} with red = complete bipartite between {0..m-1} and {m..2m-1},
/// blue = the two m-cliques. The red graph is bipartite (no odd cycle) and
/// no blue wheel with rim >= m fits inside an m-clique, so this witnesses
/// r(C_odd, W_m) >= 2m+1. Requires m >= 3.
CompleteColoring two_clique_coloring(int m);

/// K_{s1+s2+s3} with red = three disjoint cliques on consecutive label
/// blocks and blue = the complete 3-partite graph between them. Sizes
/// (2k,2k,2k) witness r(C_{2k+1}, W_{2k+1}) >= 6k+1. Requires s_i >= 1.
CompleteColoring three_clique_coloring(int s1, int s2, int s3);

/// Two K_{m,m} blocks sharing one vertex plus one edge joining the lowest
/// opposite-side labels. n = 4m-1, minimum degree (n+1)/4, 2-connected,
/// Hamiltonian, has a triangle, but no even cycle longer than (n+1)/2.
/// Requires m >= 2.
Graph brandt_gadget(int m);

/// K_{4k} with red = two disjoint 2k-cliques, blue = complete bipartite
/// between them; neither color contains C_{2k+1}. Requires k >= 2.
CompleteColoring nikiforov_two_clique(int k);

/// Up to `flips` single-pair recolor attempts, seeded and reproducible; an
/// attempt is kept only when avoidance_check(result, 2k+1, 2k+1) still
/// passes. Rejected flips consume the same amount of randomness as accepted
/// ones, so fixtures do not shift when detection internals change. Requires
/// the input to pass the avoidance check itself; throws budget_exceeded_error
/// if a check comes back Unknown rather than risking an invalid fixture.
CompleteColoring mutate_preserving_avoidance(const CompleteColoring& c, int k, int flips,
                                             std::uint64_t seed, const Budget& b = {});

}  // namespace rcw::constructions
