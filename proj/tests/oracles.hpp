#pragma once

// Brute-force oracles, independent of the library's search paths. Everything
// here enumerates subsets or orderings directly and is only meant for small
// graphs (n <= 8 or so).

#include <optional>
#include <set>

#include "rcw/coloring.hpp"
#include "rcw/graph.hpp"

namespace oracle {

/// Cycle of length exactly t by enumerating all t-subsets and all circular
/// orderings.
bool has_cycle(const rcw::Graph& g, int t);

/// All cycle lengths present, by has_cycle per t.
std::set<int> cycle_lengths(const rcw::Graph& g);

std::optional<int> girth(const rcw::Graph& g);

/// Wheel with rim m: hub choice plus rim cycle check within its neighborhood.
bool has_wheel(const rcw::Graph& g, int m);

/// Exhaustive arrowing over all 2^C(n,2) colorings; cycle targets only.
/// Returns true iff every coloring contains a red C_redLen or blue C_blueLen.
bool arrows_cycles(int n, int red_len, int blue_len);

rcw::Graph petersen();

}  // namespace oracle
