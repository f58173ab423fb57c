#pragma once

#include <array>
#include <optional>
#include <set>
#include <vector>

#include "rcw/budget.hpp"
#include "rcw/coloring.hpp"
#include "rcw/witness.hpp"

namespace rcw::detect {

/// Three-valued search outcome. Absent is asserted only after an exhaustive
/// search; Unknown means the node budget ran out first.
enum class Presence { Found, Absent, Unknown };

struct CycleSearch {
    Presence status = Presence::Absent;
    std::optional<CycleWitness> witness;
    std::uint64_t nodes = 0;
};

struct WheelSearch {
    Presence status = Presence::Absent;
    std::optional<WheelWitness> witness;
    std::uint64_t nodes = 0;
};

/// Exact search for a cycle of length exactly t. The search anchors each
/// candidate cycle at its minimum-labeled vertex and extends by ascending
/// neighbor label, so rotations and reflections are enumerated once and the
/// first witness is deterministic. Cycles live inside biconnected
/// components, which are filtered by size and (for odd t) bipartiteness
/// before any backtracking starts.
CycleSearch find_cycle(const Graph& g, int t, const Budget& b = {});

/// Wheel with rim length m: per-hub decomposition, running find_cycle on the
/// subgraph induced by each neighborhood, hubs ascending.
WheelSearch find_wheel(const Graph& g, int m, const Budget& b = {});

struct SpectrumReport {
    std::set<int> present_lengths;
    std::optional<int> girth;          // min present length
    std::optional<int> circumference;  // max present length
    bool exhaustive = true;            // false iff the budget cut the search

    bool contains(int t) const { return present_lengths.count(t) != 0; }
};

/// Full cycle spectrum: find_cycle for every length in [3, n] under a shared
/// budget. present_lengths is exactly the spectrum when exhaustive.
SpectrumReport cycle_spectrum(const Graph& g, const Budget& b = {});

/// Shortest cycle length via BFS from every root (exact, polynomial).
/// nullopt on forests (infinite girth).
std::optional<int> girth(const Graph& g);

struct CircumferenceResult {
    int value = 0;   // 0 = no cycle found
    bool exact = true;
};

/// Longest cycle via descending-t find_cycle, sharing the degree and
/// connectivity bounds (2-core, biconnected component sizes). Under budget
/// exhaustion the value found so far is a lower bound with exact=false.
CircumferenceResult circumference(const Graph& g, const Budget& b = {});

enum class Ternary { False, True, Unknown };

/// Cycles of every length in [3, n]. Requires n >= 3.
Ternary is_pancyclic(const Graph& g, const Budget& b = {});
/// Cycles of every length in [girth, circumference]; vacuously true on forests.
Ternary is_weakly_pancyclic(const Graph& g, const Budget& b = {});

struct BipartitionResult {
    bool bipartite = true;
    std::array<VertexSet, 2> parts;        // set when bipartite
    std::optional<CycleWitness> odd_cycle; // set when not

    bool is_bipartite() const { return bipartite; }
};

/// Two-colors each component by BFS; part 0 holds every component's
/// minimum-labeled vertex. On failure returns the odd cycle closed by the
/// first conflicting edge.
BipartitionResult is_bipartite(const Graph& g);

struct TwoConnectedResult {
    bool two_connected = false;
    // Disconnecting set of size <= 1 when not 2-connected: empty when the
    // graph is already disconnected, else the first articulation vertex.
    std::vector<int> cut;
};

/// Requires n >= 3.
TwoConnectedResult is_two_connected(const Graph& g);

struct DisjointPathsResult {
    int count = 0;
    std::vector<PathWitness> paths;
    // Present when count < cap: a vertex set of size == count meeting every
    // (A,B)-path.
    std::optional<std::vector<int>> separator;
};

/// Maximum number (capped at cap, cap in {1,2}) of vertex-disjoint paths
/// with one endpoint in A, the other in B and no interior vertex in either.
/// Implemented as rounds of augmenting search with unit vertex capacities.
DisjointPathsResult max_disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b,
                                       int cap);

/// True iff X is a clique and every (W \ X, X) pair is an edge. X must be a
/// subset of W.
bool verify_hedgehog(const Graph& g, const VertexSet& w, const VertexSet& x);

/// Path of length exactly L between distinct u, v in W with all interior
/// vertices inside X. Requires a valid hedgehog, |X| >= 3 and
/// 2 <= L <= |X| - 1. Constructive, no search.
PathWitness hedgehog_path(const Graph& g, const VertexSet& w, const VertexSet& x, int u, int v,
                          int L);

struct AvoidanceResult {
    enum class Kind { Ok, RedCycle, BlueWheel, Unknown };
    Kind kind = Kind::Ok;
    std::optional<CycleWitness> red_cycle;
    std::optional<WheelWitness> blue_wheel;
    std::uint64_t nodes = 0;

    bool ok() const { return kind == Kind::Ok; }
};

/// Ok only when the red graph has no C_{redCycleLen} and the blue graph has
/// no W with rim blueWheelRim, both proved exhaustively. Red is checked
/// first; the first witness found is returned.
AvoidanceResult avoidance_check(const CompleteColoring& c, int red_cycle_len, int blue_wheel_rim,
                                const Budget& b = {});

/// Vertex sets of the biconnected components (components spanning at least
/// one edge). Shared by the cycle searches and exposed for reuse.
std::vector<VertexSet> biconnected_components(const Graph& g);

/// Connected component containing each vertex, -1 for none (n == 0).
std::vector<int> component_ids(const Graph& g);

/// Cycle of length exactly t through the edge (u, v). Exhaustive within the
/// supplied counter; used by the incremental arrowing checks.
std::optional<CycleWitness> find_cycle_through_edge(const Graph& g, int t, int u, int v,
                                                    SearchCounter& counter);

/// Cycle of length exactly t through the vertex v.
std::optional<CycleWitness> find_cycle_through_vertex(const Graph& g, int t, int v,
                                                      SearchCounter& counter);

}  // namespace rcw::detect
