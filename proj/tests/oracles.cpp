#include "oracles.hpp"

#include <algorithm>
#include <vector>

namespace oracle {

using rcw::Graph;

namespace {

bool cyclic_ordering_exists(const Graph& g, std::vector<int>& subset) {
    // First element pinned (min of the subset); permute the rest.
    std::sort(subset.begin() + 1, subset.end());
    do {
        bool ok = true;
        for (std::size_t i = 0; i < subset.size() && ok; ++i)
            if (!g.adjacent(subset[i], subset[(i + 1) % subset.size()])) ok = false;
        if (ok) return true;
    } while (std::next_permutation(subset.begin() + 1, subset.end()));
    return false;
}

bool has_cycle_rec(const Graph& g, int t, int from, std::vector<int>& subset) {
    if (static_cast<int>(subset.size()) == t) return cyclic_ordering_exists(g, subset);
    for (int v = from; v < g.order(); ++v) {
        subset.push_back(v);
        if (has_cycle_rec(g, t, v + 1, subset)) return true;
        subset.pop_back();
    }
    return false;
}

}  // namespace

bool has_cycle(const Graph& g, int t) {
    if (t < 3 || t > g.order()) return false;
    std::vector<int> subset;
    return has_cycle_rec(g, t, 0, subset);
}

std::set<int> cycle_lengths(const Graph& g) {
    std::set<int> out;
    for (int t = 3; t <= g.order(); ++t)
        if (has_cycle(g, t)) out.insert(t);
    return out;
}

std::optional<int> girth(const Graph& g) {
    for (int t = 3; t <= g.order(); ++t)
        if (has_cycle(g, t)) return t;
    return std::nullopt;
}

bool has_wheel(const Graph& g, int m) {
    for (int hub = 0; hub < g.order(); ++hub) {
        std::vector<int> map;
        Graph h = g.induced(g.neighbors(hub), &map);
        if (has_cycle(h, m)) return true;
    }
    return false;
}

bool arrows_cycles(int n, int red_len, int blue_len) {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) pairs.emplace_back(u, v);
    std::uint64_t total = 1ULL << pairs.size();
    for (std::uint64_t mask = 0; mask < total; ++mask) {
        Graph red(n), blue(n);
        for (std::size_t i = 0; i < pairs.size(); ++i)
            ((mask >> i) & 1 ? red : blue).add_edge(pairs[i].first, pairs[i].second);
        if (!has_cycle(red, red_len) && !has_cycle(blue, blue_len)) return false;
    }
    return true;
}

Graph petersen() {
    Graph g(10);
    for (int i = 0; i < 5; ++i) {
        g.add_edge(i, (i + 1) % 5);        // outer pentagon
        g.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
        g.add_edge(i, 5 + i);              // spokes
    }
    return g;
}

}  // namespace oracle
