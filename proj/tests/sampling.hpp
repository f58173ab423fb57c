#pragma once

// Seeded random graph and hedgehog generators shared by the property suites
// and the acceptance runner.

#include "rcw/graph.hpp"
#include "rcw/rng.hpp"

namespace sampling {

/// G(n, pct/100): one coin per pair, lexicographic order.
inline rcw::Graph random_graph(int n, int pct, rcw::SeededRng& rng) {
    rcw::Graph g(n);
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.below(100) < static_cast<std::uint64_t>(pct)) g.add_edge(u, v);
    return g;
}

struct HedgehogFixture {
    rcw::Graph graph;
    rcw::VertexSet w;
    rcw::VertexSet x;
};

/// Hedgehog (W, X): X a clique of size in [3, 12], W of size up to 20; the
/// edges inside W \ X are random, which the definition leaves free.
inline HedgehogFixture random_hedgehog(rcw::SeededRng& rng) {
    int xc = 3 + rng.below_int(10);           // |X| in [3, 12]
    int extra = rng.below_int(21 - xc);       // |W \ X| keeps |W| <= 20
    int n = xc + extra;
    rcw::Graph g(n);
    for (int u = 0; u < xc; ++u)
        for (int v = u + 1; v < xc; ++v) g.add_edge(u, v);
    for (int w = xc; w < n; ++w)
        for (int u = 0; u < xc; ++u) g.add_edge(w, u);
    for (int a = xc; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            if (rng.coin()) g.add_edge(a, b);
    HedgehogFixture fx{std::move(g), rcw::VertexSet::full(n), rcw::VertexSet::full(xc)};
    return fx;
}

struct DoubleHedgehogFixture {
    rcw::Graph graph;
    int s1 = 0, s2 = 0;
};

/// Two disjoint hedgehogs with |S_i| >= 3 plus two disjoint cross edges.
inline DoubleHedgehogFixture random_double_hedgehog(rcw::SeededRng& rng) {
    int s1 = 3 + rng.below_int(6), extra1 = rng.below_int(4);
    int s2 = 3 + rng.below_int(6), extra2 = rng.below_int(4);
    int n1 = s1 + extra1, n2 = s2 + extra2;
    rcw::Graph g(n1 + n2);
    auto build = [&](int base, int xc, int total) {
        for (int u = 0; u < xc; ++u)
            for (int v = u + 1; v < xc; ++v) g.add_edge(base + u, base + v);
        for (int w = xc; w < total; ++w)
            for (int u = 0; u < xc; ++u) g.add_edge(base + w, base + u);
    };
    build(0, s1, n1);
    build(n1, s2, n2);
    // two disjoint cross edges
    int a1 = rng.below_int(n1), b1 = n1 + rng.below_int(n2);
    int a2 = rng.below_int(n1), b2 = n1 + rng.below_int(n2);
    while (a2 == a1) a2 = rng.below_int(n1);
    while (b2 == b1) b2 = n1 + rng.below_int(n2);
    g.add_edge(a1, b1);
    g.add_edge(a2, b2);
    return {std::move(g), s1, s2};
}

}  // namespace sampling
