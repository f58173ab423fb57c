#include <doctest.h>

#include "oracles.hpp"
#include "rcw/detect.hpp"
#include "sampling.hpp"

// Classical-theorem property suites at unit scale; the acceptance runner
// repeats them with the full sample counts.

using namespace rcw;
using detect::Presence;
using detect::Ternary;
using sampling::random_graph;

TEST_CASE("find_cycle agrees with the subset oracle on small graphs") {
    SeededRng rng(101);
    for (int i = 0; i < 150; ++i) {
        int n = 3 + rng.below_int(6);  // 3..8
        Graph g = random_graph(n, 30 + rng.below_int(50), rng);
        for (int t = 3; t <= n; ++t) {
            auto r = detect::find_cycle(g, t);
            REQUIRE(r.status != Presence::Unknown);
            bool expect = oracle::has_cycle(g, t);
            CAPTURE(n);
            CAPTURE(t);
            CHECK((r.status == Presence::Found) == expect);
            if (r.witness) CHECK(r.witness->validate(g));
        }
    }
}

TEST_CASE("girth matches the oracle") {
    SeededRng rng(102);
    for (int i = 0; i < 200; ++i) {
        int n = 3 + rng.below_int(6);
        Graph g = random_graph(n, 20 + rng.below_int(60), rng);
        CHECK(detect::girth(g) == oracle::girth(g));
    }
}

TEST_CASE("cycle_spectrum matches the oracle") {
    SeededRng rng(103);
    for (int i = 0; i < 80; ++i) {
        int n = 3 + rng.below_int(5);
        Graph g = random_graph(n, 30 + rng.below_int(50), rng);
        auto rep = detect::cycle_spectrum(g);
        REQUIRE(rep.exhaustive);
        CHECK(rep.present_lengths == oracle::cycle_lengths(g));
    }
}

TEST_CASE("find_wheel matches the oracle") {
    SeededRng rng(104);
    for (int i = 0; i < 80; ++i) {
        int n = 4 + rng.below_int(4);
        Graph g = random_graph(n, 40 + rng.below_int(40), rng);
        for (int m = 3; m < n; ++m) {
            auto r = detect::find_wheel(g, m);
            REQUIRE(r.status != Presence::Unknown);
            CHECK((r.status == Presence::Found) == oracle::has_wheel(g, m));
            if (r.witness) CHECK(r.witness->validate(g));
        }
    }
}

TEST_CASE("Bondy: min degree n/2 forces pancyclic or balanced complete bipartite") {
    SeededRng rng(105);
    int checked = 0;
    while (checked < 120) {
        int n = 4 + rng.below_int(9);  // 4..12
        Graph g = random_graph(n, 55 + rng.below_int(35), rng);
        if (2 * g.min_degree() < n) continue;
        ++checked;
        bool pan = detect::is_pancyclic(g) == Ternary::True;
        if (!pan) {
            // must be K_{n/2, n/2}: balanced complete bipartite
            auto bip = detect::is_bipartite(g);
            REQUIRE(bip.bipartite);
            CHECK(n % 2 == 0);
            CHECK(bip.parts[0].count() == n / 2);
            CHECK(g.edge_count() == static_cast<std::size_t>(n / 2) * (n / 2));
        }
    }
}

TEST_CASE("Dirac corollary: min degree above n/2 forces pancyclic") {
    SeededRng rng(106);
    int checked = 0;
    while (checked < 120) {
        int n = 4 + rng.below_int(9);
        Graph g = random_graph(n, 55 + rng.below_int(35), rng);
        if (2 * g.min_degree() <= n) continue;
        ++checked;
        CHECK(detect::is_pancyclic(g) == Ternary::True);
    }
}

TEST_CASE("Brandt: dense non-bipartite graphs are weakly pancyclic with a triangle") {
    SeededRng rng(107);
    int checked = 0;
    while (checked < 120) {
        int n = 4 + rng.below_int(9);
        Graph g = random_graph(n, 45 + rng.below_int(45), rng);
        if (detect::is_bipartite(g).bipartite) continue;
        if (4 * g.edge_count() <= static_cast<std::size_t>(n - 1) * (n - 1) + 4) continue;
        ++checked;
        CHECK(detect::is_weakly_pancyclic(g) == Ternary::True);
        CHECK(detect::find_cycle(g, 3).status == Presence::Found);
    }
}

TEST_CASE("girth bound: min degree n/4 keeps girth at most 5") {
    SeededRng rng(108);
    int checked = 0;
    while (checked < 150) {
        int n = 9 + rng.below_int(4);  // 9..12
        Graph g = random_graph(n, 25 + rng.below_int(60), rng);
        if (4 * g.min_degree() < n) continue;
        ++checked;
        auto girth = detect::girth(g);
        REQUIRE(girth.has_value());
        CHECK(*girth <= 5);
    }
}

TEST_CASE("Dirac circumference bound on 2-connected graphs") {
    SeededRng rng(109);
    int checked = 0;
    while (checked < 120) {
        int n = 4 + rng.below_int(9);
        Graph g = random_graph(n, 40 + rng.below_int(45), rng);
        if (!detect::is_two_connected(g).two_connected) continue;
        ++checked;
        auto circ = detect::circumference(g);
        REQUIRE(circ.exact);
        CHECK(circ.value >= std::min(2 * g.min_degree(), n));
    }
}

TEST_CASE("hedgehog paths exist for every pair and every feasible length") {
    SeededRng rng(110);
    for (int i = 0; i < 60; ++i) {
        auto fx = sampling::random_hedgehog(rng);
        REQUIRE(detect::verify_hedgehog(fx.graph, fx.w, fx.x));
        int xc = fx.x.count();
        for (int u = 0; u < fx.graph.order(); ++u)
            for (int v = u + 1; v < fx.graph.order(); ++v)
                for (int len = 2; len <= xc - 1; ++len) {
                    auto p = detect::hedgehog_path(fx.graph, fx.w, fx.x, u, v, len);
                    REQUIRE(p.validate(fx.graph));
                    REQUIRE(p.length() == len);
                    REQUIRE(p.vertices.front() == u);
                    REQUIRE(p.vertices.back() == v);
                    for (std::size_t j = 1; j + 1 < p.vertices.size(); ++j)
                        REQUIRE(fx.x.test(p.vertices[j]));
                }
    }
}

TEST_CASE("two linked hedgehogs carry cycles of every length between 6 and |S1|+|S2|") {
    SeededRng rng(111);
    for (int i = 0; i < 25; ++i) {
        auto fx = sampling::random_double_hedgehog(rng);
        for (int t = 6; t <= fx.s1 + fx.s2; ++t) {
            CAPTURE(t);
            REQUIRE(detect::find_cycle(fx.graph, t).status == Presence::Found);
        }
    }
}

TEST_CASE("almost-bipartite plus one inside edge is pancyclic") {
    for (int k = 1; k <= 5; ++k) {
        Graph g(2 * k + 1);
        for (int u = 0; u <= k; ++u)
            for (int v = k + 1; v <= 2 * k; ++v) g.add_edge(u, v);
        g.add_edge(0, 1);  // inside the (k+1)-side
        CHECK(detect::is_pancyclic(g) == Ternary::True);
    }
}
