#include "rcw/constructions.hpp"

#include "rcw/detect.hpp"
#include "rcw/errors.hpp"
#include "rcw/rng.hpp"

namespace rcw::constructions {

CompleteColoring two_clique_coloring(int m) {
    if (m < 3) throw precondition_error("two_clique_coloring needs m >= 3");
    std::vector<std::pair<int, int>> red;
    for (int u = 0; u < m; ++u)
        for (int v = m; v < 2 * m; ++v) red.emplace_back(u, v);
    return CompleteColoring::make(2 * m, red);
}

CompleteColoring three_clique_coloring(int s1, int s2, int s3) {
    if (s1 < 1 || s2 < 1 || s3 < 1) throw precondition_error("block sizes must be >= 1");
    int n = s1 + s2 + s3;
    std::vector<std::pair<int, int>> red;
    auto clique = [&](int lo, int hi) {
        for (int u = lo; u < hi; ++u)
            for (int v = u + 1; v < hi; ++v) red.emplace_back(u, v);
    };
    clique(0, s1);
    clique(s1, s1 + s2);
    clique(s1 + s2, n);
    return CompleteColoring::make(n, red);
}

Graph brandt_gadget(int m) {
    if (m < 2) throw precondition_error("brandt_gadget needs m >= 2");
    int n = 4 * m - 1;
    Graph g(n);
    // Block 1: sides {0..m-1} x {m..2m-1}. Block 2 shares vertex 2m-1 on its
    // first side {2m-1..3m-2}, second side {3m-1..4m-2}.
    for (int u = 0; u < m; ++u)
        for (int v = m; v < 2 * m; ++v) g.add_edge(u, v);
    for (int u = 2 * m - 1; u < 3 * m - 1; ++u)
        for (int v = 3 * m - 1; v < 4 * m - 1; ++v) g.add_edge(u, v);
    // Lowest labels opposite the shared vertex in each block.
    g.add_edge(0, 3 * m - 1);
    return g;
}

CompleteColoring nikiforov_two_clique(int k) {
    if (k < 2) throw precondition_error("nikiforov_two_clique needs k >= 2");
    std::vector<std::pair<int, int>> red;
    auto clique = [&](int lo, int hi) {
        for (int u = lo; u < hi; ++u)
            for (int v = u + 1; v < hi; ++v) red.emplace_back(u, v);
    };
    clique(0, 2 * k);
    clique(2 * k, 4 * k);
    return CompleteColoring::make(4 * k, red);
}

CompleteColoring mutate_preserving_avoidance(const CompleteColoring& c, int k, int flips,
                                             std::uint64_t seed, const Budget& b) {
    if (k < 1 || flips < 0) throw precondition_error("bad mutation parameters");
    int target = 2 * k + 1;
    auto base = detect::avoidance_check(c, target, target, b);
    if (base.kind == detect::AvoidanceResult::Kind::Unknown)
        throw budget_exceeded_error("avoidance check ran out of budget");
    if (!base.ok()) throw precondition_error("input coloring fails the avoidance check");

    SeededRng rng(seed);
    CompleteColoring cur = c;
    int n = c.order();
    std::uint64_t pairs = static_cast<std::uint64_t>(n) * (n - 1) / 2;
    for (int i = 0; i < flips; ++i) {
        // Unrank a lexicographic pair index; the draw happens whether or not
        // the flip is accepted.
        std::uint64_t idx = rng.below(pairs);
        int u = 0;
        std::uint64_t row = static_cast<std::uint64_t>(n - 1);
        while (idx >= row) {
            idx -= row;
            ++u;
            --row;
        }
        int v = u + 1 + static_cast<int>(idx);

        CompleteColoring candidate = cur.with_flipped(u, v);
        auto check = detect::avoidance_check(candidate, target, target, b);
        if (check.kind == detect::AvoidanceResult::Kind::Unknown)
            throw budget_exceeded_error("avoidance check ran out of budget during mutation");
        if (check.ok()) cur = std::move(candidate);
    }
    return cur;
}

}  // namespace rcw::constructions
