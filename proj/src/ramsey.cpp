#include "rcw/ramsey.hpp"

#include <algorithm>
#include <atomic>
#include <stdexcept>
#include <thread>

#include "rcw/constructions.hpp"
#include "rcw/detect.hpp"
#include "rcw/errors.hpp"
#include "rcw/json_io.hpp"
#include "rcw/rng.hpp"

namespace rcw::ramsey {

TargetSpec TargetSpec::cycle(int t) {
    if (t < 3) throw precondition_error("cycle target needs size >= 3");
    return {Kind::Cycle, t};
}

TargetSpec TargetSpec::wheel(int m) {
    if (m < 3) throw precondition_error("wheel target needs rim >= 3");
    return {Kind::Wheel, m};
}

std::string TargetSpec::str() const {
    return (kind == Kind::Cycle ? "cycle:" : "wheel:") + std::to_string(size);
}

TargetSpec TargetSpec::parse(const std::string& s) {
    auto colon = s.find(':');
    if (colon == std::string::npos) throw precondition_error("target must be cycle:<t> or wheel:<m>");
    std::string head = s.substr(0, colon);
    int size = 0;
    try {
        size = std::stoi(s.substr(colon + 1));
    } catch (const std::exception&) {
        throw precondition_error("bad target size in \"" + s + "\"");
    }
    if (head == "cycle") return cycle(size);
    if (head == "wheel") return wheel(size);
    throw precondition_error("unknown target kind \"" + head + "\"");
}

namespace {

// ---------------------------------------------------------------------------
// Incremental target detectors over the decided edges of one color. All are
// exhaustive on graphs of arrowing scale (n <= ~16); the arrowing node
// budget counts edge assignments, not these inner probes.
// ---------------------------------------------------------------------------

struct EdgePathDfs {
    const std::vector<VertexSet>& rows;
    VertexSet allowed;  // interior candidates
    int total = 0;      // cycle length
    int goal = -1;      // the path must end adjacent to this vertex
    VertexSet used;

    bool go(int x, int cnt) {
        if (cnt == total - 1) return rows[x].test(goal);
        VertexSet cand = rows[x] & allowed;
        for (int w = cand.first(); w >= 0; w = cand.next_above(w)) {
            if (used.test(w)) continue;
            used.set(w);
            if (go(w, cnt + 1)) return true;
            used.reset(w);
        }
        return false;
    }
};

/// Cycle of length t through edge {u, v}, vertices within `subset`.
bool cycle_through_edge_in(const std::vector<VertexSet>& rows, const VertexSet& subset, int t,
                           int u, int v) {
    if (subset.count() < t) return false;
    EdgePathDfs dfs{rows, subset, t, v, {}};
    dfs.used.set(u);
    dfs.used.set(v);
    return dfs.go(u, 1);
}

struct AnchorCycleDfs {
    const std::vector<VertexSet>& rows;
    VertexSet allowed;
    int total = 0;
    int anchor = -1;
    int second = -1;
    VertexSet used;

    bool go(int x, int cnt) {
        VertexSet cand = rows[x] & allowed;
        for (int w = cand.first(); w >= 0; w = cand.next_above(w)) {
            if (used.test(w)) continue;
            if (cnt == total - 1) {
                if (second < w && rows[w].test(anchor)) return true;
                continue;
            }
            if (cnt == 1) second = w;
            used.set(w);
            if (go(w, cnt + 1)) return true;
            used.reset(w);
        }
        return false;
    }
};

/// Cycle of length t through vertex v, vertices within `subset`.
bool cycle_through_vertex_in(const std::vector<VertexSet>& rows, const VertexSet& subset, int t,
                             int v) {
    if ((subset | VertexSet::single(v)).count() < t) return false;
    AnchorCycleDfs dfs{rows, subset, t, v, -1, {}};
    dfs.used.set(v);
    return dfs.go(v, 1);
}

/// Wheel with rim m using edge {u, v}: as a spoke from either endpoint or as
/// a rim edge under any common neighbor hub.
bool wheel_through_edge(const std::vector<VertexSet>& rows, int m, int u, int v) {
    if (cycle_through_vertex_in(rows, rows[u], m, v)) return true;
    if (cycle_through_vertex_in(rows, rows[v], m, u)) return true;
    VertexSet hubs = rows[u] & rows[v];
    for (int h = hubs.first(); h >= 0; h = hubs.next_above(h))
        if (cycle_through_edge_in(rows, rows[h], m, u, v)) return true;
    return false;
}

bool completes_target(const std::vector<VertexSet>& rows, const VertexSet& everything,
                      const TargetSpec& tgt, int u, int v) {
    if (tgt.kind == TargetSpec::Kind::Cycle)
        return cycle_through_edge_in(rows, everything, tgt.size, u, v);
    return wheel_through_edge(rows, tgt.size, u, v);
}

struct ArrowsSearcher {
    int n;
    TargetSpec red_target, blue_target;
    bool symmetry;
    SearchCounter counter;

    std::vector<std::pair<int, int>> edges;
    std::vector<Color> colors;
    std::vector<VertexSet> red, blue;
    VertexSet everything;
    std::optional<CompleteColoring> found;

    ArrowsSearcher(int n_, TargetSpec rt, TargetSpec bt, bool sym, const Budget& b)
        : n(n_), red_target(rt), blue_target(bt), symmetry(sym), counter(b), red(n_), blue(n_) {
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v) edges.emplace_back(u, v);
        colors.resize(edges.size(), Color::Red);
        everything = VertexSet::full(n);
    }

    void set_edge(int u, int v, Color c) {
        auto& rows = c == Color::Red ? red : blue;
        rows[u].set(v);
        rows[v].set(u);
    }
    void unset_edge(int u, int v, Color c) {
        auto& rows = c == Color::Red ? red : blue;
        rows[u].reset(v);
        rows[v].reset(u);
    }

    bool allowed(std::size_t depth, int u, int v, Color c) const {
        // Vertex 0's row must be a blue block followed by a red block.
        if (!symmetry || u != 0 || v < 2) return true;
        return !(colors[depth - 1] == Color::Red && c == Color::Blue);
    }

    CompleteColoring snapshot() const {
        std::vector<std::pair<int, int>> red_pairs;
        for (std::size_t i = 0; i < edges.size(); ++i)
            if (colors[i] == Color::Red) red_pairs.push_back(edges[i]);
        return CompleteColoring::make(n, red_pairs);
    }

    enum class Res { Exhausted, Found, Budget };

    Res dfs(std::size_t depth) {
        if (depth == edges.size()) {
            found = snapshot();
            return Res::Found;
        }
        auto [u, v] = edges[depth];
        for (Color c : {Color::Red, Color::Blue}) {
            if (!allowed(depth, u, v, c)) continue;
            if (!counter.tick()) return Res::Budget;
            set_edge(u, v, c);
            colors[depth] = c;
            Res r = Res::Exhausted;
            const auto& rows = c == Color::Red ? red : blue;
            const TargetSpec& tgt = c == Color::Red ? red_target : blue_target;
            if (!completes_target(rows, everything, tgt, u, v)) r = dfs(depth + 1);
            unset_edge(u, v, c);
            if (r != Res::Exhausted) return r;
        }
        return Res::Exhausted;
    }

    /// Replays a fixed prefix (already known consistent), then searches.
    Res run_from_prefix(const std::vector<Color>& prefix) {
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            auto [u, v] = edges[i];
            set_edge(u, v, prefix[i]);
            colors[i] = prefix[i];
        }
        return dfs(prefix.size());
    }
};

/// Consistent partial assignments of the first `depth` edges; each becomes an
/// independent subtree task in parallel mode.
void collect_prefixes(ArrowsSearcher& s, std::size_t depth, std::size_t at,
                      std::vector<Color>& cur, std::vector<std::vector<Color>>& out) {
    if (at == depth || at == s.edges.size()) {
        out.push_back(cur);
        return;
    }
    auto [u, v] = s.edges[at];
    for (Color c : {Color::Red, Color::Blue}) {
        if (!s.allowed(at, u, v, c)) continue;
        s.set_edge(u, v, c);
        s.colors[at] = c;
        cur.push_back(c);
        const auto& rows = c == Color::Red ? s.red : s.blue;
        const TargetSpec& tgt = c == Color::Red ? s.red_target : s.blue_target;
        if (!completes_target(rows, s.everything, tgt, u, v))
            collect_prefixes(s, depth, at + 1, cur, out);
        cur.pop_back();
        s.unset_edge(u, v, c);
    }
}

void verify_counterexample(const CompleteColoring& c, TargetSpec red, TargetSpec blue) {
    bool red_ok, blue_ok;
    if (red.kind == TargetSpec::Kind::Cycle)
        red_ok = detect::find_cycle(c.red_graph(), red.size).status == detect::Presence::Absent;
    else
        red_ok = detect::find_wheel(c.red_graph(), red.size).status == detect::Presence::Absent;
    if (blue.kind == TargetSpec::Kind::Cycle)
        blue_ok = detect::find_cycle(c.blue_graph(), blue.size).status == detect::Presence::Absent;
    else
        blue_ok = detect::find_wheel(c.blue_graph(), blue.size).status == detect::Presence::Absent;
    if (!red_ok || !blue_ok)
        throw std::logic_error("arrowing search produced an invalid counterexample");
}

}  // namespace

Verdict arrows(int n, TargetSpec red, TargetSpec blue, const ArrowsOptions& opt) {
    if (n < 1) throw precondition_error("arrows needs n >= 1");
    if (n > VertexSet::kCapacity) throw precondition_error("n beyond supported order");

    Verdict verdict;
    if (opt.threads <= 1) {
        ArrowsSearcher s(n, red, blue, opt.symmetry_breaking, opt.budget);
        auto r = s.dfs(0);
        verdict.nodes = s.counter.nodes;
        if (r == ArrowsSearcher::Res::Found) {
            verify_counterexample(*s.found, red, blue);
            verdict.kind = Verdict::Kind::Counterexample;
            verdict.coloring = std::move(s.found);
        } else if (r == ArrowsSearcher::Res::Budget) {
            verdict.kind = Verdict::Kind::Unknown;
        } else {
            verdict.kind = Verdict::Kind::Arrows;
        }
        return verdict;
    }

    // Parallel mode: split the tree at a fixed small depth into subtree
    // tasks, each with its own budget slice. Tasks run to their own first
    // counterexample or exhaustion, so the merged result is deterministic;
    // the lexicographically least canonical document wins when several tasks
    // find counterexamples.
    std::size_t split_depth = 1;
    while ((1u << split_depth) < static_cast<unsigned>(opt.threads) * 4 && split_depth < 10)
        ++split_depth;
    std::vector<std::vector<Color>> prefixes;
    {
        ArrowsSearcher probe(n, red, blue, opt.symmetry_breaking, Budget::unlimited());
        std::vector<Color> cur;
        collect_prefixes(probe, split_depth, 0, cur, prefixes);
    }
    if (prefixes.empty()) {
        verdict.kind = Verdict::Kind::Arrows;  // every prefix already hits a target
        return verdict;
    }

    std::uint64_t slice = opt.budget.max_nodes == UINT64_MAX
                              ? UINT64_MAX
                              : std::max<std::uint64_t>(1, opt.budget.max_nodes / prefixes.size());
    struct TaskResult {
        ArrowsSearcher::Res res = ArrowsSearcher::Res::Exhausted;
        std::optional<CompleteColoring> found;
        std::uint64_t nodes = 0;
    };
    std::vector<TaskResult> results(prefixes.size());
    std::atomic<std::size_t> next{0};

    auto worker = [&]() {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= prefixes.size()) break;
            ArrowsSearcher s(n, red, blue, opt.symmetry_breaking, Budget::nodes(slice));
            results[i].res = s.run_from_prefix(prefixes[i]);
            results[i].found = std::move(s.found);
            results[i].nodes = s.counter.nodes;
        }
    };
    std::vector<std::thread> pool;
    for (int i = 0; i < opt.threads; ++i) pool.emplace_back(worker);
    for (auto& th : pool) th.join();

    bool any_budget = false;
    std::optional<CompleteColoring> best;
    std::string best_doc;
    for (auto& r : results) {
        verdict.nodes += r.nodes;
        if (r.res == ArrowsSearcher::Res::Budget) any_budget = true;
        if (r.res == ArrowsSearcher::Res::Found) {
            std::string doc = io::serialize_coloring(*r.found);
            if (!best || doc < best_doc) {
                best = std::move(r.found);
                best_doc = std::move(doc);
            }
        }
    }
    if (best) {
        verify_counterexample(*best, red, blue);
        verdict.kind = Verdict::Kind::Counterexample;
        verdict.coloring = std::move(best);
    } else if (any_budget) {
        verdict.kind = Verdict::Kind::Unknown;
    } else {
        verdict.kind = Verdict::Kind::Arrows;
    }
    return verdict;
}

namespace {

std::optional<int> cycle_cycle_value(int n, int m) {
    // Faudree-Schelp cycle-cycle table, each case with its stated range.
    if ((n == 3 && m == 3) || (n == 4 && m == 4)) return 6;
    if (3 <= m && m <= n && m % 2 == 1 && !(n == 3 && m == 3)) return 2 * n - 1;
    if (4 <= m && m < n && n % 2 == 0 && m % 2 == 0 && !(n == 4 && m == 4))
        return n + m / 2 - 1;
    if (3 <= m && m <= n && m % 2 == 0 && n % 2 == 1)
        return std::max(n + m / 2 - 1, 2 * m - 1);
    return std::nullopt;
}

std::optional<int> cycle_wheel_value(int n, int m) {
    // r(C_n, W_m), the four known cases.
    if (m % 2 == 0 && m >= 4 && 2 * n >= 3 * m - 2) return 2 * n - 1;
    if (m % 2 == 1 && n >= m && m >= 3 && !(n == 3 && m == 3)) return 3 * n - 2;
    if (n % 2 == 1 && 2 * m >= 3 * (n - 1) && !(n == 3 && (m == 3 || m == 4)))
        return 2 * m + 1;
    if (n % 2 == 1 && m % 2 == 1 && n < m && 2 * m <= 3 * (n - 1)) return 3 * n - 2;
    return std::nullopt;
}

}  // namespace

std::optional<int> known_value(TargetSpec red, TargetSpec blue) {
    using K = TargetSpec::Kind;
    if (red.kind == K::Cycle && blue.kind == K::Cycle) {
        if (auto v = cycle_cycle_value(red.size, blue.size)) return v;
        return cycle_cycle_value(blue.size, red.size);  // r is color-symmetric
    }
    if (red.kind == K::Cycle && blue.kind == K::Wheel)
        return cycle_wheel_value(red.size, blue.size);
    if (red.kind == K::Wheel && blue.kind == K::Cycle)
        return cycle_wheel_value(blue.size, red.size);
    return std::nullopt;
}

AdmissiblePair::AdmissiblePair(Rational a, Rational b) : alpha(a), beta(b) {
    if (alpha < Rational(1, 4) || alpha >= Rational(1))
        throw precondition_error("alpha must lie in [1/4, 1)");
    if (beta <= Rational(0)) throw precondition_error("beta must be positive");
}

std::int64_t admissible_bound(const AdmissiblePair& p, std::int64_t j) {
    if (j < 4) throw precondition_error("admissible_bound needs j >= 4");
    Rational value = (Rational(3 * j) + p.beta) / (Rational(1) - p.alpha);
    return value.floor();
}

ScanReport admissible_pair_scan(const AdmissiblePair& p, int n_lo, int n_hi, int samples,
                                std::uint64_t seed, const Budget& b) {
    if (n_lo < 3 || n_hi < n_lo) throw precondition_error("bad size range");
    if (n_hi > 14) throw precondition_error("scan is desk scale only (n <= 14)");
    if (samples < 1) throw precondition_error("need at least one sample");

    ScanReport report;
    report.seed = seed;
    report.generator = SeededRng::name();
    SeededRng rng(seed);

    for (int n = n_lo; n <= n_hi; ++n) {
        ScanSizeReport size_report;
        size_report.n = n;
        Rational bound_exact = p.alpha * Rational(n) + p.beta;
        int bound = static_cast<int>(bound_exact.ceil());
        size_report.degree_bound = bound;
        if (bound > n - 1) {
            size_report.vacuous = true;  // stated, not hidden
            report.sizes.push_back(size_report);
            continue;
        }
        std::uint64_t max_tries = static_cast<std::uint64_t>(samples) * 100000;
        while (size_report.samples_accepted < samples && size_report.samples_tried < max_tries) {
            ++size_report.samples_tried;
            // Uniform edge set: one coin per pair, lexicographic order.
            Graph g(n);
            for (int u = 0; u < n; ++u)
                for (int v = u + 1; v < n; ++v)
                    if (rng.coin()) g.add_edge(u, v);
            if (g.min_degree() < bound) continue;
            if (detect::is_bipartite(g).bipartite) continue;
            if (!detect::is_two_connected(g).two_connected) continue;

            ++size_report.samples_accepted;
            auto circ = detect::circumference(g, b);
            if (!circ.exact)
                throw budget_exceeded_error("circumference budget exhausted during scan");
            for (int t = 6; t <= circ.value; ++t) {
                auto r = detect::find_cycle(g, t, b);
                if (r.status == detect::Presence::Unknown)
                    throw budget_exceeded_error("cycle search budget exhausted during scan");
                if (r.status == detect::Presence::Absent) {
                    ScanViolation viol;
                    viol.n = n;
                    viol.sample_index = size_report.samples_tried;
                    viol.missing_length = t;
                    viol.edges = g.edges();
                    report.violations.push_back(std::move(viol));
                }
            }
        }
        report.sizes.push_back(size_report);
    }
    return report;
}

std::optional<LowerBoundWitness> ramsey_lower_bound_witness(TargetSpec red, TargetSpec blue,
                                                            const Budget& b) {
    using K = TargetSpec::Kind;
    if (red.kind != K::Cycle || red.size % 2 == 0) return std::nullopt;
    int n = red.size;
    int k = (n - 1) / 2;

    if (blue.kind == K::Wheel) {
        int m = blue.size;
        CompleteColoring c = (n == m && k >= 1)
                                 ? constructions::three_clique_coloring(2 * k, 2 * k, 2 * k)
                                 : constructions::two_clique_coloring(m);
        auto check = detect::avoidance_check(c, n, m, b);
        if (check.kind == detect::AvoidanceResult::Kind::Unknown)
            throw budget_exceeded_error("witness verification ran out of budget");
        if (!check.ok()) throw std::logic_error("lower bound witness failed verification");
        return LowerBoundWitness{c.order(), std::move(c)};
    }

    if (blue.kind == K::Cycle && blue.size == n && k >= 2) {
        CompleteColoring c = constructions::nikiforov_two_clique(k);
        auto red_check = detect::find_cycle(c.red_graph(), n, b);
        auto blue_check = detect::find_cycle(c.blue_graph(), n, b);
        if (red_check.status == detect::Presence::Unknown ||
            blue_check.status == detect::Presence::Unknown)
            throw budget_exceeded_error("witness verification ran out of budget");
        if (red_check.status != detect::Presence::Absent ||
            blue_check.status != detect::Presence::Absent)
            throw std::logic_error("lower bound witness failed verification");
        return LowerBoundWitness{c.order(), std::move(c)};
    }
    return std::nullopt;
}

}  // namespace rcw::ramsey
