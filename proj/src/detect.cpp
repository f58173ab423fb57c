#include "rcw/detect.hpp"

#include <algorithm>
#include <climits>
#include <functional>
#include <queue>

#include "rcw/errors.hpp"

namespace rcw::detect {

namespace {

// ---------------------------------------------------------------------------
// Anchored exact-length cycle search inside one (biconnected) graph.
//
// A cycle is enumerated exactly once: anchored at its minimum-labeled vertex,
// extended by ascending neighbor label with every non-anchor vertex above the
// anchor, and closed only when path[1] < last vertex (kills the reflection).
// One node = one vertex extension attempt.
// ---------------------------------------------------------------------------

struct CycleDfs {
    const Graph& g;
    int target;
    SearchCounter& counter;
    std::vector<int> path;
    VertexSet used;
    VertexSet above_anchor;
    bool out_of_budget = false;
    // Feasibility pruning pays off on graphs glued from dense blocks and is
    // dead weight on thoroughly connected ones; it switches itself off when
    // it stops firing.
    std::uint64_t feas_calls = 0, feas_hits = 0;
    bool feas_enabled = true;

    CycleDfs(const Graph& g_, int t, SearchCounter& c) : g(g_), target(t), counter(c) {}

    /// After stepping to w, can the path still collect enough fresh vertices
    /// and get back to the anchor? Checks reachability through unused
    /// vertices above the anchor.
    bool feasible(int w, int anchor) {
        if (!feas_enabled) return true;
        if (feas_calls == 20000 && feas_hits * 100 < feas_calls) {
            feas_enabled = false;
            return true;
        }
        ++feas_calls;
        VertexSet avail = above_anchor - used;
        avail.reset(w);
        VertexSet reach;
        VertexSet frontier = VertexSet::single(w);
        VertexSet seen = frontier;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v = frontier.first(); v >= 0; v = frontier.next_above(v))
                next |= g.neighbors(v);
            frontier = (next & avail) - seen;
            seen |= frontier;
            reach |= frontier;
        }
        int need = target - static_cast<int>(path.size()) - 1;
        bool ok = reach.count() >= need &&
                  (reach | VertexSet::single(w)).intersects(g.neighbors(anchor));
        if (!ok) ++feas_hits;
        return ok;
    }

    bool extend(int anchor) {
        int v = path.back();
        const VertexSet& nbrs = g.neighbors(v);
        for (int w = nbrs.next_above(anchor); w >= 0; w = nbrs.next_above(w)) {
            if (used.test(w)) continue;
            if (!counter.tick()) {
                out_of_budget = true;
                return false;
            }
            if (static_cast<int>(path.size()) == target - 1) {
                if (path[1] < w && g.neighbors(w).test(anchor)) {
                    path.push_back(w);
                    return true;
                }
                continue;
            }
            if (!feasible(w, anchor)) continue;
            path.push_back(w);
            used.set(w);
            if (extend(anchor)) return true;
            if (out_of_budget) return false;
            used.reset(w);
            path.pop_back();
        }
        return false;
    }

    // Found -> path holds the witness.
    Presence run() {
        int n = g.order();
        for (int a = 0; a + target <= n; ++a) {
            path.assign(1, a);
            used = VertexSet::single(a);
            above_anchor = VertexSet::full(n) - VertexSet::full(a + 1);
            if (extend(a)) return Presence::Found;
            if (out_of_budget) return Presence::Unknown;
        }
        return Presence::Absent;
    }
};

std::vector<VertexSet> components_by_min_vertex(const Graph& g) {
    auto comps = biconnected_components(g);
    std::sort(comps.begin(), comps.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.first() < b.first(); });
    return comps;
}

/// Anchor the minimum vertex first, smaller neighbor second; the canonical
/// form every cycle witness is reported in.
void canonicalize_cycle(std::vector<int>& cyc) {
    auto it = std::min_element(cyc.begin(), cyc.end());
    std::rotate(cyc.begin(), it, cyc.end());
    if (cyc.size() >= 3 && cyc.back() < cyc[1]) std::reverse(cyc.begin() + 1, cyc.end());
}

/// BFS 2-labeling (valid on bipartite components) plus the list of edges
/// whose endpoints got the same label. Any labeling splits the edges into
/// label-flipping and label-preserving ones, and an odd cycle always uses an
/// odd number of preserving edges, so cycle searches for odd lengths only
/// need to go through these conflict edges when there are few of them.
struct TwoLabeling {
    std::vector<int> label;
    std::vector<std::pair<int, int>> conflicts;
};

TwoLabeling two_labeling(const Graph& g) {
    int n = g.order();
    TwoLabeling out;
    out.label.assign(n, -1);
    std::vector<int> comp_of = component_ids(g);
    int comp_count = 0;
    for (int id : comp_of) comp_count = std::max(comp_count, id + 1);

    std::vector<int> scratch(n);
    auto bfs_label = [&](int root, std::vector<int>& label) {
        label[root] = 0;
        std::vector<int> queue{root};
        std::size_t head = 0;
        while (head < queue.size()) {
            int u = queue[head++];
            const VertexSet& nb = g.neighbors(u);
            for (int w = nb.first(); w >= 0; w = nb.next_above(w))
                if (label[w] < 0) {
                    label[w] = label[u] ^ 1;
                    queue.push_back(w);
                }
        }
    };
    auto conflict_count = [&](int comp, const std::vector<int>& label) {
        int count = 0;
        for (int u = 0; u < n; ++u) {
            if (comp_of[u] != comp) continue;
            VertexSet same = g.neighbors(u);
            for (int v = same.next_above(u); v >= 0; v = same.next_above(v))
                if (label[u] == label[v]) ++count;
        }
        return count;
    };

    // The root determines which edges end up label-preserving; scanning the
    // roots of each component keeps the conflict list as short as the BFS
    // family allows (a single edge on near-bipartite graphs). One conflict
    // is optimal for any non-bipartite component, so stop there.
    for (int comp = 0; comp < comp_count; ++comp) {
        int best = -1;
        std::vector<int> best_label;
        for (int root = 0; root < n && best != 0 && best != 1; ++root) {
            if (comp_of[root] != comp) continue;
            std::fill(scratch.begin(), scratch.end(), -1);
            bfs_label(root, scratch);
            int count = conflict_count(comp, scratch);
            if (best < 0 || count < best) {
                best = count;
                best_label = scratch;
            }
        }
        for (int v = 0; v < n; ++v)
            if (comp_of[v] == comp) out.label[v] = best_label[v];
    }
    for (auto [u, v] : g.edges())
        if (out.label[u] == out.label[v]) out.conflicts.emplace_back(u, v);
    return out;
}

constexpr std::size_t kConflictRoutingLimit = 8;

// Cycle search across biconnected components with size and parity filters.
CycleSearch find_cycle_counted(const Graph& g, int t, SearchCounter& counter) {
    CycleSearch res;
    if (t > g.order()) {
        res.status = Presence::Absent;
        res.nodes = counter.nodes;
        return res;
    }
    for (const VertexSet& comp : components_by_min_vertex(g)) {
        if (comp.count() < t) continue;
        std::vector<int> map;
        Graph h = g.induced(comp, &map);
        TwoLabeling tl = two_labeling(h);
        if (t % 2 == 1 && tl.conflicts.empty()) continue;  // bipartite component
        if (!tl.conflicts.empty() && tl.conflicts.size() <= kConflictRoutingLimit) {
            // A cycle uses conflict edges with the parity of its length. Odd
            // cycles pass through at least one; even cycles use none (then
            // they live in the conflict-free subgraph, which decomposes) or
            // at least two (then a through-edge search sees them).
            bool found = false;
            CycleWitness w;
            if (t % 2 == 0) {
                Graph stripped = h;
                for (auto [cu, cv] : tl.conflicts) stripped.remove_edge(cu, cv);
                CycleSearch sub = find_cycle_counted(stripped, t, counter);
                if (sub.status == Presence::Unknown) {
                    res.status = Presence::Unknown;
                    res.nodes = counter.nodes;
                    return res;
                }
                if (sub.status == Presence::Found) {
                    for (int v : sub.witness->vertices) w.vertices.push_back(map[v]);
                    found = true;
                }
            }
            if (!found && !(t % 2 == 0 && tl.conflicts.size() < 2)) {
                for (auto [cu, cv] : tl.conflicts) {
                    auto cyc = find_cycle_through_edge(h, t, cu, cv, counter);
                    if (counter.exhausted()) {
                        res.status = Presence::Unknown;
                        res.nodes = counter.nodes;
                        return res;
                    }
                    if (cyc) {
                        for (int v : cyc->vertices) w.vertices.push_back(map[v]);
                        found = true;
                        break;
                    }
                }
            }
            if (found) {
                canonicalize_cycle(w.vertices);
                res.status = Presence::Found;
                res.witness = std::move(w);
                res.nodes = counter.nodes;
                return res;
            }
            continue;  // absent in this component
        }
        CycleDfs dfs(h, t, counter);
        Presence p = dfs.run();
        if (p == Presence::Found) {
            CycleWitness w;
            for (int v : dfs.path) w.vertices.push_back(map[v]);
            canonicalize_cycle(w.vertices);
            res.status = Presence::Found;
            res.witness = std::move(w);
            res.nodes = counter.nodes;
            return res;
        }
        if (p == Presence::Unknown) {
            res.status = Presence::Unknown;
            res.nodes = counter.nodes;
            return res;
        }
    }
    res.status = Presence::Absent;
    res.nodes = counter.nodes;
    return res;
}

WheelSearch find_wheel_counted(const Graph& g, int m, SearchCounter& counter) {
    WheelSearch res;
    for (int hub = 0; hub < g.order(); ++hub) {
        const VertexSet& nb = g.neighbors(hub);
        if (nb.count() < m) continue;
        std::vector<int> map;
        Graph h = g.induced(nb, &map);
        CycleSearch rim = find_cycle_counted(h, m, counter);
        if (rim.status == Presence::Found) {
            WheelWitness w;
            w.hub = hub;
            for (int v : rim.witness->vertices) w.rim.vertices.push_back(map[v]);
            res.status = Presence::Found;
            res.witness = std::move(w);
            res.nodes = counter.nodes;
            return res;
        }
        if (rim.status == Presence::Unknown) {
            res.status = Presence::Unknown;
            res.nodes = counter.nodes;
            return res;
        }
    }
    res.status = Presence::Absent;
    res.nodes = counter.nodes;
    return res;
}

VertexSet bfs_reachable(const Graph& g, int start, const VertexSet& forbidden) {
    VertexSet seen = VertexSet::single(start);
    std::vector<int> stack{start};
    while (!stack.empty()) {
        int u = stack.back();
        stack.pop_back();
        const VertexSet& nb = g.neighbors(u);
        for (int w = nb.first(); w >= 0; w = nb.next_above(w)) {
            if (seen.test(w) || forbidden.test(w)) continue;
            seen.set(w);
            stack.push_back(w);
        }
    }
    return seen;
}

}  // namespace

std::vector<VertexSet> biconnected_components(const Graph& g) {
    int n = g.order();
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<std::pair<int, int>> edge_stack;
    std::vector<VertexSet> comps;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[u] = low[u] = timer++;
        const VertexSet& nb = g.neighbors(u);
        for (int w = nb.first(); w >= 0; w = nb.next_above(w)) {
            if (w == parent) continue;
            if (disc[w] < 0) {
                edge_stack.emplace_back(u, w);
                dfs(w, u);
                low[u] = std::min(low[u], low[w]);
                if (low[w] >= disc[u]) {
                    VertexSet comp;
                    while (true) {
                        auto e = edge_stack.back();
                        edge_stack.pop_back();
                        comp.set(e.first);
                        comp.set(e.second);
                        if (e.first == u && e.second == w) break;
                    }
                    comps.push_back(comp);
                }
            } else if (disc[w] < disc[u]) {
                edge_stack.emplace_back(u, w);
                low[u] = std::min(low[u], disc[w]);
            }
        }
    };

    for (int v = 0; v < n; ++v)
        if (disc[v] < 0) dfs(v, -1);
    return comps;
}

std::vector<int> component_ids(const Graph& g) {
    int n = g.order();
    std::vector<int> id(n, -1);
    int next = 0;
    for (int v = 0; v < n; ++v) {
        if (id[v] >= 0) continue;
        VertexSet seen = bfs_reachable(g, v, VertexSet{});
        for (int w = seen.first(); w >= 0; w = seen.next_above(w)) id[w] = next;
        ++next;
    }
    return id;
}

CycleSearch find_cycle(const Graph& g, int t, const Budget& b) {
    if (t < 3) throw precondition_error("cycle length must be at least 3");
    SearchCounter counter(b);
    return find_cycle_counted(g, t, counter);
}

WheelSearch find_wheel(const Graph& g, int m, const Budget& b) {
    if (m < 3) throw precondition_error("wheel rim length must be at least 3");
    SearchCounter counter(b);
    return find_wheel_counted(g, m, counter);
}

SpectrumReport cycle_spectrum(const Graph& g, const Budget& b) {
    SearchCounter counter(b);
    SpectrumReport report;
    for (int t = 3; t <= g.order(); ++t) {
        CycleSearch r = find_cycle_counted(g, t, counter);
        if (r.status == Presence::Found) report.present_lengths.insert(t);
        if (r.status == Presence::Unknown) {
            report.exhaustive = false;
            break;
        }
    }
    if (!report.present_lengths.empty()) {
        report.girth = *report.present_lengths.begin();
        report.circumference = *report.present_lengths.rbegin();
    }
    return report;
}

std::optional<int> girth(const Graph& g) {
    int n = g.order();
    int best = INT_MAX;
    std::vector<int> dist(n), parent(n);
    for (int r = 0; r < n && best > 3; ++r) {
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(parent.begin(), parent.end(), -1);
        dist[r] = 0;
        std::queue<int> q;
        q.push(r);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            if (2 * dist[u] + 1 >= best) break;
            const VertexSet& nb = g.neighbors(u);
            for (int w = nb.first(); w >= 0; w = nb.next_above(w)) {
                if (dist[w] < 0) {
                    dist[w] = dist[u] + 1;
                    parent[w] = u;
                    q.push(w);
                } else if (w != parent[u]) {
                    best = std::min(best, dist[u] + dist[w] + 1);
                }
            }
        }
    }
    if (best == INT_MAX) return std::nullopt;
    return best;
}

CircumferenceResult circumference(const Graph& g, const Budget& b) {
    SearchCounter counter(b);
    auto comps = components_by_min_vertex(g);
    int tmax = 0;
    for (const auto& comp : comps) tmax = std::max(tmax, comp.count());
    for (int t = tmax; t >= 3; --t) {
        CycleSearch r = find_cycle_counted(g, t, counter);
        if (r.status == Presence::Found) return {t, true};
        if (r.status == Presence::Unknown) return {0, false};
    }
    return {0, true};
}

Ternary is_pancyclic(const Graph& g, const Budget& b) {
    if (g.order() < 3) throw precondition_error("pancyclicity needs n >= 3");
    SearchCounter counter(b);
    for (int t = 3; t <= g.order(); ++t) {
        CycleSearch r = find_cycle_counted(g, t, counter);
        if (r.status == Presence::Absent) return Ternary::False;
        if (r.status == Presence::Unknown) return Ternary::Unknown;
    }
    return Ternary::True;
}

Ternary is_weakly_pancyclic(const Graph& g, const Budget& b) {
    if (g.order() < 3) throw precondition_error("weak pancyclicity needs n >= 3");
    auto g0 = girth(g);
    if (!g0) return Ternary::True;  // forest: empty spectrum range
    SearchCounter counter(b);
    auto comps = components_by_min_vertex(g);
    int tmax = 0;
    for (const auto& comp : comps) tmax = std::max(tmax, comp.count());
    int circ = 0;
    for (int t = tmax; t >= *g0; --t) {
        CycleSearch r = find_cycle_counted(g, t, counter);
        if (r.status == Presence::Unknown) return Ternary::Unknown;
        if (r.status == Presence::Found) {
            circ = t;
            break;
        }
    }
    for (int t = *g0; t < circ; ++t) {
        CycleSearch r = find_cycle_counted(g, t, counter);
        if (r.status == Presence::Absent) return Ternary::False;
        if (r.status == Presence::Unknown) return Ternary::Unknown;
    }
    return Ternary::True;
}

BipartitionResult is_bipartite(const Graph& g) {
    int n = g.order();
    std::vector<int> side(n, -1), parent(n, -1);
    BipartitionResult res;
    for (int root = 0; root < n; ++root) {
        if (side[root] >= 0) continue;
        side[root] = 0;
        std::queue<int> q;
        q.push(root);
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            const VertexSet& nb = g.neighbors(u);
            for (int w = nb.first(); w >= 0; w = nb.next_above(w)) {
                if (side[w] < 0) {
                    side[w] = side[u] ^ 1;
                    parent[w] = u;
                    q.push(w);
                } else if (side[w] == side[u]) {
                    // Conflict edge (u, w): close the odd cycle through the
                    // lowest common ancestor of the two BFS chains.
                    std::vector<int> up_u, up_w;
                    VertexSet on_u;
                    for (int x = u; x >= 0; x = parent[x]) {
                        up_u.push_back(x);
                        on_u.set(x);
                    }
                    int lca = w;
                    while (!on_u.test(lca)) {
                        up_w.push_back(lca);
                        lca = parent[lca];
                    }
                    CycleWitness cyc;
                    for (int x : up_u) {
                        cyc.vertices.push_back(x);
                        if (x == lca) break;
                    }
                    for (auto it = up_w.rbegin(); it != up_w.rend(); ++it)
                        cyc.vertices.push_back(*it);
                    res.bipartite = false;
                    res.odd_cycle = std::move(cyc);
                    return res;
                }
            }
        }
    }
    for (int v = 0; v < n; ++v) res.parts[side[v]].set(v);
    return res;
}

TwoConnectedResult is_two_connected(const Graph& g) {
    int n = g.order();
    if (n < 3) throw precondition_error("2-connectivity needs n >= 3");
    if (bfs_reachable(g, 0, VertexSet{}).count() != n) return {false, {}};
    for (int v = 0; v < n; ++v) {
        int start = v == 0 ? 1 : 0;
        VertexSet cut = VertexSet::single(v);
        if (bfs_reachable(g, start, cut).count() != n - 1) return {false, {v}};
    }
    return {true, {}};
}

DisjointPathsResult max_disjoint_paths(const Graph& g, const VertexSet& a, const VertexSet& b,
                                       int cap) {
    if (cap < 1 || cap > 2) throw precondition_error("cap must be 1 or 2");
    if (a.empty() || b.empty()) throw precondition_error("endpoint sets must be nonempty");
    if (a.intersects(b)) throw precondition_error("endpoint sets overlap");

    int n = g.order();
    // Node-split digraph: in(v)=2v, out(v)=2v+1. Every vertex has capacity 1;
    // source/sink and edge arcs get capacity 2 so only vertex arcs can be
    // saturated and the min cut is a vertex cut.
    int s = 2 * n, t = 2 * n + 1;
    struct Arc {
        int to, cap, flow, rev;
    };
    std::vector<std::vector<Arc>> adj(2 * n + 2);
    auto add_arc = [&](int from, int to, int cap_) {
        adj[from].push_back({to, cap_, 0, static_cast<int>(adj[to].size())});
        adj[to].push_back({from, 0, 0, static_cast<int>(adj[from].size()) - 1});
    };
    for (int v = 0; v < n; ++v) add_arc(2 * v, 2 * v + 1, 1);
    for (int v = a.first(); v >= 0; v = a.next_above(v)) add_arc(s, 2 * v, 2);
    for (int v = b.first(); v >= 0; v = b.next_above(v)) add_arc(2 * v + 1, t, 2);
    for (auto [u, v] : g.edges()) {
        if (!b.test(u) && !a.test(v)) add_arc(2 * u + 1, 2 * v, 2);
        if (!b.test(v) && !a.test(u)) add_arc(2 * v + 1, 2 * u, 2);
    }

    auto augment = [&]() -> bool {
        std::vector<std::pair<int, int>> pred(2 * n + 2, {-1, -1});  // node, arc idx
        std::vector<char> seen(2 * n + 2, 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty() && !seen[t]) {
            int u = q.front();
            q.pop();
            for (int i = 0; i < static_cast<int>(adj[u].size()); ++i) {
                const Arc& arc = adj[u][i];
                if (seen[arc.to] || arc.cap - arc.flow <= 0) continue;
                seen[arc.to] = 1;
                pred[arc.to] = {u, i};
                q.push(arc.to);
            }
        }
        if (!seen[t]) return false;
        for (int v = t; v != s;) {
            auto [u, i] = pred[v];
            adj[u][i].flow += 1;
            adj[adj[u][i].to][adj[u][i].rev].flow -= 1;
            v = u;
        }
        return true;
    };

    int flow = 0;
    while (flow < cap && augment()) ++flow;

    DisjointPathsResult res;
    res.count = flow;

    // Decompose the flow into vertex paths.
    for (int v = a.first(); v >= 0; v = a.next_above(v)) {
        // flow on s -> in(v)?
        bool used = false;
        for (const Arc& arc : adj[s])
            if (arc.to == 2 * v && arc.flow > 0) used = true;
        if (!used) continue;
        PathWitness path;
        int cur = v;
        while (true) {
            path.vertices.push_back(cur);
            if (b.test(cur)) break;
            int next = -1;
            for (Arc& arc : adj[2 * cur + 1]) {
                if (arc.flow > 0 && arc.to != t && arc.to % 2 == 0) {
                    arc.flow = 0;  // consume so parallel paths do not reuse it
                    next = arc.to / 2;
                    break;
                }
            }
            cur = next;
        }
        res.paths.push_back(std::move(path));
    }

    if (flow < cap) {
        // Residual reachability from s; cut vertices are those entered but
        // not exited.
        std::vector<char> seen(2 * n + 2, 0);
        std::queue<int> q;
        q.push(s);
        seen[s] = 1;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            for (const Arc& arc : adj[u]) {
                if (seen[arc.to] || arc.cap - arc.flow <= 0) continue;
                seen[arc.to] = 1;
                q.push(arc.to);
            }
        }
        std::vector<int> sep;
        for (int v = 0; v < n; ++v)
            if (seen[2 * v] && !seen[2 * v + 1]) sep.push_back(v);
        res.separator = std::move(sep);
    }
    return res;
}

bool verify_hedgehog(const Graph& g, const VertexSet& w, const VertexSet& x) {
    if (!w.contains(x)) throw precondition_error("X must be a subset of W");
    auto xs = x.to_vector();
    for (std::size_t i = 0; i < xs.size(); ++i)
        for (std::size_t j = i + 1; j < xs.size(); ++j)
            if (!g.adjacent(xs[i], xs[j])) return false;
    VertexSet rest = w - x;
    for (int v = rest.first(); v >= 0; v = rest.next_above(v))
        if (!g.neighbors(v).contains(x)) return false;
    return true;
}

PathWitness hedgehog_path(const Graph& g, const VertexSet& w, const VertexSet& x, int u, int v,
                          int L) {
    if (!verify_hedgehog(g, w, x)) throw precondition_error("(W, X) is not a hedgehog");
    if (!w.test(u) || !w.test(v) || u == v)
        throw precondition_error("endpoints must be distinct vertices of W");
    int xc = x.count();
    if (xc < 3) throw precondition_error("hedgehog paths need |X| >= 3");
    if (L < 2 || L > xc - 1) throw precondition_error("length outside [2, |X|-1]");

    VertexSet pool = x;
    pool.reset(u);
    pool.reset(v);
    PathWitness path;
    path.vertices.push_back(u);
    int taken = 0;
    for (int c = pool.first(); c >= 0 && taken < L - 1; c = pool.next_above(c), ++taken)
        path.vertices.push_back(c);
    path.vertices.push_back(v);
    return path;
}

AvoidanceResult avoidance_check(const CompleteColoring& c, int red_cycle_len, int blue_wheel_rim,
                                const Budget& b) {
    if (red_cycle_len < 3 || blue_wheel_rim < 3)
        throw precondition_error("targets must have size at least 3");
    SearchCounter counter(b);
    AvoidanceResult res;

    CycleSearch red = find_cycle_counted(c.red_graph(), red_cycle_len, counter);
    if (red.status == Presence::Found) {
        res.kind = AvoidanceResult::Kind::RedCycle;
        res.red_cycle = std::move(red.witness);
        res.nodes = counter.nodes;
        return res;
    }
    if (red.status == Presence::Unknown) {
        res.kind = AvoidanceResult::Kind::Unknown;
        res.nodes = counter.nodes;
        return res;
    }

    WheelSearch blue = find_wheel_counted(c.blue_graph(), blue_wheel_rim, counter);
    if (blue.status == Presence::Found) {
        res.kind = AvoidanceResult::Kind::BlueWheel;
        res.blue_wheel = std::move(blue.witness);
    } else if (blue.status == Presence::Unknown) {
        res.kind = AvoidanceResult::Kind::Unknown;
    } else {
        res.kind = AvoidanceResult::Kind::Ok;
    }
    res.nodes = counter.nodes;
    return res;
}

namespace {

/// Path search behind find_cycle_through_edge, with the same self-disabling
/// reachability prune as CycleDfs.
struct EdgeCycleDfs {
    const Graph& g;
    int target, goal;
    SearchCounter& counter;
    std::vector<int> path;
    VertexSet used;
    std::uint64_t feas_calls = 0, feas_hits = 0;
    bool feas_enabled = true;

    EdgeCycleDfs(const Graph& g_, int t, int goal_, SearchCounter& c)
        : g(g_), target(t), goal(goal_), counter(c) {}

    bool feasible(int w) {
        if (!feas_enabled) return true;
        if (feas_calls == 20000 && feas_hits * 100 < feas_calls) {
            feas_enabled = false;
            return true;
        }
        ++feas_calls;
        VertexSet avail = VertexSet::full(g.order()) - used;
        avail.reset(w);
        VertexSet reach;
        VertexSet frontier = VertexSet::single(w);
        VertexSet seen = frontier;
        while (!frontier.empty()) {
            VertexSet next;
            for (int v = frontier.first(); v >= 0; v = frontier.next_above(v))
                next |= g.neighbors(v);
            frontier = (next & avail) - seen;
            seen |= frontier;
            reach |= frontier;
        }
        reach.reset(goal);
        // path currently ends before w; after stepping to w the interior
        // still needs target-2-|path| fresh vertices before closing at goal.
        int need = target - 2 - static_cast<int>(path.size());
        bool ok = reach.count() >= need &&
                  (need == 0 ? g.adjacent(w, goal)
                             : (reach | VertexSet::single(w)).intersects(g.neighbors(goal)));
        if (!ok) ++feas_hits;
        return ok;
    }

    bool extend(int x) {
        if (static_cast<int>(path.size()) == target - 1) return g.adjacent(x, goal);
        const VertexSet& nb = g.neighbors(x);
        for (int w = nb.first(); w >= 0; w = nb.next_above(w)) {
            if (used.test(w)) continue;
            if (!counter.tick()) return false;
            if (!feasible(w)) continue;
            path.push_back(w);
            used.set(w);
            if (extend(w)) return true;
            used.reset(w);
            path.pop_back();
            if (counter.exhausted()) return false;
        }
        return false;
    }
};

}  // namespace

std::optional<CycleWitness> find_cycle_through_edge(const Graph& g, int t, int u, int v,
                                                    SearchCounter& counter) {
    if (t < 3 || t > g.order() || !g.adjacent(u, v)) return std::nullopt;
    EdgeCycleDfs dfs(g, t, v, counter);
    dfs.path.push_back(u);
    dfs.used.set(u);
    dfs.used.set(v);
    if (dfs.extend(u)) {
        dfs.path.push_back(v);
        CycleWitness cyc;
        cyc.vertices = std::move(dfs.path);
        return cyc;
    }
    return std::nullopt;
}

std::optional<CycleWitness> find_cycle_through_vertex(const Graph& g, int t, int v,
                                                      SearchCounter& counter) {
    if (t < 3 || t > g.order()) return std::nullopt;
    std::vector<int> path{v};
    VertexSet used = VertexSet::single(v);

    std::function<bool()> extend = [&]() -> bool {
        int x = path.back();
        const VertexSet& nb = g.neighbors(x);
        for (int w = nb.first(); w >= 0; w = nb.next_above(w)) {
            if (used.test(w)) continue;
            if (!counter.tick()) return false;
            if (static_cast<int>(path.size()) == t - 1) {
                if (path[1] < w && g.adjacent(w, v)) {
                    path.push_back(w);
                    return true;
                }
                continue;
            }
            path.push_back(w);
            used.set(w);
            if (extend()) return true;
            used.reset(w);
            path.pop_back();
            if (counter.exhausted()) return false;
        }
        return false;
    };

    if (extend()) {
        CycleWitness cyc;
        cyc.vertices = std::move(path);
        return cyc;
    }
    return std::nullopt;
}

}  // namespace rcw::detect
