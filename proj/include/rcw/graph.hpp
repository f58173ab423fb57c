#pragma once

#include <utility>
#include <vector>

#include "rcw/bitset.hpp"
#include "rcw/errors.hpp"

namespace rcw {

/// Simple undirected graph on vertices 0..n-1, adjacency stored as one bit
/// row per vertex. Immutable after construction; "mutation" means building a
/// new value, which keeps sharing across search branches safe.
class Graph {
public:
    explicit Graph(int n) : n_(n), rows_(n) {
        if (n < 0 || n > VertexSet::kCapacity)
            throw out_of_range_error("graph order out of supported range");
    }

    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
        Graph g(n);
        for (auto [u, v] : edges) g.add_edge_checked(u, v);
        return g;
    }

    int order() const { return n_; }

    bool adjacent(int u, int v) const {
        check_vertex(u);
        check_vertex(v);
        return rows_[u].test(v);
    }

    const VertexSet& neighbors(int v) const {
        check_vertex(v);
        return rows_[v];
    }

    int degree(int v) const { return neighbors(v).count(); }

    int min_degree() const {
        if (n_ == 0) throw precondition_error("min_degree of empty graph");
        int best = n_;
        for (int v = 0; v < n_; ++v) best = std::min(best, rows_[v].count());
        return best;
    }

    int max_degree() const {
        if (n_ == 0) throw precondition_error("max_degree of empty graph");
        int best = 0;
        for (int v = 0; v < n_; ++v) best = std::max(best, rows_[v].count());
        return best;
    }

    std::size_t edge_count() const {
        std::size_t twice = 0;
        for (int v = 0; v < n_; ++v) twice += rows_[v].count();
        return twice / 2;
    }

    std::vector<std::pair<int, int>> edges() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = rows_[u].next_above(u); v >= 0; v = rows_[u].next_above(v))
                out.emplace_back(u, v);
        return out;
    }

    /// Subgraph induced by S; vertices relabeled by ascending original label.
    /// map[newLabel] = oldLabel.
    Graph induced(const VertexSet& s, std::vector<int>* map_out = nullptr) const {
        std::vector<int> map = s.to_vector();
        Graph h(static_cast<int>(map.size()));
        for (int a = 0; a < h.order(); ++a)
            for (int b = a + 1; b < h.order(); ++b)
                if (rows_[map[a]].test(map[b])) h.add_edge(a, b);
        if (map_out) *map_out = std::move(map);
        return h;
    }

    // Construction helpers for factories in this library; rows stay
    // symmetric and irreflexive by construction.
    void add_edge(int u, int v) {
        rows_[u].set(v);
        rows_[v].set(u);
    }

    void add_edge_checked(int u, int v) {
        check_vertex(u);
        check_vertex(v);
        if (u == v) throw self_loop_error("self loop at vertex " + std::to_string(u));
        add_edge(u, v);
    }

    void remove_edge(int u, int v) {
        rows_[u].reset(v);
        rows_[v].reset(u);
    }

private:
    void check_vertex(int v) const {
        if (v < 0 || v >= n_)
            throw out_of_range_error("vertex " + std::to_string(v) + " outside [0," +
                                     std::to_string(n_) + ")");
    }

    int n_;
    std::vector<VertexSet> rows_;
};

}  // namespace rcw
