#pragma once

#include <utility>
#include <vector>

#include "rcw/graph.hpp"

namespace rcw {

enum class Color { Red, Blue };

inline Color complement(Color c) { return c == Color::Red ? Color::Blue : Color::Red; }
inline const char* color_name(Color c) { return c == Color::Red ? "red" : "blue"; }

/// Red/blue 2-coloring of all edges of K_n. Only the red pairs are stored;
/// blue is the complement within the complete graph, so the two color
/// classes cannot drift out of sync. Immutable value type.
class CompleteColoring {
public:
    /// Builds a coloring with exactly the listed pairs red (deduplicated,
    /// order of endpoints irrelevant) and every other pair blue.
    static CompleteColoring make(int n, const std::vector<std::pair<int, int>>& red_pairs) {
        if (n < 1) throw precondition_error("coloring needs n >= 1");
        CompleteColoring c(n);
        for (auto [u, v] : red_pairs) {
            c.check_pair(u, v);
            c.red_rows_[u].set(v);
            c.red_rows_[v].set(u);
        }
        return c;
    }

    int order() const { return n_; }

    Color color_of(int u, int v) const {
        check_pair(u, v);
        return red_rows_[u].test(v) ? Color::Red : Color::Blue;
    }

    /// Neighbors of v in the red graph.
    const VertexSet& red_neighbors(int v) const { return red_rows_[v]; }

    /// Neighbors of v in the blue graph (complement minus v itself).
    VertexSet blue_neighbors(int v) const {
        VertexSet s = VertexSet::full(n_) - red_rows_[v];
        s.reset(v);
        return s;
    }

    Graph monochromatic_graph(Color col) const {
        Graph g(n_);
        for (int u = 0; u < n_; ++u)
            for (int v = u + 1; v < n_; ++v) {
                bool red = red_rows_[u].test(v);
                if ((col == Color::Red) == red) g.add_edge(u, v);
            }
        return g;
    }

    Graph red_graph() const { return monochromatic_graph(Color::Red); }
    Graph blue_graph() const { return monochromatic_graph(Color::Blue); }

    std::size_t red_edge_count() const {
        std::size_t twice = 0;
        for (int v = 0; v < n_; ++v) twice += red_rows_[v].count();
        return twice / 2;
    }

    std::size_t blue_edge_count() const {
        return static_cast<std::size_t>(n_) * (n_ - 1) / 2 - red_edge_count();
    }

    /// Coloring induced on S, relabeled by ascending original label.
    /// map[newLabel] = oldLabel. S must be nonempty.
    CompleteColoring induced(const VertexSet& s, std::vector<int>* map_out = nullptr) const {
        std::vector<int> map = s.to_vector();
        if (map.empty()) throw precondition_error("induced coloring on empty set");
        for (int v : map)
            if (v >= n_) throw out_of_range_error("induced set vertex outside coloring");
        CompleteColoring c(static_cast<int>(map.size()));
        for (int a = 0; a < c.n_; ++a)
            for (int b = a + 1; b < c.n_; ++b)
                if (red_rows_[map[a]].test(map[b])) {
                    c.red_rows_[a].set(b);
                    c.red_rows_[b].set(a);
                }
        if (map_out) *map_out = std::move(map);
        return c;
    }

    /// New coloring with the color of one pair flipped.
    CompleteColoring with_flipped(int u, int v) const {
        check_pair(u, v);
        CompleteColoring c(*this);
        if (c.red_rows_[u].test(v)) {
            c.red_rows_[u].reset(v);
            c.red_rows_[v].reset(u);
        } else {
            c.red_rows_[u].set(v);
            c.red_rows_[v].set(u);
        }
        return c;
    }

    /// Red pairs in canonical order: u < v, lexicographically sorted.
    std::vector<std::pair<int, int>> red_pairs() const {
        std::vector<std::pair<int, int>> out;
        for (int u = 0; u < n_; ++u)
            for (int v = red_rows_[u].next_above(u); v >= 0; v = red_rows_[u].next_above(v))
                out.emplace_back(u, v);
        return out;
    }

    friend bool operator==(const CompleteColoring& a, const CompleteColoring& b) {
        return a.n_ == b.n_ && a.red_rows_ == b.red_rows_;
    }

private:
    explicit CompleteColoring(int n) : n_(n), red_rows_(n) {
        if (n > VertexSet::kCapacity)
            throw out_of_range_error("coloring order out of supported range");
    }

    void check_pair(int u, int v) const {
        if (u < 0 || u >= n_ || v < 0 || v >= n_)
            throw out_of_range_error("pair endpoint outside [0," + std::to_string(n_) + ")");
        if (u == v) throw self_loop_error("pair with equal endpoints " + std::to_string(u));
    }

    int n_;
    std::vector<VertexSet> red_rows_;
};

}  // namespace rcw
