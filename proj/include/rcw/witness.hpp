#pragma once

#include <vector>

#include "rcw/graph.hpp"

namespace rcw {

/// Cycle v_0 v_1 ... v_{t-1} v_0, t >= 3, all vertices distinct.
struct CycleWitness {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()); }

    bool validate(const Graph& g) const {
        int t = length();
        if (t < 3) return false;
        VertexSet seen;
        for (int v : vertices) {
            if (v < 0 || v >= g.order() || seen.test(v)) return false;
            seen.set(v);
        }
        for (int i = 0; i < t; ++i)
            if (!g.adjacent(vertices[i], vertices[(i + 1) % t])) return false;
        return true;
    }
};

/// Wheel: rim cycle plus a hub adjacent to every rim vertex.
struct WheelWitness {
    int hub = -1;
    CycleWitness rim;

    bool validate(const Graph& g) const {
        if (hub < 0 || hub >= g.order()) return false;
        if (!rim.validate(g)) return false;
        for (int v : rim.vertices)
            if (v == hub || !g.adjacent(hub, v)) return false;
        return true;
    }
};

/// Path v_0 .. v_k, distinct vertices, consecutive pairs adjacent.
/// Length is the number of edges.
struct PathWitness {
    std::vector<int> vertices;

    int length() const { return static_cast<int>(vertices.size()) - 1; }

    bool validate(const Graph& g) const {
        if (vertices.size() < 2) return false;
        VertexSet seen;
        for (int v : vertices) {
            if (v < 0 || v >= g.order() || seen.test(v)) return false;
            seen.set(v);
        }
        for (std::size_t i = 0; i + 1 < vertices.size(); ++i)
            if (!g.adjacent(vertices[i], vertices[i + 1])) return false;
        return true;
    }
};

/// Labeled vertex partition; classes()[i] keeps its position, empty classes
/// allowed. The stability decomposition uses four classes U0..U3.
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<std::vector<int>> classes) : classes_(std::move(classes)) {}

    const std::vector<std::vector<int>>& classes() const { return classes_; }
    std::vector<std::vector<int>>& classes() { return classes_; }

    /// True iff the classes are pairwise disjoint and cover exactly 0..n-1.
    bool is_partition_of(int n) const {
        VertexSet seen;
        int total = 0;
        for (const auto& cls : classes_)
            for (int v : cls) {
                if (v < 0 || v >= n || seen.test(v)) return false;
                seen.set(v);
                ++total;
            }
        return total == n;
    }

private:
    std::vector<std::vector<int>> classes_;
};

}  // namespace rcw
