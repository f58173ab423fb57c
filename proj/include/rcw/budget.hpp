#pragma once

#include <chrono>
#include <cstdint>
#include <optional>

namespace rcw {

/// Node budget for backtracking searches. One node = one vertex (or edge)
/// extension attempt. Exhaustion is reported as a distinct Unknown outcome,
/// never conflated with a definitive absence.
struct Budget {
    std::uint64_t max_nodes = UINT64_MAX;
    std::optional<std::uint64_t> wall_millis;  // soft limit, checked rarely

    static Budget unlimited() { return {}; }
    static Budget nodes(std::uint64_t n) { return Budget{n, std::nullopt}; }
};

/// Shared counter threaded through a search tree. The wall clock is soft:
/// it is consulted every 4096 nodes, after which the counter reports
/// exhaustion exactly like a spent node budget.
struct SearchCounter {
    std::uint64_t nodes = 0;
    std::uint64_t limit = UINT64_MAX;
    std::optional<std::chrono::steady_clock::time_point> deadline;

    explicit SearchCounter(const Budget& b) : limit(b.max_nodes) {
        if (b.wall_millis)
            deadline = std::chrono::steady_clock::now() +
                       std::chrono::milliseconds(*b.wall_millis);
    }
    SearchCounter() = default;

    /// Returns false once the budget is gone.
    bool tick() {
        ++nodes;
        if (deadline && (nodes & 0xFFF) == 0 &&
            std::chrono::steady_clock::now() > *deadline)
            limit = 0;
        return nodes <= limit;
    }
    bool exhausted() const { return nodes > limit; }
};

}  // namespace rcw
