#pragma once

#include <cstdint>

namespace simpd {

/// Resource limits for subdivision and the contiguity / cover searches.
/// Exceeding a limit raises BudgetExceeded or SearchBudgetExceeded; results
/// are never silently truncated.
struct SearchOptions {
    /// Refuse a barycentric subdivision step whose projected maximal-simplex
    /// count exceeds this (growth is factorial in simplex dimension).
    std::int64_t max_simplices = 1'000'000;

    /// Cap on distinct states discovered by one contiguity BFS.
    std::int64_t max_frontier = 1'000'000;

    /// Cap on branch-and-bound nodes for one cover search.
    std::int64_t max_cover_nodes = 10'000'000;

    /// Cap on neighbor enumerations per BFS; 0 derives 256 * max_frontier.
    std::int64_t max_bfs_steps = 0;

    enum class PieceOrder {
        Lexicographic,        // assign maximal simplices in lex order
        MostConstrainedFirst, // first-fail: fewest feasible placements next
    };
    PieceOrder piece_order = PieceOrder::Lexicographic;

    std::int64_t bfs_step_budget() const {
        return max_bfs_steps > 0 ? max_bfs_steps : 256 * max_frontier;
    }
};

} // namespace simpd
