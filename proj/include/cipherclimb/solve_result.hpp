#pragma once

#include <chrono>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cipherclimb/text_codec.hpp"

namespace cipherclimb {

template <typename Score>
struct HistoryEntry {
    std::size_t iteration = 0;  // outer iteration (deterministic) or climbing try (stochastic)
    Score score{};

    friend bool operator==(const HistoryEntry&, const HistoryEntry&) = default;
};

/// Accepted improvements; scores strictly increase along the sequence.
template <typename Score>
using ScoreHistory = std::vector<HistoryEntry<Score>>;

template <typename Score>
struct SolveResult {
    MappedText best_text;
    Score best_score{};
    std::size_t best_worker = 0;
    std::vector<Score> per_worker_scores;
    ScoreHistory<Score> history;
    std::size_t restart_index = 0;
    std::chrono::nanoseconds elapsed{0};
};

/// Maximum value and the lowest index holding it. Throws std::invalid_argument on empty input.
template <typename Score>
std::pair<std::size_t, Score> max_element(std::span<const Score> scores)
{
    if (scores.empty()) {
        throw std::invalid_argument("max_element: empty score list");
    }
    std::size_t best = 0;
    for (std::size_t i = 1; i < scores.size(); ++i) {
        if (scores[i] > scores[best]) {
            best = i;
        }
    }
    return {best, scores[best]};
}

template <typename Score>
std::pair<std::size_t, Score> max_element(const std::vector<Score>& scores)
{
    return max_element(std::span<const Score>(scores));
}

template <typename Result>
struct RestartOutcome {
    std::vector<Result> runs;  // one per restart, in restart order
    std::size_t best_restart = 0;

    const Result& best() const { return runs.at(best_restart); }
};

/// Runs solve_once(r) for r = 0 .. restarts-1 and keeps the best-scoring run
/// (earliest restart on ties).
template <typename SolveOnce>
auto run_restarts(std::size_t restarts, SolveOnce&& solve_once)
{
    using Result = decltype(solve_once(std::size_t{0}));
    if (restarts == 0) {
        throw std::invalid_argument("run_restarts: need at least one restart");
    }
    RestartOutcome<Result> outcome;
    outcome.runs.reserve(restarts);
    for (std::size_t r = 0; r < restarts; ++r) {
        outcome.runs.push_back(solve_once(r));
        outcome.runs.back().restart_index = r;
        if (outcome.runs.back().best_score > outcome.runs[outcome.best_restart].best_score) {
            outcome.best_restart = r;
        }
    }
    return outcome;
}

}  // namespace cipherclimb
