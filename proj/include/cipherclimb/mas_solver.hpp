#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "cipherclimb/ngram_model.hpp"
#include "cipherclimb/pair_map.hpp"
#include "cipherclimb/rng.hpp"
#include "cipherclimb/solve_result.hpp"
#include "cipherclimb/text_codec.hpp"

namespace cipherclimb {

enum class MasMode {
    deterministic,  // best neighbour over all 325 letter pairs per iteration
    stochastic,     // independent better-neighbour climbers
};

struct MasSolverConfig {
    MasMode mode = MasMode::stochastic;
    std::size_t workers = 64;  // forced to 325 in deterministic mode
    std::size_t iterations = 500;
    std::size_t climbings = 10000;
    std::size_t restarts = 1;
    std::uint64_t global_seed = 0;
    // When false every restart reuses restart-0 streams, so a deterministic
    // climb lands on the same peak each time.
    bool reseed_restarts = true;
    unsigned threads = 0;  // execution threads; never changes results

    /// Throws std::invalid_argument on a zero count.
    void validate() const;
    std::size_t effective_workers() const noexcept
    {
        return mode == MasMode::deterministic ? kLetterPairCount : workers;
    }
};

using MasSolveResult = SolveResult<AdditiveScore>;
using MasHistory = ScoreHistory<AdditiveScore>;

/// The ordered letters (psi_left, psi_right) drawn for one deterministic iteration.
struct PsiPair {
    Letter left = 0;
    Letter right = 1;
};

struct DeterministicStep {
    MappedText best_candidate;
    AdditiveScore best_score = 0;
    PairIndex best_index = 0;
    std::vector<AdditiveScore> scores;  // one per pair index
};

/// Letter permutation worker t applies: psi.left <-> delta_l, then psi.right <-> delta_r.
/// Returns false (and leaves `sigma` as identity) when the restriction
/// psi.left != delta_r && psi.right != delta_l is violated.
bool pair_interchange(PsiPair psi, LetterPair delta, std::array<Letter, Alphabet::size>& sigma) noexcept;

/// Scores all 325 interchange candidates and returns the best (lowest index on ties).
/// Restricted candidates score 0. Throws std::invalid_argument if a psi letter is
/// missing from `current` or psi.left == psi.right.
DeterministicStep deterministic_step(const MappedText& current, PsiPair psi, const BigramTable& table,
                                     unsigned threads = 1);

/// Rebuilds the candidate of worker `best_index` from the pair mapping.
MappedText climb(const MappedText& current, PairIndex best_index, PsiPair psi);

MasSolveResult solve_deterministic(const MappedText& cipher, const BigramTable& table, const MasSolverConfig& cfg,
                                   std::uint32_t restart = 0);

/// Working copy of a text that tracks letter positions so a letter interchange
/// can be scored from the affected bigrams only.
class SwapClimbState {
  public:
    SwapClimbState(MappedText text, const BigramTable& table);

    /// score(after swapping a and b) - score(now), touching only bigrams next to a or b.
    std::int64_t swap_delta(Letter a, Letter b) const noexcept;
    void commit_swap(Letter a, Letter b, std::int64_t delta) noexcept;

    const MappedText& text() const noexcept { return text_; }
    AdditiveScore score() const noexcept { return score_; }

  private:
    const BigramTable* table_;
    MappedText text_;
    std::array<std::vector<std::uint32_t>, Alphabet::size> positions_;
    AdditiveScore score_;
};

struct MasWorkerOutcome {
    MappedText text;
    AdditiveScore score = 0;
    MasHistory history;
};

/// One better-neighbour climber starting from the ciphertext: `climbings` random
/// letter interchanges, each committed only when its delta is positive.
MasWorkerOutcome stochastic_worker(const MappedText& cipher, const BigramTable& table, std::size_t climbings,
                                   WorkerRngState& state);

MasSolveResult solve_stochastic(const MappedText& cipher, const BigramTable& table, const MasSolverConfig& cfg,
                                std::uint32_t restart = 0);

/// Dispatches on cfg.mode.
MasSolveResult solve_mas(const MappedText& cipher, const BigramTable& table, const MasSolverConfig& cfg,
                         std::uint32_t restart = 0);

/// cfg.restarts independent solves; restart r derives its streams from (seed, r).
RestartOutcome<MasSolveResult> solve_with_restarts(const MappedText& cipher, const BigramTable& table,
                                                   const MasSolverConfig& cfg);

}  // namespace cipherclimb
