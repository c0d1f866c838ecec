#pragma once

#include <cstddef>
#include <cstdint>

#include "cipherclimb/ciphers.hpp"
#include "cipherclimb/ngram_model.hpp"
#include "cipherclimb/rng.hpp"
#include "cipherclimb/solve_result.hpp"

namespace cipherclimb {

struct SctSolverConfig {
    std::size_t key_length = 0;
    std::size_t workers = 64;
    std::size_t climbings = 15000;
    // Operator I below p1, operator II in [p1, p2), operator III from p2 (percent).
    int p1 = 33;
    int p2 = 66;
    std::size_t op1_hop = 3;
    std::size_t op2_hop = 3;
    std::size_t restarts = 1;
    std::uint64_t global_seed = 0;
    unsigned threads = 0;  // execution threads; never changes results

    /// Throws std::invalid_argument unless k >= 2, 0 <= p1 <= p2 <= 100 and all counts >= 1.
    void validate() const;
};

enum class SearchOperator {
    swap_elements,  // I
    swap_blocks,    // II
    shift_block,    // III
};

const char* to_string(SearchOperator op) noexcept;

/// u < p1 -> I, p1 <= u < p2 -> II, otherwise III.
SearchOperator select_operator(int u_percent, int p1, int p2) noexcept;

// The operators mutate `key` in place; every result is a permutation.

/// 1..max_hops (uniform) swaps of two distinct random positions.
void apply_operator_I(TranspositionKey& key, WorkerRngState& rng, std::size_t max_hops);

/// 1..max_hops (uniform) exchanges of two equal-length non-overlapping blocks. Each
/// draws a length in 1..k/2, then a start pair uniformly among the feasible ones.
void apply_operator_II(TranspositionKey& key, WorkerRngState& rng, std::size_t max_hops);

/// One block shift, uniform over all in-bounds (start, length, non-zero offset) triples.
void apply_operator_III(TranspositionKey& key, WorkerRngState& rng);

/// Number of (start, length, offset) triples operator III chooses from.
std::size_t shift_move_count(std::size_t key_length) noexcept;

/// Uniform random permutation of 0..k-1 (Fisher-Yates).
TranspositionKey random_transposition_key(std::size_t key_length, WorkerRngState& rng);

struct SctWorkerOutcome {
    TranspositionKey key = TranspositionKey::identity(1);
    LogScore score = 0.0;
    ScoreHistory<LogScore> history;
};

/// Hill climb from a random key; each try applies one selected operator to a copy of
/// the current key and keeps it only if the log-bigram score strictly improves.
/// Throws std::invalid_argument if the ciphertext is shorter than the key.
SctWorkerOutcome sct_worker(const MappedText& cipher, const LogBigramTable& logs, const SctSolverConfig& cfg,
                            WorkerRngState& rng);

struct SctSolveResult : SolveResult<LogScore> {
    TranspositionKey best_key = TranspositionKey::identity(1);
};

SctSolveResult solve_sct(const MappedText& cipher, const LogBigramTable& logs, const SctSolverConfig& cfg,
                         std::uint32_t restart = 0);

RestartOutcome<SctSolveResult> solve_sct_with_restarts(const MappedText& cipher, const LogBigramTable& logs,
                                                       const SctSolverConfig& cfg);

/// floor(log2(k!)), the search-space size in bits.
unsigned search_space_bits(std::size_t key_length);

}  // namespace cipherclimb
