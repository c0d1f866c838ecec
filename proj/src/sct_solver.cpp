#include "cipherclimb/sct_solver.hpp"

#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cipherclimb/pair_map.hpp"
#include "cipherclimb/worker_pool.hpp"

namespace cipherclimb {

void SctSolverConfig::validate() const
{
    if (key_length < 2) {
        throw std::invalid_argument("SCT solver: key length must be at least 2");
    }
    if (p1 < 0 || p1 > p2 || p2 > 100) {
        throw std::invalid_argument("SCT solver: thresholds must satisfy 0 <= p1 <= p2 <= 100");
    }
    if (workers == 0 || climbings == 0 || restarts == 0 || op1_hop == 0 || op2_hop == 0) {
        throw std::invalid_argument("SCT solver: workers, climbings, restarts and hop limits must be at least 1");
    }
}

const char* to_string(SearchOperator op) noexcept
{
    switch (op) {
        case SearchOperator::swap_elements: return "I";
        case SearchOperator::swap_blocks: return "II";
        case SearchOperator::shift_block: return "III";
    }
    return "?";
}

SearchOperator select_operator(int u_percent, int p1, int p2) noexcept
{
    if (u_percent < p1) {
        return SearchOperator::swap_elements;
    }
    if (u_percent < p2) {
        return SearchOperator::swap_blocks;
    }
    return SearchOperator::shift_block;
}

void apply_operator_I(TranspositionKey& key, WorkerRngState& rng, std::size_t max_hops)
{
    const std::size_t hops = 1 + rng.next_int_below(max_hops);
    for (std::size_t h = 0; h < hops; ++h) {
        const auto [i, j] = rng.next_distinct_pair(key.size());
        key.swap_elements(i, j);
    }
}

void apply_operator_II(TranspositionKey& key, WorkerRngState& rng, std::size_t max_hops)
{
    const std::size_t k = key.size();
    const std::size_t hops = 1 + rng.next_int_below(max_hops);
    for (std::size_t h = 0; h < hops; ++h) {
        const std::size_t len = 1 + rng.next_int_below(k / 2);
        // Start pairs p < q with q - p >= len correspond one-to-one to pairs
        // p < q' <= slack via q = q' + len - 1.
        const std::size_t slack = k - 2 * len + 1;
        const std::size_t choice = rng.next_int_below(pair_count(slack + 1));
        const auto [p, q_shifted] = unrank_pair(choice, slack + 1);
        key.swap_block(p, q_shifted + len - 1, len);
    }
}

std::size_t shift_move_count(std::size_t key_length) noexcept
{
    std::size_t total = 0;
    for (std::size_t len = 1; len < key_length; ++len) {
        total += (key_length - len + 1) * (key_length - len);
    }
    return total;
}

void apply_operator_III(TranspositionKey& key, WorkerRngState& rng)
{
    const std::size_t k = key.size();
    std::size_t choice = rng.next_int_below(shift_move_count(k));
    for (std::size_t len = 1; len < k; ++len) {
        const std::size_t offsets = k - len;  // non-zero offsets per start
        const std::size_t moves = (k - len + 1) * offsets;
        if (choice < moves) {
            const std::size_t start = choice / offsets;
            auto offset = static_cast<std::ptrdiff_t>(choice % offsets) - static_cast<std::ptrdiff_t>(start);
            if (offset >= 0) {
                ++offset;
            }
            key.shift_block(start, len, offset);
            return;
        }
        choice -= moves;
    }
}

TranspositionKey random_transposition_key(std::size_t key_length, WorkerRngState& rng)
{
    std::vector<Column> perm(key_length);
    std::iota(perm.begin(), perm.end(), Column{0});
    for (std::size_t i = key_length; i > 1; --i) {
        const std::size_t j = rng.next_int_below(i);
        std::swap(perm[i - 1], perm[j]);
    }
    return TranspositionKey(std::move(perm));
}

SctWorkerOutcome sct_worker(const MappedText& cipher, const LogBigramTable& logs, const SctSolverConfig& cfg,
                            WorkerRngState& rng)
{
    if (cfg.key_length < 2) {
        throw std::invalid_argument("sct_worker: key length must be at least 2");
    }
    if (cipher.size() < cfg.key_length) {
        throw std::invalid_argument("sct_worker: ciphertext is shorter than the key");
    }

    SctWorkerOutcome outcome;
    outcome.key = random_transposition_key(cfg.key_length, rng);
    MappedText plain(cipher.size());
    sct_decrypt_into(cipher, outcome.key.columns(), plain);
    outcome.score = log_score_text(plain, logs);

    TranspositionKey candidate = outcome.key;
    for (std::size_t attempt = 0; attempt < cfg.climbings; ++attempt) {
        const auto u = static_cast<int>(rng.next_int_below(100));
        candidate = outcome.key;
        switch (select_operator(u, cfg.p1, cfg.p2)) {
            case SearchOperator::swap_elements: apply_operator_I(candidate, rng, cfg.op1_hop); break;
            case SearchOperator::swap_blocks: apply_operator_II(candidate, rng, cfg.op2_hop); break;
            case SearchOperator::shift_block: apply_operator_III(candidate, rng); break;
        }
        sct_decrypt_into(cipher, candidate.columns(), plain);
        const LogScore score = log_score_text(plain, logs);
        if (score > outcome.score) {
            std::swap(outcome.key, candidate);
            outcome.score = score;
            outcome.history.push_back({attempt, score});
        }
    }
    return outcome;
}

SctSolveResult solve_sct(const MappedText& cipher, const LogBigramTable& logs, const SctSolverConfig& cfg,
                         std::uint32_t restart)
{
    cfg.validate();
    if (cipher.size() < cfg.key_length) {
        throw std::invalid_argument("solve_sct: ciphertext is shorter than the key");
    }
    const auto started = std::chrono::steady_clock::now();

    std::vector<SctWorkerOutcome> outcomes(cfg.workers);
    run_workers(cfg.workers, cfg.threads, [&](std::size_t w) {
        WorkerRngState rng(cfg.global_seed, static_cast<std::uint32_t>(w), restart);
        outcomes[w] = sct_worker(cipher, logs, cfg, rng);
    });

    SctSolveResult result;
    result.per_worker_scores.reserve(outcomes.size());
    for (const auto& o : outcomes) {
        result.per_worker_scores.push_back(o.score);
    }
    const auto [best, value] = max_element(result.per_worker_scores);
    result.best_worker = best;
    result.best_score = value;
    result.best_key = outcomes[best].key;
    result.best_text = sct_decrypt(cipher, result.best_key);
    result.history = std::move(outcomes[best].history);
    result.elapsed =
        std::chrono::duration_cast<std::chrono::nanoseconds>(std::chrono::steady_clock::now() - started);
    return result;
}

RestartOutcome<SctSolveResult> solve_sct_with_restarts(const MappedText& cipher, const LogBigramTable& logs,
                                                       const SctSolverConfig& cfg)
{
    cfg.validate();
    return run_restarts(cfg.restarts, [&](std::size_t r) {
        return solve_sct(cipher, logs, cfg, static_cast<std::uint32_t>(r));
    });
}

unsigned search_space_bits(std::size_t key_length)
{
    double bits = 0.0;
    for (std::size_t i = 2; i <= key_length; ++i) {
        bits += std::log2(static_cast<double>(i));
    }
    return static_cast<unsigned>(std::floor(bits + 1e-9));
}

}  // namespace cipherclimb
