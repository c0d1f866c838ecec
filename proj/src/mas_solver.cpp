#include "cipherclimb/mas_solver.hpp"

#include <chrono>
#include <stdexcept>
#include <utility>

#include "cipherclimb/worker_pool.hpp"

namespace cipherclimb {

namespace {

using Clock = std::chrono::steady_clock;

std::array<bool, Alphabet::size> letters_present(const MappedText& text)
{
    std::array<bool, Alphabet::size> present{};
    for (Letter l : text) {
        present[l] = true;
    }
    return present;
}

void require_solvable(const MappedText& cipher)
{
    if (cipher.size() < 2) {
        throw std::invalid_argument("ciphertext must contain at least 2 letters");
    }
    const auto present = letters_present(cipher);
    std::size_t distinct = 0;
    for (bool p : present) {
        distinct += p ? 1 : 0;
    }
    if (distinct < 2) {
        throw std::invalid_argument("ciphertext must contain at least 2 distinct letters");
    }
}

std::uint32_t restart_stream(const MasSolverConfig& cfg, std::uint32_t restart)
{
    return cfg.reseed_restarts ? restart : 0;
}

AdditiveScore score_under(const MappedText& text, const std::array<Letter, Alphabet::size>& sigma,
                          const BigramTable& table) noexcept
{
    AdditiveScore total = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        total += table.at(sigma[text[i]], sigma[text[i + 1]]);
    }
    return total;
}

}  // namespace

void MasSolverConfig::validate() const
{
    if (workers == 0 || iterations == 0 || restarts == 0) {
        throw std::invalid_argument("MAS solver: workers, iterations and restarts must be at least 1");
    }
}

bool pair_interchange(PsiPair psi, LetterPair delta, std::array<Letter, Alphabet::size>& sigma) noexcept
{
    for (std::size_t x = 0; x < sigma.size(); ++x) {
        sigma[x] = static_cast<Letter>(x);
    }
    if (psi.left == delta.right || psi.right == delta.left) {
        return false;
    }
    auto transpose = [](Letter x, Letter u, Letter v) -> Letter { return x == u ? v : (x == v ? u : x); };
    for (auto& image : sigma) {
        image = transpose(transpose(image, psi.left, delta.left), psi.right, delta.right);
    }
    return true;
}

DeterministicStep deterministic_step(const MappedText& current, PsiPair psi, const BigramTable& table,
                                     unsigned threads)
{
    if (psi.left == psi.right || psi.left >= Alphabet::size || psi.right >= Alphabet::size) {
        throw std::invalid_argument("deterministic_step: psi letters must be distinct letter indices");
    }
    const auto present = letters_present(current);
    if (!present[psi.left] || !present[psi.right]) {
        throw std::invalid_argument("deterministic_step: psi letters must both occur in the text");
    }

    DeterministicStep step;
    step.scores.assign(kLetterPairCount, 0);
    run_workers(kLetterPairCount, threads, [&](std::size_t t) {
        std::array<Letter, Alphabet::size> sigma{};
        if (pair_interchange(psi, index_to_pair(t), sigma)) {
            step.scores[t] = score_under(current, sigma, table);
        }
    });
    const auto [best, value] = max_element(step.scores);
    step.best_index = best;
    step.best_score = value;
    step.best_candidate = climb(current, best, psi);
    return step;
}

MappedText climb(const MappedText& current, PairIndex best_index, PsiPair psi)
{
    std::array<Letter, Alphabet::size> sigma{};
    pair_interchange(psi, index_to_pair(best_index), sigma);
    MappedText out(current.size());
    for (std::size_t i = 0; i < current.size(); ++i) {
        out[i] = sigma[current[i]];
    }
    return out;
}

MasSolveResult solve_deterministic(const MappedText& cipher, const BigramTable& table, const MasSolverConfig& cfg,
                                   std::uint32_t restart)
{
    cfg.validate();
    require_solvable(cipher);
    const auto started = Clock::now();

    WorkerRngState host(cfg.global_seed, kHostStream, restart_stream(cfg, restart));
    MasSolveResult result;
    result.best_text = cipher;
    result.best_score = score_text(cipher, table);
    result.per_worker_scores.assign(kLetterPairCount, 0);

    for (std::size_t it = 0; it < cfg.iterations; ++it) {
        const auto present = letters_present(result.best_text);
        PsiPair psi;
        for (;;) {
            const auto [a, b] = host.next_distinct_pair(Alphabet::size);
            if (present[a] && present[b]) {
                psi = {static_cast<Letter>(a), static_cast<Letter>(b)};
                break;
            }
        }
        DeterministicStep step = deterministic_step(result.best_text, psi, table, cfg.threads);
        result.per_worker_scores = std::move(step.scores);
        if (step.best_score > result.best_score) {
            result.best_text = std::move(step.best_candidate);
            result.best_score = step.best_score;
            result.best_worker = step.best_index;
            result.history.push_back({it, step.best_score});
        }
    }
    result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - started);
    return result;
}

// SwapClimbState ---------------------------------------------------------------

SwapClimbState::SwapClimbState(MappedText text, const BigramTable& table)
    : table_(&table), text_(std::move(text)), score_(score_text(text_, table))
{
    for (std::size_t i = 0; i < text_.size(); ++i) {
        positions_.at(text_[i]).push_back(static_cast<std::uint32_t>(i));
    }
}

std::int64_t SwapClimbState::swap_delta(Letter a, Letter b) const noexcept
{
    const BigramTable& table = *table_;
    const std::size_t n = text_.size();
    auto swapped = [a, b](Letter x) -> Letter { return x == a ? b : (x == b ? a : x); };
    auto gain = [&](Letter l, Letter r) {
        return static_cast<std::int64_t>(table.at(swapped(l), swapped(r))) - static_cast<std::int64_t>(table.at(l, r));
    };

    // Each affected bigram (i, i+1) is counted once: from i when text[i] is a or b,
    // otherwise from i+1.
    std::int64_t delta = 0;
    for (Letter letter : {a, b}) {
        for (std::uint32_t p : positions_[letter]) {
            if (p + 1 < n) {
                delta += gain(text_[p], text_[p + 1]);
            }
            if (p > 0) {
                const Letter prev = text_[p - 1];
                if (prev != a && prev != b) {
                    delta += gain(prev, text_[p]);
                }
            }
        }
    }
    return delta;
}

void SwapClimbState::commit_swap(Letter a, Letter b, std::int64_t delta) noexcept
{
    for (std::uint32_t p : positions_[a]) {
        text_[p] = b;
    }
    for (std::uint32_t p : positions_[b]) {
        text_[p] = a;
    }
    std::swap(positions_[a], positions_[b]);
    score_ = static_cast<AdditiveScore>(static_cast<std::int64_t>(score_) + delta);
}

MasWorkerOutcome stochastic_worker(const MappedText& cipher, const BigramTable& table, std::size_t climbings,
                                   WorkerRngState& state)
{
    SwapClimbState climber(cipher, table);
    MasWorkerOutcome outcome;
    for (std::size_t attempt = 0; attempt < climbings; ++attempt) {
        const auto [a, b] = state.next_distinct_pair(Alphabet::size);
        const auto left = static_cast<Letter>(a);
        const auto right = static_cast<Letter>(b);
        const std::int64_t delta = climber.swap_delta(left, right);
        if (delta > 0) {
            climber.commit_swap(left, right, delta);
            outcome.history.push_back({attempt, climber.score()});
        }
    }
    outcome.text = climber.text();
    outcome.score = climber.score();
    return outcome;
}

MasSolveResult solve_stochastic(const MappedText& cipher, const BigramTable& table, const MasSolverConfig& cfg,
                                std::uint32_t restart)
{
    cfg.validate();
    require_solvable(cipher);
    const auto started = Clock::now();

    std::vector<MasWorkerOutcome> outcomes(cfg.workers);
    run_workers(cfg.workers, cfg.threads, [&](std::size_t w) {
        WorkerRngState rng(cfg.global_seed, static_cast<std::uint32_t>(w), restart_stream(cfg, restart));
        outcomes[w] = stochastic_worker(cipher, table, cfg.climbings, rng);
    });

    MasSolveResult result;
    result.per_worker_scores.reserve(outcomes.size());
    for (const auto& o : outcomes) {
        result.per_worker_scores.push_back(o.score);
    }
    const auto [best, value] = max_element(result.per_worker_scores);
    result.best_worker = best;
    result.best_score = value;
    result.best_text = std::move(outcomes[best].text);
    result.history = std::move(outcomes[best].history);
    result.elapsed = std::chrono::duration_cast<std::chrono::nanoseconds>(Clock::now() - started);
    return result;
}

MasSolveResult solve_mas(const MappedText& cipher, const BigramTable& table, const MasSolverConfig& cfg,
                         std::uint32_t restart)
{
    return cfg.mode == MasMode::deterministic ? solve_deterministic(cipher, table, cfg, restart)
                                              : solve_stochastic(cipher, table, cfg, restart);
}

RestartOutcome<MasSolveResult> solve_with_restarts(const MappedText& cipher, const BigramTable& table,
                                                   const MasSolverConfig& cfg)
{
    cfg.validate();
    return run_restarts(cfg.restarts, [&](std::size_t r) {
        return solve_mas(cipher, table, cfg, static_cast<std::uint32_t>(r));
    });
}

}  // namespace cipherclimb
