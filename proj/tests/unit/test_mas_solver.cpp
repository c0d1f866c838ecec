#include <doctest.h>

#include <set>

#include "cipherclimb/mas_solver.hpp"
#include "cipherclimb/worker_pool.hpp"
#include "support/oracles.hpp"

using namespace cipherclimb;

namespace {

// Draws psi letters that both occur in the text, like the solver's host loop.
PsiPair random_psi(oracle::Gen& g, const MappedText& text)
{
    std::set<Letter> present(text.begin(), text.end());
    std::vector<Letter> letters(present.begin(), present.end());
    const Letter a = letters[g() % letters.size()];
    Letter b = a;
    while (b == a) {
        b = letters[g() % letters.size()];
    }
    return {a, b};
}

// The text must be a consistent letter relabelling of the original.
bool is_letter_permutation_image(const MappedText& original, const MappedText& image)
{
    if (original.size() != image.size()) {
        return false;
    }
    std::array<int, 26> fwd;
    std::array<int, 26> back;
    fwd.fill(-1);
    back.fill(-1);
    for (std::size_t i = 0; i < original.size(); ++i) {
        const int a = original[i];
        const int b = image[i];
        if ((fwd[a] != -1 && fwd[a] != b) || (back[b] != -1 && back[b] != a)) {
            return false;
        }
        fwd[a] = b;
        back[b] = a;
    }
    return true;
}

MappedText english_cipher(std::uint64_t seed)
{
    oracle::Gen g(seed);
    const auto plain = oracle::to_mapped(oracle::letters_of(oracle::slurp(oracle::data_path("tests/data/mas_plain.txt"))));
    return mas_encrypt(plain, oracle::random_substitution(g));
}

BigramTable english_loglik()
{
    std::ifstream in(oracle::data_path("data/english_bigrams_loglik.txt"));
    return parse_bigram_file(in).table;
}

}  // namespace

TEST_CASE("max_element picks the lowest index among ties")
{
    CHECK(max_element(std::vector<int>{1, 5, 3}) == std::pair<std::size_t, int>{1, 5});
    CHECK(max_element(std::vector<int>{7}) == std::pair<std::size_t, int>{0, 7});
    CHECK(max_element(std::vector<int>{4, 9, 9}) == std::pair<std::size_t, int>{1, 9});
    CHECK(max_element(std::vector<double>{-3.0, -1.0, -1.0, -2.0}) == std::pair<std::size_t, double>{1, -1.0});
    CHECK_THROWS_AS(max_element(std::vector<int>{}), std::invalid_argument);

    oracle::Gen g(3);
    for (int trial = 0; trial < 200; ++trial) {
        std::vector<unsigned> v(1 + g() % 30);
        for (auto& x : v) {
            x = static_cast<unsigned>(g() % 5);
        }
        std::size_t want = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] > v[want]) {
                want = i;
            }
        }
        CHECK(max_element(v).first == want);
    }
}

TEST_CASE("pair_interchange")
{
    std::array<Letter, 26> sigma{};
    std::iota(sigma.begin(), sigma.end(), Letter{0});
    CHECK(pair_interchange({0, 1}, {0, 1}, sigma));
    CHECK(sigma[0] == 0);
    CHECK(sigma[1] == 1);

    std::iota(sigma.begin(), sigma.end(), Letter{0});
    CHECK(pair_interchange({2, 5}, {3, 7}, sigma));
    CHECK(sigma[2] == 3);
    CHECK(sigma[3] == 2);
    CHECK(sigma[5] == 7);
    CHECK(sigma[7] == 5);

    std::iota(sigma.begin(), sigma.end(), Letter{0});
    CHECK_FALSE(pair_interchange({4, 9}, {2, 4}, sigma));  // psi left equals delta right
    CHECK_FALSE(pair_interchange({4, 1}, {1, 6}, sigma));  // psi right equals delta left
}

TEST_CASE("deterministic step equals the 325-candidate brute force")
{
    oracle::Gen g(4242);
    for (int trial = 0; trial < 100; ++trial) {
        const BigramTable table = oracle::random_table(g, trial % 3 == 0 ? 3 : 100000);
        const MappedText text = oracle::random_text(g, 200, 5 + trial % 22);
        const PsiPair psi = random_psi(g, text);
        const DeterministicStep step = deterministic_step(text, psi, table);
        const auto want = oracle::brute_force_step(text, psi.left, psi.right, table);
        REQUIRE(step.scores.size() == 325);
        CHECK(step.scores == want.scores);
        CHECK(step.best_index == want.best_index);
        CHECK(step.best_score == want.best_score);
        CHECK(step.best_candidate == want.best_text);
        CHECK(climb(text, step.best_index, psi) == want.best_text);
    }
}

TEST_CASE("deterministic step keeps an optimal text via the identity interchange")
{
    MappedText text;
    for (int i = 0; i < 20; ++i) {
        text.push_back(0);
        text.push_back(1);
    }
    BigramTable::Scores s{};
    s.fill(1);
    s[bigram_index(0, 1)] = 100;
    s[bigram_index(1, 0)] = 100;
    const BigramTable table(s);
    const auto step = deterministic_step(text, {0, 1}, table);
    CHECK(step.best_index == pair_to_index({0, 1}));
    CHECK(step.best_score == score_text(text, table));
    CHECK(step.best_candidate == text);
}

TEST_CASE("deterministic step preconditions")
{
    BigramTable table;
    CHECK_THROWS_AS(deterministic_step(map_text("abab"), {0, 2}, table), std::invalid_argument);
    CHECK_THROWS_AS(deterministic_step(map_text("abab"), {1, 1}, table), std::invalid_argument);
    CHECK_THROWS_AS(deterministic_step(map_text("abab"), {0, 26}, table), std::invalid_argument);
}

TEST_CASE("deterministic step does not depend on the thread count")
{
    oracle::Gen g(77);
    const BigramTable table = oracle::random_table(g);
    const MappedText text = oracle::random_text(g, 300);
    const PsiPair psi = random_psi(g, text);
    const auto one = deterministic_step(text, psi, table, 1);
    const auto four = deterministic_step(text, psi, table, 4);
    CHECK(one.scores == four.scores);
    CHECK(one.best_index == four.best_index);
    CHECK(one.best_candidate == four.best_candidate);
}

TEST_CASE("swap delta equals the full rescore difference")
{
    oracle::Gen g(555);
    for (int trial = 0; trial < 10000; ++trial) {
        const BigramTable table = oracle::random_table(g, trial % 2 == 0 ? 1000000000 : 50);
        const MappedText text = oracle::random_text(g, 2 + g() % 300, 2 + g() % 25);
        SwapClimbState state(text, table);
        const Letter a = static_cast<Letter>(g() % 26);
        const Letter b = static_cast<Letter>((a + 1 + g() % 25) % 26);
        const MappedText after = oracle::swap_letters(text, a, b);
        const auto before_score = static_cast<std::int64_t>(oracle::rescore(text, table));
        const auto after_score = static_cast<std::int64_t>(oracle::rescore(after, table));
        const std::int64_t delta = state.swap_delta(a, b);
        REQUIRE(delta == after_score - before_score);
        state.commit_swap(a, b, delta);
        CHECK(state.text() == after);
        CHECK(state.score() == static_cast<AdditiveScore>(after_score));
        // and back again from the committed state
        CHECK(state.swap_delta(a, b) == -delta);
    }
}

TEST_CASE("swap of letters absent from the text has zero delta")
{
    oracle::Gen g(1);
    const BigramTable table = oracle::random_table(g);
    SwapClimbState state(map_text("abcabc"), table);
    CHECK(state.swap_delta(10, 20) == 0);
}

TEST_CASE("stochastic worker contracts")
{
    oracle::Gen g(99);
    const BigramTable table = oracle::random_table(g);
    const MappedText cipher = oracle::random_text(g, 250);

    WorkerRngState idle(1, 0);
    const auto none = stochastic_worker(cipher, table, 0, idle);
    CHECK(none.text == cipher);
    CHECK(none.score == score_text(cipher, table));
    CHECK(none.history.empty());

    WorkerRngState rng(1, 0);
    const auto out = stochastic_worker(cipher, table, 3000, rng);
    CHECK(out.score == score_text(out.text, table));
    CHECK(out.score >= score_text(cipher, table));
    CHECK(is_letter_permutation_image(cipher, out.text));
    for (std::size_t i = 1; i < out.history.size(); ++i) {
        CHECK(out.history[i].score > out.history[i - 1].score);
        CHECK(out.history[i].iteration > out.history[i - 1].iteration);
    }
    if (!out.history.empty()) {
        CHECK(out.history.back().score == out.score);
        CHECK(out.history.front().score > score_text(cipher, table));
    }
}

TEST_CASE("solve_stochastic with one worker is a single worker run")
{
    oracle::Gen g(12);
    const BigramTable table = oracle::random_table(g);
    const MappedText cipher = oracle::random_text(g, 150);
    MasSolverConfig cfg;
    cfg.workers = 1;
    cfg.climbings = 2000;
    cfg.global_seed = 31337;
    const auto result = solve_stochastic(cipher, table, cfg);
    WorkerRngState rng(31337, 0);
    const auto single = stochastic_worker(cipher, table, 2000, rng);
    CHECK(result.best_text == single.text);
    CHECK(result.best_score == single.score);
    CHECK(result.history == single.history);
    CHECK(result.per_worker_scores == std::vector<AdditiveScore>{single.score});
}

TEST_CASE("solve_stochastic is reproducible and independent of scheduling")
{
    oracle::Gen g(13);
    const BigramTable table = oracle::random_table(g);
    const MappedText cipher = oracle::random_text(g, 200);
    MasSolverConfig cfg;
    cfg.workers = 12;
    cfg.climbings = 1500;
    cfg.global_seed = 5;
    cfg.threads = 1;
    const auto a = solve_stochastic(cipher, table, cfg);
    const auto b = solve_stochastic(cipher, table, cfg);
    cfg.threads = 4;
    const auto c = solve_stochastic(cipher, table, cfg);
    for (const auto* r : {&b, &c}) {
        CHECK(r->best_text == a.best_text);
        CHECK(r->best_score == a.best_score);
        CHECK(r->best_worker == a.best_worker);
        CHECK(r->per_worker_scores == a.per_worker_scores);
        CHECK(r->history == a.history);
    }
    for (auto s : a.per_worker_scores) {
        CHECK(a.best_score >= s);
    }
    CHECK(a.best_score == a.per_worker_scores[a.best_worker]);
}

TEST_CASE("solve_deterministic determinism and history")
{
    const BigramTable table = english_loglik();
    const MappedText cipher = english_cipher(3);
    MasSolverConfig cfg;
    cfg.mode = MasMode::deterministic;
    cfg.iterations = 60;
    cfg.global_seed = 8;
    const auto a = solve_deterministic(cipher, table, cfg);
    const auto b = solve_deterministic(cipher, table, cfg);
    cfg.threads = 3;
    const auto c = solve_deterministic(cipher, table, cfg);
    CHECK(a.history == b.history);
    CHECK(a.history == c.history);
    CHECK(a.best_text == c.best_text);
    REQUIRE_FALSE(a.history.empty());
    for (std::size_t i = 1; i < a.history.size(); ++i) {
        CHECK(a.history[i].score > a.history[i - 1].score);
    }
    CHECK(a.best_score == a.history.back().score);
    CHECK(a.best_score == score_text(a.best_text, table));
    CHECK(a.per_worker_scores.size() == 325);
    CHECK(is_letter_permutation_image(cipher, a.best_text));
    CHECK(cfg.effective_workers() == 325);
}

TEST_CASE("solve_deterministic on an already-optimal text accepts nothing")
{
    MappedText text;
    for (int i = 0; i < 10; ++i) {
        text.insert(text.end(), {0, 1, 2});
    }
    BigramTable::Scores s{};
    s[bigram_index(0, 1)] = 50;
    s[bigram_index(1, 2)] = 50;
    s[bigram_index(2, 0)] = 50;
    MasSolverConfig cfg;
    cfg.mode = MasMode::deterministic;
    cfg.iterations = 20;
    const auto r = solve_deterministic(text, BigramTable(s), cfg);
    CHECK(r.history.empty());
    CHECK(r.best_text == text);
}

TEST_CASE("degenerate ciphertexts and bad configs are rejected")
{
    BigramTable table;
    MasSolverConfig cfg;
    for (auto mode : {MasMode::deterministic, MasMode::stochastic}) {
        cfg.mode = mode;
        CHECK_THROWS_AS(solve_mas(map_text("a"), table, cfg), std::invalid_argument);
        CHECK_THROWS_AS(solve_mas(map_text(""), table, cfg), std::invalid_argument);
        CHECK_THROWS_AS(solve_mas(map_text("aaaa"), table, cfg), std::invalid_argument);
    }
    cfg.workers = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
    cfg.workers = 1;
    cfg.restarts = 0;
    CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
}

TEST_CASE("restarts: single restart, prefix property and attractor")
{
    oracle::Gen g(21);
    const BigramTable table = oracle::random_table(g);
    const MappedText cipher = oracle::random_text(g, 120);
    MasSolverConfig cfg;
    cfg.workers = 4;
    cfg.climbings = 500;
    cfg.global_seed = 17;

    cfg.restarts = 1;
    const auto one = solve_with_restarts(cipher, table, cfg);
    const auto direct = solve_stochastic(cipher, table, cfg);
    CHECK(one.runs.size() == 1);
    CHECK(one.best().best_text == direct.best_text);
    CHECK(one.best().best_score == direct.best_score);

    AdditiveScore previous = 0;
    for (std::size_t r = 1; r <= 5; ++r) {
        cfg.restarts = r;
        const auto out = solve_with_restarts(cipher, table, cfg);
        CHECK(out.best().best_score >= previous);
        previous = out.best().best_score;
        for (std::size_t i = 0; i < r; ++i) {
            CHECK(out.runs[i].restart_index == i);
            const auto alone = solve_stochastic(cipher, table, cfg, static_cast<std::uint32_t>(i));
            CHECK(out.runs[i].best_text == alone.best_text);
        }
    }

    // Same streams on every restart: the deterministic climb lands on the same peak.
    cfg.mode = MasMode::deterministic;
    cfg.iterations = 40;
    cfg.restarts = 3;
    cfg.reseed_restarts = false;
    const auto same = solve_with_restarts(cipher, table, cfg);
    for (const auto& run : same.runs) {
        CHECK(run.history == same.runs[0].history);
        CHECK(run.best_text == same.runs[0].best_text);
    }
    CHECK(same.best_restart == 0);
}

TEST_CASE("run_workers visits every index once for any pool size and rethrows failures")
{
    for (unsigned threads : {0u, 1u, 2u, 7u}) {
        std::vector<int> hits(50, 0);
        run_workers(hits.size(), threads, [&](std::size_t w) { ++hits[w]; });
        CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
    }
    CHECK_THROWS_AS(run_workers(10, 3,
                                [](std::size_t w) {
                                    if (w == 4) {
                                        throw std::runtime_error("boom");
                                    }
                                }),
                    std::runtime_error);
    CHECK(resolve_thread_count(8, 3) == 3);
    CHECK(resolve_thread_count(2, 100) == 2);
    CHECK(resolve_thread_count(0, 100) >= 1);
}
