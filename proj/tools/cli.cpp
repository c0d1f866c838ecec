#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <iterator>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "cipherclimb/ciphers.hpp"
#include "cipherclimb/mas_solver.hpp"
#include "cipherclimb/ngram_model.hpp"
#include "cipherclimb/rng.hpp"
#include "cipherclimb/sct_solver.hpp"
#include "cipherclimb/text_codec.hpp"

namespace cipherclimb::cli {

namespace {

using Json = nlohmann::ordered_json;

class IoError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot read '" + path + "'");
    }
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

std::string read_input(const std::string& path, std::istream& in)
{
    if (path == "-") {
        return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
    }
    return read_file(path);
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out || !(out << contents) || !out.flush()) {
        throw IoError("cannot write '" + path + "'");
    }
}

/// Ciphertext files hold a-z only; whitespace (line breaks included) is ignored.
MappedText read_ciphertext(const std::string& path)
{
    std::string raw = read_file(path);
    std::string letters;
    letters.reserve(raw.size());
    for (char c : raw) {
        if (c == ' ' || c == '\n' || c == '\r' || c == '\t') {
            continue;
        }
        letters.push_back(c);
    }
    try {
        return map_text(letters);
    } catch (const std::invalid_argument&) {
        throw IoError("ciphertext '" + path + "' must contain only lowercase a-z and whitespace");
    }
}

BigramTable load_bigrams(const std::string& path, std::ostream& err)
{
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot read bigram file '" + path + "'");
    }
    try {
        ParsedBigrams parsed = parse_bigram_file(in);
        for (const auto& w : parsed.warnings) {
            err << "warning: " << path << ": " << w << '\n';
        }
        return parsed.table;
    } catch (const BigramParseError& e) {
        throw IoError(path + ": " + e.what());
    }
}

std::uint64_t resolve_seed(const std::optional<std::uint64_t>& seed)
{
    if (seed) {
        return *seed;
    }
    return static_cast<std::uint64_t>(std::chrono::system_clock::now().time_since_epoch().count());
}

SubstitutionKey random_substitution_key(WorkerRngState& rng)
{
    SubstitutionKey::Mapping m{};
    std::iota(m.begin(), m.end(), Letter{0});
    for (std::size_t i = m.size(); i > 1; --i) {
        std::swap(m[i - 1], m[rng.next_int_below(i)]);
    }
    return SubstitutionKey(m);
}

double to_seconds(std::chrono::nanoseconds ns)
{
    return std::chrono::duration<double>(ns).count();
}

template <typename Score>
Json history_json(const ScoreHistory<Score>& history)
{
    Json out = Json::array();
    for (const auto& h : history) {
        out.push_back(Json::array({h.iteration, h.score}));
    }
    return out;
}

template <typename Result>
Json run_json(const Result& run, bool timing)
{
    Json j;
    j["restart"] = run.restart_index;
    j["best_score"] = run.best_score;
    j["best_worker"] = run.best_worker;
    j["improvements"] = run.history.size();
    j["best_text"] = demap(run.best_text);
    if (timing) {
        j["elapsed_s"] = to_seconds(run.elapsed);
    }
    return j;
}

template <typename Result>
void print_restart_line(std::ostream& out, const Result& run)
{
    out << "restart " << run.restart_index << ": peak " << std::setprecision(10) << run.best_score << " (worker "
        << run.best_worker << ", " << run.history.size() << " improvements, " << std::fixed << std::setprecision(3)
        << to_seconds(run.elapsed) << "s)\n"
        << std::defaultfloat << "  " << demap(run.best_text) << '\n';
}

template <typename Result>
void print_history(std::ostream& out, const Result& run)
{
    for (const auto& h : run.history) {
        out << "  [" << h.iteration << "] score " << std::setprecision(10) << h.score << '\n';
    }
}

Json solve_config_json(const SolveOptions& opts, std::uint64_t seed, std::size_t cipher_length)
{
    Json c;
    c["mode"] = opts.mode;
    c["ciphertext"] = opts.ciphertext;
    c["ciphertext_length"] = cipher_length;
    c["bigrams"] = opts.bigrams;
    c["seed"] = seed;
    c["restarts"] = opts.restarts;
    if (opts.mode == "mas-det") {
        c["workers"] = kLetterPairCount;
        c["iterations"] = opts.iterations;
    } else {
        c["workers"] = opts.workers;
        c["climbings"] = opts.climbings;
    }
    if (opts.mode == "sct") {
        c["key_length"] = opts.key_length;
        c["p1"] = opts.p1;
        c["p2"] = opts.p2;
        c["op1_hop"] = opts.op1_hop;
        c["op2_hop"] = opts.op2_hop;
        c["log_floor"] = opts.log_floor;
    }
    return c;
}

struct CsvRow {
    std::size_t key_size = 0;
    std::size_t workers = 0;
    std::size_t climbings = 0;
};

std::vector<CsvRow> load_suite(const BenchmarkOptions& opts)
{
    std::vector<CsvRow> rows;
    if (!opts.suite.empty()) {
        std::istringstream lines(read_file(opts.suite));
        std::string line;
        while (std::getline(lines, line)) {
            if (line.empty() || line[0] == '#' || line.find_first_not_of(" \t\r") == std::string::npos) {
                continue;
            }
            CsvRow row;
            char c1 = 0;
            char c2 = 0;
            std::istringstream fields(line);
            if (!(fields >> row.key_size >> c1 >> row.workers >> c2 >> row.climbings) || c1 != ',' || c2 != ',') {
                throw std::invalid_argument("suite line '" + line + "' is not 'key_size,workers,climbings'");
            }
            rows.push_back(row);
        }
    }
    for (std::size_t k : opts.key_sizes) {
        rows.push_back({k, opts.workers, opts.climbings});
    }
    return rows;
}

constexpr const char* kCsvHeader = "key_size,search_bits,workers,climbings,seed,wall_ms,recovered";

}  // namespace

// corpus ----------------------------------------------------------------------

int cmd_corpus_build(const CorpusOptions& opts, std::ostream& out, std::ostream& err)
{
    BigramTable::Scores total{};
    for (const auto& path : opts.inputs) {
        const BigramTable table = opts.counts_input ? load_bigrams(path, err) : build_table_from_corpus(read_file(path));
        for (std::size_t i = 0; i < kBigramCount; ++i) {
            total[i] += table[i];
        }
    }
    BigramTable table(total);
    if (opts.scale == "loglik") {
        table = build_loglik_table(table, opts.log_floor, opts.resolution);
    } else if (opts.scale != "counts") {
        throw std::invalid_argument("corpus: --scale must be counts or loglik");
    }
    std::ostringstream text;
    write_bigram_file(text, table);
    if (opts.output.empty() || opts.output == "-") {
        out << text.str();
    } else {
        write_file(opts.output, text.str());
    }
    return kExitOk;
}

// encrypt ---------------------------------------------------------------------

int cmd_encrypt(const EncryptOptions& opts, std::istream& in, std::ostream& out, std::ostream& err)
{
    const MappedText plain = map_text(normalize(read_input(opts.input, in)));
    const std::uint64_t seed = resolve_seed(opts.seed);
    WorkerRngState rng(seed, kKeygenStream);

    if (opts.cipher == "mas") {
        if (opts.random_key == !opts.key.empty()) {
            throw std::invalid_argument("encrypt: give exactly one of --key or --random-key");
        }
        const SubstitutionKey key =
            opts.random_key ? random_substitution_key(rng) : SubstitutionKey::from_string(opts.key);
        out << demap(mas_encrypt(plain, key)) << '\n';
        err << "key: " << key.to_string() << '\n';
    } else if (opts.cipher == "sct") {
        if (opts.random_key == !opts.key.empty()) {
            throw std::invalid_argument("encrypt: give exactly one of --key or --random-key");
        }
        if (opts.random_key && opts.key_length < 1) {
            throw std::invalid_argument("encrypt: --random-key needs --key-length");
        }
        const TranspositionKey key = opts.random_key ? random_transposition_key(opts.key_length, rng)
                                                     : TranspositionKey::parse(opts.key);
        const GridMode mode = opts.padded ? GridMode::padded : GridMode::irregular;
        out << demap(sct_encrypt(plain, key, mode)) << '\n';
        err << "key: " << key.to_string() << '\n';
    } else {
        throw std::invalid_argument("encrypt: unknown cipher '" + opts.cipher + "'");
    }
    if (opts.random_key) {
        err << "seed: " << seed << '\n';
    }
    return kExitOk;
}

// solve -----------------------------------------------------------------------

int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err)
{
    if (opts.format != "text" && opts.format != "json") {
        throw std::invalid_argument("solve: --format must be text or json");
    }
    const std::uint64_t seed = resolve_seed(opts.seed);
    const MappedText cipher = read_ciphertext(opts.ciphertext);
    const BigramTable table = load_bigrams(opts.bigrams, err);

    Json report;
    report["command"] = "solve";
    report["config"] = solve_config_json(opts, seed, cipher.size());
    std::ostringstream human;
    human << "mode " << opts.mode << ", seed " << seed << ", " << cipher.size() << " symbols\n";

    if (opts.mode == "mas" || opts.mode == "mas-det") {
        MasSolverConfig cfg;
        cfg.mode = opts.mode == "mas" ? MasMode::stochastic : MasMode::deterministic;
        cfg.workers = opts.workers;
        cfg.iterations = opts.iterations;
        cfg.climbings = opts.climbings;
        cfg.restarts = opts.restarts;
        cfg.global_seed = seed;
        cfg.threads = opts.threads;
        const auto outcome = solve_with_restarts(cipher, table, cfg);

        Json runs = Json::array();
        for (const auto& run : outcome.runs) {
            runs.push_back(run_json(run, opts.timing));
            print_restart_line(human, run);
            if (opts.verbose) {
                print_history(human, run);
            }
        }
        const auto& best = outcome.best();
        report["result"] = {{"best_restart", outcome.best_restart},
                            {"best_score", best.best_score},
                            {"best_worker", best.best_worker},
                            {"best_text", demap(best.best_text)},
                            {"history", history_json(best.history)},
                            {"per_worker_scores", best.per_worker_scores}};
        report["restarts"] = runs;
        human << "best: restart " << outcome.best_restart << ", score " << best.best_score << '\n'
              << demap(best.best_text) << '\n';
    } else if (opts.mode == "sct") {
        if (opts.key_length < 2) {
            throw std::invalid_argument("solve: sct mode needs --key-length >= 2");
        }
        SctSolverConfig cfg;
        cfg.key_length = opts.key_length;
        cfg.workers = opts.workers;
        cfg.climbings = opts.climbings;
        cfg.p1 = opts.p1;
        cfg.p2 = opts.p2;
        cfg.op1_hop = opts.op1_hop;
        cfg.op2_hop = opts.op2_hop;
        cfg.restarts = opts.restarts;
        cfg.global_seed = seed;
        cfg.threads = opts.threads;
        const LogBigramTable logs = build_log_table(table, opts.log_floor);
        const auto outcome = solve_sct_with_restarts(cipher, logs, cfg);

        Json runs = Json::array();
        for (const auto& run : outcome.runs) {
            Json j = run_json(run, opts.timing);
            j["key"] = run.best_key.to_string();
            runs.push_back(j);
            print_restart_line(human, run);
            human << "  key " << run.best_key.to_string() << '\n';
            if (opts.verbose) {
                print_history(human, run);
            }
        }
        const auto& best = outcome.best();
        report["result"] = {{"best_restart", outcome.best_restart},
                            {"best_score", best.best_score},
                            {"best_worker", best.best_worker},
                            {"key", best.best_key.to_string()},
                            {"best_text", demap(best.best_text)},
                            {"history", history_json(best.history)},
                            {"per_worker_scores", best.per_worker_scores}};
        report["restarts"] = runs;
        human << "best: restart " << outcome.best_restart << ", score " << std::setprecision(10)
              << best.best_score << ", key " << best.best_key.to_string() << '\n'
              << demap(best.best_text) << '\n';
    } else {
        throw std::invalid_argument("solve: unknown mode '" + opts.mode + "' (mas-det, mas, sct)");
    }

    const std::string json_text = report.dump(2) + "\n";
    if (!opts.report_path.empty()) {
        write_file(opts.report_path, json_text);
    }
    out << (opts.format == "json" ? json_text : human.str());
    return kExitOk;
}

// benchmark -------------------------------------------------------------------

int cmd_benchmark(const BenchmarkOptions& opts, std::ostream& out, std::ostream& /*err*/)
{
    if (opts.format != "text" && opts.format != "csv") {
        throw std::invalid_argument("benchmark: --format must be text or csv");
    }
    const std::vector<CsvRow> rows = load_suite(opts);
    const std::uint64_t seed = resolve_seed(opts.seed);

    std::ostringstream csv;
    csv << kCsvHeader << '\n';
    std::ostringstream table;
    table << std::left << std::setw(9) << "key_size" << std::setw(13) << "search_space" << std::setw(9) << "workers"
          << std::setw(11) << "climbings" << std::setw(11) << "wall_ms" << "recovered\n";

    if (!rows.empty()) {
        const MappedText plain = map_text(normalize(read_file(opts.plaintext)));
        const LogBigramTable logs = build_log_table(load_bigrams(opts.bigrams, std::cerr), opts.log_floor);
        for (std::size_t r = 0; r < rows.size(); ++r) {
            const CsvRow& row = rows[r];
            WorkerRngState keygen(seed, kKeygenStream, static_cast<std::uint32_t>(r));
            const TranspositionKey key = random_transposition_key(row.key_size, keygen);
            const MappedText cipher = sct_encrypt(plain, key);

            SctSolverConfig cfg;
            cfg.key_length = row.key_size;
            cfg.workers = row.workers;
            cfg.climbings = row.climbings;
            cfg.p1 = opts.p1;
            cfg.p2 = opts.p2;
            cfg.op1_hop = opts.op1_hop;
            cfg.op2_hop = opts.op2_hop;
            cfg.restarts = opts.restarts;
            cfg.global_seed = seed;
            cfg.threads = opts.threads;

            const auto started = std::chrono::steady_clock::now();
            const auto outcome = solve_sct_with_restarts(cipher, logs, cfg);
            const auto wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                     std::chrono::steady_clock::now() - started)
                                     .count();
            const bool recovered = outcome.best().best_text == plain;
            const unsigned bits = search_space_bits(row.key_size);

            csv << row.key_size << ',' << bits << ',' << row.workers << ',' << row.climbings << ',' << seed << ','
                << wall_ms << ',' << (recovered ? "true" : "false") << '\n';
            table << std::setw(9) << row.key_size << std::setw(13) << ("2^" + std::to_string(bits))
                  << std::setw(9) << row.workers << std::setw(11) << row.climbings << std::setw(11) << wall_ms
                  << (recovered ? "yes" : "no") << '\n';
        }
    }

    if (!opts.csv_path.empty()) {
        write_file(opts.csv_path, csv.str());
    }
    out << (opts.format == "csv" ? csv.str() : table.str());
    return kExitOk;
}

// argument parsing --------------------------------------------------------------

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err)
{
    CLI::App app{"Ciphertext-only hill-climbing attacks on substitution and columnar transposition ciphers"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file with option defaults (command-line flags take precedence)");

    CorpusOptions corpus;
    auto* corpus_cmd = app.add_subcommand("corpus", "Count bigrams in text files and write a bigram table");
    corpus_cmd->add_option("inputs", corpus.inputs, "Corpus text files")->required();
    corpus_cmd->add_option("-o,--output", corpus.output, "Bigram table to write (default: standard output)");
    corpus_cmd->add_option("--scale", corpus.scale, "counts (raw bigram counts) or loglik (integer log-likelihoods)")
        ->check(CLI::IsMember({"counts", "loglik"}));
    corpus_cmd->add_option("--log-floor", corpus.log_floor, "loglik: log2 probability that maps to score 0");
    corpus_cmd->add_option("--resolution", corpus.resolution, "loglik: score units per bit");
    corpus_cmd->add_flag("--from-counts", corpus.counts_input, "Inputs are bigram tables, not text");

    EncryptOptions enc;
    std::uint64_t enc_seed = 0;
    auto* enc_cmd = app.add_subcommand("encrypt", "Encrypt a plaintext file (normalized to a-z first)");
    enc_cmd->add_option("--cipher", enc.cipher, "mas or sct")->check(CLI::IsMember({"mas", "sct"}));
    enc_cmd->add_option("--key", enc.key, "MAS: 26-letter permutation; SCT: comma-separated columns");
    enc_cmd->add_flag("--random-key", enc.random_key, "Generate the key from --seed");
    enc_cmd->add_option("--key-length", enc.key_length, "SCT key length for --random-key");
    auto* enc_seed_opt = enc_cmd->add_option("--seed", enc_seed, "Seed for --random-key");
    enc_cmd->add_flag("--padded", enc.padded, "SCT: pad the grid to whole rows");
    enc_cmd->add_option("input", enc.input, "Plaintext file, or - for standard input")->required();

    SolveOptions solve;
    std::uint64_t solve_seed = 0;
    auto* solve_cmd = app.add_subcommand("solve", "Recover the plaintext of a ciphertext file");
    solve_cmd->add_option("--mode", solve.mode, "mas-det, mas or sct")
        ->check(CLI::IsMember({"mas-det", "mas", "sct"}));
    solve_cmd->add_option("ciphertext", solve.ciphertext, "Ciphertext file (a-z, whitespace ignored)")->required();
    solve_cmd->add_option("--bigrams", solve.bigrams, "Bigram table file")->required();
    solve_cmd->add_option("--workers", solve.workers, "Independent climbers (ignored by mas-det)");
    solve_cmd->add_option("--climbings", solve.climbings, "Tries per worker");
    solve_cmd->add_option("--iterations", solve.iterations, "Outer iterations for mas-det");
    solve_cmd->add_option("--restarts", solve.restarts, "Independent restarts");
    auto* solve_seed_opt = solve_cmd->add_option("--seed", solve_seed, "Global seed (default: wall clock)");
    solve_cmd->add_option("--key-length", solve.key_length, "SCT key length");
    solve_cmd->add_option("--p1", solve.p1, "Operator I threshold (percent)");
    solve_cmd->add_option("--p2", solve.p2, "Operator II threshold (percent)");
    solve_cmd->add_option("--op1-hop", solve.op1_hop, "Max swaps per operator I move");
    solve_cmd->add_option("--op2-hop", solve.op2_hop, "Max block swaps per operator II move");
    solve_cmd->add_option("--log-floor", solve.log_floor, "log2 score of unseen bigrams");
    solve_cmd->add_option("--format", solve.format, "text or json")->check(CLI::IsMember({"text", "json"}));
    solve_cmd->add_option("--report", solve.report_path, "Also write the JSON report to this file");
    solve_cmd->add_flag("--timing", solve.timing, "Include wall-clock times in the JSON report");
    solve_cmd->add_flag("-v,--verbose", solve.verbose, "Print every accepted improvement");
    solve_cmd->add_option("--threads", solve.threads, "Execution threads (0 = all cores); results do not depend on it");

    BenchmarkOptions bench;
    std::uint64_t bench_seed = 0;
    auto* bench_cmd = app.add_subcommand("benchmark", "Time SCT key recovery over a suite of key sizes");
    bench_cmd->add_option("--key-sizes", bench.key_sizes, "Key sizes, e.g. 10,15")->delimiter(',');
    bench_cmd->add_option("--suite", bench.suite, "File of key_size,workers,climbings rows");
    bench_cmd->add_option("--plaintext", bench.plaintext, "Plaintext to encrypt for every row");
    bench_cmd->add_option("--bigrams", bench.bigrams, "Bigram table file");
    bench_cmd->add_option("--workers", bench.workers, "Workers for --key-sizes rows");
    bench_cmd->add_option("--climbings", bench.climbings, "Climbings for --key-sizes rows");
    bench_cmd->add_option("--restarts", bench.restarts, "Restarts per row");
    auto* bench_seed_opt = bench_cmd->add_option("--seed", bench_seed, "Global seed (default: wall clock)");
    bench_cmd->add_option("--p1", bench.p1, "Operator I threshold (percent)");
    bench_cmd->add_option("--p2", bench.p2, "Operator II threshold (percent)");
    bench_cmd->add_option("--op1-hop", bench.op1_hop, "Max swaps per operator I move");
    bench_cmd->add_option("--op2-hop", bench.op2_hop, "Max block swaps per operator II move");
    bench_cmd->add_option("--log-floor", bench.log_floor, "log2 score of unseen bigrams");
    bench_cmd->add_option("--format", bench.format, "text or csv")->check(CLI::IsMember({"text", "csv"}));
    bench_cmd->add_option("--csv", bench.csv_path, "Also write the CSV to this file");
    bench_cmd->add_option("--threads", bench.threads, "Execution threads (0 = all cores)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << '\n';
        return kExitUsage;
    }

    try {
        if (*corpus_cmd) {
            return cmd_corpus_build(corpus, out, err);
        }
        if (*enc_cmd) {
            if (*enc_seed_opt) {
                enc.seed = enc_seed;
            }
            return cmd_encrypt(enc, in, out, err);
        }
        if (*solve_cmd) {
            if (*solve_seed_opt) {
                solve.seed = solve_seed;
            }
            return cmd_solve(solve, out, err);
        }
        if (*bench_cmd) {
            if (*bench_seed_opt) {
                bench.seed = bench_seed;
            }
            if (!bench.key_sizes.empty() || !bench.suite.empty()) {
                if (bench.plaintext.empty() || bench.bigrams.empty()) {
                    throw std::invalid_argument("benchmark: --plaintext and --bigrams are required");
                }
            }
            return cmd_benchmark(bench, out, err);
        }
    } catch (const IoError& e) {
        err << "error: " << e.what() << '\n';
        return kExitIo;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace cipherclimb::cli
