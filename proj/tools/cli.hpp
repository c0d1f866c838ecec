#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

namespace cipherclimb::cli {

enum ExitCode : int {
    kExitOk = 0,
    kExitUsage = 1,
    kExitIo = 2,
};

struct CorpusOptions {
    std::vector<std::string> inputs;
    std::string output;
    std::string scale = "counts";  // counts | loglik
    double log_floor = -24.0;
    double resolution = 100.0;
    bool counts_input = false;  // inputs are bigram tables to sum, not text
};

struct EncryptOptions {
    std::string cipher = "mas";  // mas | sct
    std::string key;
    bool random_key = false;
    std::size_t key_length = 0;
    std::optional<std::uint64_t> seed;
    bool padded = false;
    std::string input;  // "-" reads standard input
};

struct SolveOptions {
    std::string mode = "mas";  // mas-det | mas | sct
    std::string ciphertext;
    std::string bigrams;
    std::size_t workers = 64;
    std::size_t climbings = 10000;
    std::size_t iterations = 500;
    std::size_t restarts = 1;
    std::optional<std::uint64_t> seed;
    std::size_t key_length = 0;
    int p1 = 33;
    int p2 = 66;
    std::size_t op1_hop = 3;
    std::size_t op2_hop = 3;
    double log_floor = -24.0;
    std::string format = "text";  // text | json
    std::string report_path;      // optional JSON report file
    bool timing = false;          // add wall-clock fields to the JSON report
    bool verbose = false;         // print every accepted improvement
    unsigned threads = 0;
};

struct BenchmarkOptions {
    std::vector<std::size_t> key_sizes;
    std::string suite;  // optional file of "key_size,workers,climbings" rows
    std::string plaintext;
    std::string bigrams;
    std::size_t workers = 64;
    std::size_t climbings = 15000;
    std::size_t restarts = 1;
    std::optional<std::uint64_t> seed;
    int p1 = 33;
    int p2 = 66;
    std::size_t op1_hop = 3;
    std::size_t op2_hop = 3;
    double log_floor = -24.0;
    std::string format = "text";  // text | csv
    std::string csv_path;
    unsigned threads = 0;
};

int cmd_corpus_build(const CorpusOptions& opts, std::ostream& out, std::ostream& err);
int cmd_encrypt(const EncryptOptions& opts, std::istream& in, std::ostream& out, std::ostream& err);
int cmd_solve(const SolveOptions& opts, std::ostream& out, std::ostream& err);
int cmd_benchmark(const BenchmarkOptions& opts, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches to the matching command.
int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err);

}  // namespace cipherclimb::cli
