#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "cipherclimb/text_codec.hpp"

namespace cipherclimb {

using AdditiveScore = std::uint64_t;
using LogScore = double;

inline constexpr std::size_t kBigramCount = Alphabet::size * Alphabet::size;

/// Position of bigram (first, second) in a 676-entry table: 26*first + second.
/// Throws std::out_of_range for letters outside 0..25.
std::size_t bigram_index(int first, int second);

/// Unchecked variant for hot loops.
constexpr std::size_t bigram_index_unchecked(Letter first, Letter second) noexcept
{
    return Alphabet::size * first + second;
}

/// Additive integer bigram scores. Entries are opaque non-negative magnitudes
/// (raw corpus counts or any pre-scaled likelihood).
class BigramTable {
  public:
    using Scores = std::array<AdditiveScore, kBigramCount>;

    BigramTable() { scores_.fill(0); }
    explicit BigramTable(const Scores& scores) : scores_(scores) {}

    AdditiveScore operator[](std::size_t index) const noexcept { return scores_[index]; }
    AdditiveScore at(Letter first, Letter second) const noexcept
    {
        return scores_[bigram_index_unchecked(first, second)];
    }
    void set(std::size_t index, AdditiveScore value) { scores_.at(index) = value; }

    AdditiveScore total() const noexcept;
    const Scores& scores() const noexcept { return scores_; }

    friend bool operator==(const BigramTable&, const BigramTable&) = default;

  private:
    Scores scores_;
};

/// log2 bigram probabilities; unseen bigrams receive `floor`.
class LogBigramTable {
  public:
    using Logs = std::array<double, kBigramCount>;

    LogBigramTable(const Logs& logs, double floor) : logs_(logs), floor_(floor) {}

    double operator[](std::size_t index) const noexcept { return logs_[index]; }
    double at(Letter first, Letter second) const noexcept
    {
        return logs_[bigram_index_unchecked(first, second)];
    }
    double floor() const noexcept { return floor_; }
    const Logs& logs() const noexcept { return logs_; }

  private:
    Logs logs_;
    double floor_;
};

inline constexpr double kDefaultLogFloor = -24.0;

class BigramParseError : public std::runtime_error {
  public:
    BigramParseError(std::size_t line, const std::string& what)
        : std::runtime_error("bigram file line " + std::to_string(line) + ": " + what), line_(line)
    {
    }
    std::size_t line() const noexcept { return line_; }

  private:
    std::size_t line_;
};

struct ParsedBigrams {
    BigramTable table;
    std::vector<std::string> warnings;  // duplicate bigrams; the last occurrence wins
};

/// Reads `<bigram> <score>` records, one per line. Blank lines are skipped and
/// missing bigrams stay 0. Throws BigramParseError on a malformed record.
ParsedBigrams parse_bigram_file(std::istream& in);

/// Writes all 676 records in lexicographic order, the format parse_bigram_file reads.
void write_bigram_file(std::ostream& out, const BigramTable& table);

/// Counts adjacent letter pairs in the normalized corpus.
BigramTable build_table_from_corpus(std::string_view corpus);

/// log2(count / total) per bigram, clamped below at `floor`; zero counts get `floor`.
/// Throws std::invalid_argument if floor >= 0 or the table is all zeros.
LogBigramTable build_log_table(const BigramTable& table, double floor = kDefaultLogFloor);

/// Integer log-likelihood scores: round(resolution * (log2 P - floor)), so unseen bigrams score 0.
/// Summing these ranks texts like log_score_text does (up to rounding) while staying exact integers.
BigramTable build_loglik_table(const BigramTable& counts, double floor = kDefaultLogFloor, double resolution = 100.0);

AdditiveScore score_text(const MappedText& text, const BigramTable& table);

LogScore log_score_text(const MappedText& text, const LogBigramTable& table);

}  // namespace cipherclimb
