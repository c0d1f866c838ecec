#include "cipherclimb/ngram_model.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <istream>
#include <numeric>
#include <ostream>
#include <sstream>

namespace cipherclimb {

std::size_t bigram_index(int first, int second)
{
    constexpr int n = static_cast<int>(Alphabet::size);
    if (first < 0 || first >= n || second < 0 || second >= n) {
        throw std::out_of_range("bigram_index: letter index outside 0..25");
    }
    return static_cast<std::size_t>(n * first + second);
}

AdditiveScore BigramTable::total() const noexcept
{
    return std::accumulate(scores_.begin(), scores_.end(), AdditiveScore{0});
}

namespace {

bool is_blank(std::string_view line)
{
    return line.find_first_not_of(" \t\r") == std::string_view::npos;
}

}  // namespace

ParsedBigrams parse_bigram_file(std::istream& in)
{
    ParsedBigrams parsed;
    std::array<std::size_t, kBigramCount> seen_on{};
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (is_blank(line)) {
            continue;
        }
        std::istringstream fields(line);
        std::string bigram;
        std::string score_text;
        std::string extra;
        if (!(fields >> bigram >> score_text) || (fields >> extra)) {
            throw BigramParseError(line_no, "expected '<bigram> <score>'");
        }
        if (bigram.size() != 2 || !Alphabet::contains(bigram[0]) || !Alphabet::contains(bigram[1])) {
            throw BigramParseError(line_no, "bigram '" + bigram + "' is not two lowercase letters");
        }
        AdditiveScore value = 0;
        const char* begin = score_text.data();
        const char* end = begin + score_text.size();
        auto [ptr, ec] = std::from_chars(begin, end, value);
        if (ec != std::errc{} || ptr != end) {
            throw BigramParseError(line_no, "score '" + score_text + "' is not a non-negative integer");
        }
        const std::size_t index = bigram_index(bigram[0] - 'a', bigram[1] - 'a');
        if (seen_on[index] != 0) {
            parsed.warnings.push_back("duplicate bigram '" + bigram + "' on line " + std::to_string(line_no) +
                                      " overrides line " + std::to_string(seen_on[index]));
        }
        seen_on[index] = line_no;
        parsed.table.set(index, value);
    }
    return parsed;
}

void write_bigram_file(std::ostream& out, const BigramTable& table)
{
    for (Letter a = 0; a < Alphabet::size; ++a) {
        for (Letter b = 0; b < Alphabet::size; ++b) {
            out << Alphabet::letter(a) << Alphabet::letter(b) << ' ' << table.at(a, b) << '\n';
        }
    }
}

BigramTable build_table_from_corpus(std::string_view corpus)
{
    const MappedText text = map_text(normalize(corpus));
    BigramTable::Scores counts{};
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        ++counts[bigram_index_unchecked(text[i], text[i + 1])];
    }
    return BigramTable(counts);
}

LogBigramTable build_log_table(const BigramTable& table, double floor)
{
    if (!(floor < 0.0)) {
        throw std::invalid_argument("build_log_table: floor must be negative");
    }
    const AdditiveScore total = table.total();
    if (total == 0) {
        throw std::invalid_argument("build_log_table: table has no counts");
    }
    LogBigramTable::Logs logs{};
    const double denom = static_cast<double>(total);
    for (std::size_t i = 0; i < kBigramCount; ++i) {
        const AdditiveScore count = table[i];
        logs[i] = count == 0 ? floor : std::max(floor, std::log2(static_cast<double>(count) / denom));
    }
    return LogBigramTable(logs, floor);
}

BigramTable build_loglik_table(const BigramTable& counts, double floor, double resolution)
{
    if (!(resolution > 0.0)) {
        throw std::invalid_argument("build_loglik_table: resolution must be positive");
    }
    const LogBigramTable logs = build_log_table(counts, floor);
    BigramTable::Scores scores{};
    for (std::size_t i = 0; i < kBigramCount; ++i) {
        scores[i] = static_cast<AdditiveScore>(std::llround(resolution * (logs[i] - floor)));
    }
    return BigramTable(scores);
}

AdditiveScore score_text(const MappedText& text, const BigramTable& table)
{
    AdditiveScore total = 0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        total += table.at(text[i], text[i + 1]);
    }
    return total;
}

LogScore log_score_text(const MappedText& text, const LogBigramTable& table)
{
    LogScore total = 0.0;
    for (std::size_t i = 0; i + 1 < text.size(); ++i) {
        total += table.at(text[i], text[i + 1]);
    }
    return total;
}

}  // namespace cipherclimb
