#include "cipherclimb/pair_map.hpp"

#include <stdexcept>

namespace cipherclimb {

std::size_t pair_count(std::size_t alphabet_size)
{
    if (alphabet_size < 2) {
        throw std::invalid_argument("pair_count: need at least two symbols");
    }
    return alphabet_size * (alphabet_size - 1) / 2;
}

std::size_t rank_pair(std::size_t i, std::size_t j, std::size_t n)
{
    if (!(i < j && j < n)) {
        throw std::invalid_argument("rank_pair: expected i < j < n");
    }
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::pair<std::size_t, std::size_t> unrank_pair(std::size_t t, std::size_t n)
{
    if (n < 2 || t >= pair_count(n)) {
        throw std::out_of_range("unrank_pair: index outside 0..n(n-1)/2-1");
    }
    // row i holds the n-1-i pairs (i, i+1) .. (i, n-1)
    std::size_t i = 0;
    std::size_t row = n - 1;
    while (t >= row) {
        t -= row;
        ++i;
        --row;
    }
    return {i, i + 1 + t};
}

LetterPair index_to_pair(PairIndex t)
{
    if (t >= kLetterPairCount) {
        throw std::out_of_range("index_to_pair: index outside 0..324");
    }
    const auto [i, j] = unrank_pair(t, Alphabet::size);
    return LetterPair{static_cast<Letter>(i), static_cast<Letter>(j)};
}

PairIndex pair_to_index(LetterPair p)
{
    if (p.left >= p.right || p.right >= Alphabet::size) {
        throw std::invalid_argument("pair_to_index: pair must satisfy left < right <= 25");
    }
    return rank_pair(p.left, p.right, Alphabet::size);
}

}  // namespace cipherclimb
