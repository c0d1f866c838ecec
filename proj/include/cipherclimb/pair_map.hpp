#pragma once

#include <cstddef>
#include <utility>

#include "cipherclimb/text_codec.hpp"

namespace cipherclimb {

/// Unordered pair of distinct letters in canonical form (left < right).
struct LetterPair {
    Letter left = 0;
    Letter right = 1;

    friend bool operator==(const LetterPair&, const LetterPair&) = default;
};

/// Worker index in 0 .. pair_count(26) - 1.
using PairIndex = std::size_t;

/// n(n-1)/2. Throws std::invalid_argument for n < 2.
std::size_t pair_count(std::size_t alphabet_size);

inline constexpr std::size_t kLetterPairCount = Alphabet::size * (Alphabet::size - 1) / 2;

// Lexicographic ranking of pairs (i, j), 0 <= i < j < n:
// 0 -> (0,1), 1 -> (0,2), ..., n-2 -> (0,n-1), n-1 -> (1,2), ...
std::pair<std::size_t, std::size_t> unrank_pair(std::size_t t, std::size_t n);
std::size_t rank_pair(std::size_t i, std::size_t j, std::size_t n);

/// Throws std::out_of_range for t >= 325.
LetterPair index_to_pair(PairIndex t);

/// Throws std::invalid_argument for a non-canonical pair.
PairIndex pair_to_index(LetterPair p);

}  // namespace cipherclimb
