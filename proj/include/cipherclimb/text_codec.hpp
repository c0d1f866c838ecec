#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace cipherclimb {

/// Index of a letter in the 26-letter alphabet, 'a' -> 0 ... 'z' -> 25.
using Letter = std::uint8_t;

/// Text as a sequence of letter indices. Every element is < Alphabet::size.
using MappedText = std::vector<Letter>;

struct Alphabet {
    static constexpr std::size_t size = 26;

    static constexpr char letter(Letter index) noexcept { return static_cast<char>('a' + index); }
    static constexpr bool contains(char c) noexcept { return c >= 'a' && c <= 'z'; }
};

/// Keeps ASCII letters only, lowercased, in input order.
std::string normalize(std::string_view raw);

/// Strict mapping of lowercase a-z to letter indices.
/// Throws std::invalid_argument on any other character.
MappedText map_text(std::string_view text);

std::string demap(const MappedText& text);

}  // namespace cipherclimb
