#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "cipherclimb/text_codec.hpp"

namespace cipherclimb {

/// Monoalphabetic substitution key: plaintext letter i encrypts to subst[i].
class SubstitutionKey {
  public:
    using Mapping = std::array<Letter, Alphabet::size>;

    /// Throws std::invalid_argument unless `mapping` is a permutation of 0..25.
    explicit SubstitutionKey(const Mapping& mapping);

    static SubstitutionKey identity();
    /// 26-letter permutation string; position i holds the image of letter i.
    static SubstitutionKey from_string(std::string_view letters);

    Letter operator[](Letter plain) const noexcept { return subst_[plain]; }
    const Mapping& mapping() const noexcept { return subst_; }
    SubstitutionKey inverse() const;
    std::string to_string() const;

    friend bool operator==(const SubstitutionKey&, const SubstitutionKey&) = default;

  private:
    Mapping subst_;
};

MappedText mas_encrypt(const MappedText& plain, const SubstitutionKey& key);
MappedText mas_decrypt(const MappedText& cipher, const SubstitutionKey& key);

/// Exchanges every occurrence of `a` with `b` and vice versa.
/// Throws std::invalid_argument if a == b or either is not a letter index.
MappedText apply_letter_swap(const MappedText& text, Letter a, Letter b);

using Column = std::uint32_t;

/// Columnar transposition key. perm[j] is the grid column read out j-th.
class TranspositionKey {
  public:
    /// Throws std::invalid_argument unless `perm` is a non-empty permutation of 0..k-1.
    explicit TranspositionKey(std::vector<Column> perm);

    static TranspositionKey identity(std::size_t length);
    /// Comma-separated column list, e.g. "2,0,1".
    static TranspositionKey parse(std::string_view spec);

    std::size_t size() const noexcept { return perm_.size(); }
    Column operator[](std::size_t j) const noexcept { return perm_[j]; }
    std::span<const Column> columns() const noexcept { return perm_; }
    std::string to_string() const;

    // In-place neighbourhood moves. Each keeps the permutation invariant and
    // throws std::invalid_argument when its preconditions fail.
    void swap_elements(std::size_t i, std::size_t j);
    void swap_block(std::size_t p, std::size_t q, std::size_t len);
    void shift_block(std::size_t p, std::size_t len, std::ptrdiff_t offset);

    friend bool operator==(const TranspositionKey&, const TranspositionKey&) = default;

  private:
    std::vector<Column> perm_;
};

TranspositionKey swap_elements(TranspositionKey key, std::size_t i, std::size_t j);
TranspositionKey swap_block(TranspositionKey key, std::size_t p, std::size_t q, std::size_t len);
TranspositionKey shift_block(TranspositionKey key, std::size_t p, std::size_t len, std::ptrdiff_t offset);

enum class GridMode {
    irregular,  // last row may be short; no padding
    padded,     // plaintext padded with a filler letter up to a whole number of rows
};

inline constexpr Letter kPaddingLetter = 'x' - 'a';

/// Writes row-wise into key.size() columns, reads out column perm[0], perm[1], ...
MappedText sct_encrypt(const MappedText& plain, const TranspositionKey& key, GridMode mode = GridMode::irregular);

/// Inverse of sct_encrypt. Grid column c holds ceil(n/k) symbols when c < n mod k,
/// floor(n/k) otherwise. In padded mode the length must be a multiple of k.
MappedText sct_decrypt(const MappedText& cipher, const TranspositionKey& key, GridMode mode = GridMode::irregular);

/// Allocation-free decrypt for the solver loop; out.size() must equal cipher.size().
void sct_decrypt_into(std::span<const Letter> cipher, std::span<const Column> perm, std::span<Letter> out) noexcept;

}  // namespace cipherclimb
