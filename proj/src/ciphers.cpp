#include "cipherclimb/ciphers.hpp"

#include <algorithm>
#include <charconv>
#include <stdexcept>

namespace cipherclimb {

namespace {

template <typename Range>
bool is_permutation_of_iota(const Range& values)
{
    std::vector<bool> seen(values.size(), false);
    for (auto v : values) {
        const auto idx = static_cast<std::size_t>(v);
        if (idx >= values.size() || seen[idx]) {
            return false;
        }
        seen[idx] = true;
    }
    return true;
}

void require_letter(Letter l, const char* what)
{
    if (l >= Alphabet::size) {
        throw std::invalid_argument(std::string(what) + ": letter index outside 0..25");
    }
}

}  // namespace

// SubstitutionKey ------------------------------------------------------------

SubstitutionKey::SubstitutionKey(const Mapping& mapping) : subst_(mapping)
{
    if (!is_permutation_of_iota(subst_)) {
        throw std::invalid_argument("SubstitutionKey: mapping is not a permutation of the alphabet");
    }
}

SubstitutionKey SubstitutionKey::identity()
{
    Mapping m{};
    for (std::size_t i = 0; i < m.size(); ++i) {
        m[i] = static_cast<Letter>(i);
    }
    return SubstitutionKey(m);
}

SubstitutionKey SubstitutionKey::from_string(std::string_view letters)
{
    if (letters.size() != Alphabet::size) {
        throw std::invalid_argument("SubstitutionKey: expected 26 letters, got " + std::to_string(letters.size()));
    }
    const MappedText mapped = map_text(letters);
    Mapping m{};
    std::copy(mapped.begin(), mapped.end(), m.begin());
    return SubstitutionKey(m);
}

SubstitutionKey SubstitutionKey::inverse() const
{
    Mapping inv{};
    for (std::size_t i = 0; i < subst_.size(); ++i) {
        inv[subst_[i]] = static_cast<Letter>(i);
    }
    return SubstitutionKey(inv);
}

std::string SubstitutionKey::to_string() const
{
    return demap(MappedText(subst_.begin(), subst_.end()));
}

MappedText mas_encrypt(const MappedText& plain, const SubstitutionKey& key)
{
    MappedText out(plain.size());
    std::transform(plain.begin(), plain.end(), out.begin(), [&](Letter l) { return key[l]; });
    return out;
}

MappedText mas_decrypt(const MappedText& cipher, const SubstitutionKey& key)
{
    return mas_encrypt(cipher, key.inverse());
}

MappedText apply_letter_swap(const MappedText& text, Letter a, Letter b)
{
    require_letter(a, "apply_letter_swap");
    require_letter(b, "apply_letter_swap");
    if (a == b) {
        throw std::invalid_argument("apply_letter_swap: letters must differ");
    }
    MappedText out(text);
    for (Letter& l : out) {
        if (l == a) {
            l = b;
        } else if (l == b) {
            l = a;
        }
    }
    return out;
}

// TranspositionKey -----------------------------------------------------------

TranspositionKey::TranspositionKey(std::vector<Column> perm) : perm_(std::move(perm))
{
    if (perm_.empty()) {
        throw std::invalid_argument("TranspositionKey: key length must be at least 1");
    }
    if (!is_permutation_of_iota(perm_)) {
        throw std::invalid_argument("TranspositionKey: columns are not a permutation of 0..k-1");
    }
}

TranspositionKey TranspositionKey::identity(std::size_t length)
{
    std::vector<Column> perm(length);
    for (std::size_t i = 0; i < length; ++i) {
        perm[i] = static_cast<Column>(i);
    }
    return TranspositionKey(std::move(perm));
}

TranspositionKey TranspositionKey::parse(std::string_view spec)
{
    std::vector<Column> perm;
    std::size_t pos = 0;
    while (pos <= spec.size()) {
        std::size_t comma = spec.find(',', pos);
        if (comma == std::string_view::npos) {
            comma = spec.size();
        }
        std::string_view field = spec.substr(pos, comma - pos);
        while (!field.empty() && field.front() == ' ') field.remove_prefix(1);
        while (!field.empty() && field.back() == ' ') field.remove_suffix(1);
        Column value = 0;
        auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
        if (field.empty() || ec != std::errc{} || ptr != field.data() + field.size()) {
            throw std::invalid_argument("TranspositionKey: bad column '" + std::string(field) + "'");
        }
        perm.push_back(value);
        pos = comma + 1;
    }
    return TranspositionKey(std::move(perm));
}

std::string TranspositionKey::to_string() const
{
    std::string out;
    for (std::size_t j = 0; j < perm_.size(); ++j) {
        if (j != 0) {
            out.push_back(',');
        }
        out += std::to_string(perm_[j]);
    }
    return out;
}

void TranspositionKey::swap_elements(std::size_t i, std::size_t j)
{
    if (i == j || i >= perm_.size() || j >= perm_.size()) {
        throw std::invalid_argument("swap_elements: positions must be distinct and inside the key");
    }
    std::swap(perm_[i], perm_[j]);
}

void TranspositionKey::swap_block(std::size_t p, std::size_t q, std::size_t len)
{
    if (len == 0 || p + len > perm_.size() || q + len > perm_.size()) {
        throw std::invalid_argument("swap_block: block outside the key");
    }
    const std::size_t lo = std::min(p, q);
    const std::size_t hi = std::max(p, q);
    if (lo + len > hi) {
        throw std::invalid_argument("swap_block: blocks overlap");
    }
    std::swap_ranges(perm_.begin() + lo, perm_.begin() + lo + len, perm_.begin() + hi);
}

void TranspositionKey::shift_block(std::size_t p, std::size_t len, std::ptrdiff_t offset)
{
    const auto k = static_cast<std::ptrdiff_t>(perm_.size());
    const auto start = static_cast<std::ptrdiff_t>(p);
    const auto width = static_cast<std::ptrdiff_t>(len);
    if (len == 0 || start + width > k) {
        throw std::invalid_argument("shift_block: block outside the key");
    }
    const std::ptrdiff_t dest = start + offset;
    if (dest < 0 || dest + width > k) {
        throw std::invalid_argument("shift_block: destination outside the key");
    }
    auto base = perm_.begin();
    if (offset > 0) {
        // window [p, p+len+offset): block moves to the back
        std::rotate(base + start, base + start + width, base + start + width + offset);
    } else if (offset < 0) {
        // window [p+offset, p+len): block moves to the front
        std::rotate(base + dest, base + start, base + start + width);
    }
}

TranspositionKey swap_elements(TranspositionKey key, std::size_t i, std::size_t j)
{
    key.swap_elements(i, j);
    return key;
}

TranspositionKey swap_block(TranspositionKey key, std::size_t p, std::size_t q, std::size_t len)
{
    key.swap_block(p, q, len);
    return key;
}

TranspositionKey shift_block(TranspositionKey key, std::size_t p, std::size_t len, std::ptrdiff_t offset)
{
    key.shift_block(p, len, offset);
    return key;
}

// Columnar transposition -----------------------------------------------------

MappedText sct_encrypt(const MappedText& plain, const TranspositionKey& key, GridMode mode)
{
    const std::size_t k = key.size();
    MappedText grid = plain;
    if (mode == GridMode::padded) {
        while (grid.size() % k != 0) {
            grid.push_back(kPaddingLetter);
        }
    }
    MappedText out;
    out.reserve(grid.size());
    for (std::size_t j = 0; j < k; ++j) {
        for (std::size_t i = key[j]; i < grid.size(); i += k) {
            out.push_back(grid[i]);
        }
    }
    return out;
}

void sct_decrypt_into(std::span<const Letter> cipher, std::span<const Column> perm, std::span<Letter> out) noexcept
{
    const std::size_t n = cipher.size();
    const std::size_t k = perm.size();
    const std::size_t full_rows = n / k;
    const std::size_t long_columns = n % k;
    std::size_t pos = 0;
    for (std::size_t j = 0; j < k; ++j) {
        const std::size_t c = perm[j];
        const std::size_t height = full_rows + (c < long_columns ? 1 : 0);
        for (std::size_t r = 0; r < height; ++r) {
            out[r * k + c] = cipher[pos++];
        }
    }
}

MappedText sct_decrypt(const MappedText& cipher, const TranspositionKey& key, GridMode mode)
{
    if (mode == GridMode::padded && cipher.size() % key.size() != 0) {
        throw std::invalid_argument("sct_decrypt: padded grid requires a length divisible by the key length");
    }
    MappedText out(cipher.size());
    sct_decrypt_into(cipher, key.columns(), out);
    return out;
}

}  // namespace cipherclimb
