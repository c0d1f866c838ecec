#include <doctest.h>

#include <algorithm>

#include "cipherclimb/ciphers.hpp"
#include "support/oracles.hpp"

using namespace cipherclimb;

namespace {

TranspositionKey key_of(std::vector<Column> p)
{
    return TranspositionKey(std::move(p));
}

std::vector<Column> cols(const TranspositionKey& k)
{
    return {k.columns().begin(), k.columns().end()};
}

}  // namespace

TEST_CASE("substitution key validation and helpers")
{
    CHECK(SubstitutionKey::identity().to_string() == "abcdefghijklmnopqrstuvwxyz");
    const auto k = SubstitutionKey::from_string("qwertyuiopasdfghjklzxcvbnm");
    CHECK(k.to_string() == "qwertyuiopasdfghjklzxcvbnm");
    CHECK(k[0] == 'q' - 'a');
    CHECK(k.inverse().inverse() == k);
    CHECK_THROWS_AS(SubstitutionKey::from_string("abc"), std::invalid_argument);
    CHECK_THROWS_AS(SubstitutionKey::from_string("aacdefghijklmnopqrstuvwxyz"), std::invalid_argument);
    CHECK_THROWS_AS(SubstitutionKey::from_string("Abcdefghijklmnopqrstuvwxyz"), std::invalid_argument);
    SubstitutionKey::Mapping bad{};
    bad[0] = 26;
    CHECK_THROWS_AS(SubstitutionKey{bad}, std::invalid_argument);
}

TEST_CASE("mas encrypt and decrypt")
{
    const MappedText text = map_text("thequickbrownfox");
    CHECK(mas_encrypt(text, SubstitutionKey::identity()) == text);
    CHECK(mas_decrypt(text, SubstitutionKey::identity()) == text);

    const auto ab = SubstitutionKey::from_string("bacdefghijklmnopqrstuvwxyz");
    CHECK(demap(mas_encrypt(map_text("ab"), ab)) == "ba");
    CHECK(demap(mas_decrypt(map_text("ba"), ab)) == "ab");
    CHECK(mas_encrypt({}, ab).empty());
}

TEST_CASE("property: mas round trip and key composition")
{
    oracle::Gen g(100);
    for (int trial = 0; trial < 1000; ++trial) {
        const auto key = oracle::random_substitution(g);
        const MappedText p = oracle::random_text(g, trial % 97);
        const MappedText c = mas_encrypt(p, key);
        CHECK(c.size() == p.size());
        CHECK(mas_decrypt(c, key) == p);
        CHECK(mas_encrypt(mas_decrypt(p, key), key) == p);
        for (std::size_t i = 0; i < p.size(); ++i) {
            CHECK(c[i] == key.mapping()[p[i]]);
        }

        // Interchanging letters of the ciphertext = encrypting under the key with those outputs swapped.
        const Letter a = static_cast<Letter>(g() % 26);
        const Letter b = static_cast<Letter>((a + 1 + g() % 25) % 26);
        auto m = key.mapping();
        for (auto& v : m) {
            v = v == a ? b : v == b ? a : v;
        }
        CHECK(apply_letter_swap(c, a, b) == mas_encrypt(p, SubstitutionKey(m)));
    }
}

TEST_CASE("apply_letter_swap")
{
    CHECK(demap(apply_letter_swap(map_text("aba"), 0, 1)) == "bab");
    CHECK(demap(apply_letter_swap(map_text("xyz"), 0, 1)) == "xyz");
    CHECK_THROWS_AS(apply_letter_swap(map_text("aba"), 2, 2), std::invalid_argument);
    CHECK_THROWS_AS(apply_letter_swap(map_text("aba"), 0, 26), std::invalid_argument);

    oracle::Gen g(4);
    for (int trial = 0; trial < 300; ++trial) {
        const MappedText t = oracle::random_text(g, 50);
        const Letter a = static_cast<Letter>(g() % 26);
        const Letter b = static_cast<Letter>((a + 1 + g() % 25) % 26);
        CHECK(apply_letter_swap(apply_letter_swap(t, a, b), a, b) == t);
        CHECK(apply_letter_swap(t, a, b) == oracle::swap_letters(t, a, b));
    }
}

TEST_CASE("transposition key validation and parsing")
{
    CHECK(cols(TranspositionKey::identity(4)) == std::vector<Column>{0, 1, 2, 3});
    CHECK(cols(TranspositionKey::parse("2,0,1")) == std::vector<Column>{2, 0, 1});
    CHECK(cols(TranspositionKey::parse(" 1 , 0 ")) == std::vector<Column>{1, 0});
    CHECK(TranspositionKey::parse("2,0,1").to_string() == "2,0,1");
    CHECK_THROWS_AS(TranspositionKey::parse(""), std::invalid_argument);
    CHECK_THROWS_AS(TranspositionKey::parse("0,0"), std::invalid_argument);
    CHECK_THROWS_AS(TranspositionKey::parse("1,2"), std::invalid_argument);
    CHECK_THROWS_AS(TranspositionKey::parse("0,a"), std::invalid_argument);
    CHECK_THROWS_AS(TranspositionKey::parse("0,,1"), std::invalid_argument);
    CHECK_THROWS_AS(TranspositionKey::parse("-1,0"), std::invalid_argument);
    CHECK_THROWS_AS(key_of({}), std::invalid_argument);
}

TEST_CASE("sct encrypt and decrypt worked examples")
{
    CHECK(demap(sct_encrypt(map_text("abcdef"), TranspositionKey::parse("2,0,1"))) == "cfadbe");
    CHECK(demap(sct_encrypt(map_text("abcdefgh"), TranspositionKey::parse("1,2,0"))) == "behcfadg");
    CHECK(demap(sct_decrypt(map_text("cfadbe"), TranspositionKey::parse("2,0,1"))) == "abcdef");
    CHECK(demap(sct_decrypt(map_text("behcfadg"), TranspositionKey::parse("1,2,0"))) == "abcdefgh");
    CHECK(demap(sct_encrypt(map_text("hello"), TranspositionKey::identity(1))) == "hello");
    CHECK(demap(sct_decrypt(map_text("adbecf"), TranspositionKey::identity(3))) == "abcdef");
    CHECK(sct_encrypt({}, TranspositionKey::identity(3)).empty());
    // key longer than the text: some columns are empty
    CHECK(demap(sct_encrypt(map_text("ab"), TranspositionKey::parse("3,1,2,0"))) == "ba");
    CHECK(demap(sct_decrypt(map_text("ba"), TranspositionKey::parse("3,1,2,0"))) == "ab");
}

TEST_CASE("sct padded grid")
{
    const auto key = TranspositionKey::parse("2,0,1");
    const MappedText c = sct_encrypt(map_text("abcdefg"), key, GridMode::padded);
    CHECK(demap(c) == "cfxadgbex");
    CHECK(demap(sct_decrypt(c, key, GridMode::padded)) == "abcdefgxx");
    CHECK_THROWS_AS(sct_decrypt(map_text("abcd"), key, GridMode::padded), std::invalid_argument);
}

TEST_CASE("property: sct matches a literal grid and round trips for every length residue")
{
    oracle::Gen g(2024);
    std::vector<std::size_t> sizes;
    for (std::size_t k = 1; k <= 40; ++k) {
        sizes.push_back(k);
    }
    for (std::size_t k : sizes) {
        for (std::size_t residue = 0; residue < k; ++residue) {
            const std::size_t n = k * (1 + g() % 4) + residue;
            const auto perm = oracle::random_perm(g, k);
            const TranspositionKey key(perm);
            const MappedText p = oracle::random_text(g, n);
            const MappedText c = sct_encrypt(p, key);
            CHECK(c == oracle::grid_encrypt(p, perm));
            CHECK(sct_decrypt(c, key) == p);
            CHECK(oracle::grid_decrypt(c, perm) == p);

            MappedText sorted_p = p;
            MappedText sorted_c = c;
            std::sort(sorted_p.begin(), sorted_p.end());
            std::sort(sorted_c.begin(), sorted_c.end());
            CHECK(sorted_p == sorted_c);

            MappedText out(n);
            sct_decrypt_into(c, key.columns(), out);
            CHECK(out == p);
        }
    }
}

TEST_CASE("swap_elements")
{
    CHECK(cols(swap_elements(TranspositionKey::identity(4), 1, 3)) == std::vector<Column>{0, 3, 2, 1});
    CHECK_THROWS_AS(swap_elements(TranspositionKey::identity(4), 1, 1), std::invalid_argument);
    CHECK_THROWS_AS(swap_elements(TranspositionKey::identity(4), 1, 4), std::invalid_argument);
    oracle::Gen g(8);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t k = 2 + g() % 39;
        const TranspositionKey key(oracle::random_perm(g, k));
        const std::size_t i = g() % k;
        const std::size_t j = (i + 1 + g() % (k - 1)) % k;
        const auto once = swap_elements(key, i, j);
        CHECK(oracle::is_permutation_of_iota(cols(once)));
        CHECK(once[i] == key[j]);
        CHECK(once[j] == key[i]);
        CHECK(swap_elements(once, i, j) == key);
    }
}

TEST_CASE("swap_block")
{
    CHECK(cols(swap_block(TranspositionKey::identity(6), 0, 3, 2)) == std::vector<Column>{3, 4, 2, 0, 1, 5});
    CHECK(swap_block(TranspositionKey::identity(6), 1, 4, 1) == swap_elements(TranspositionKey::identity(6), 1, 4));
    CHECK(cols(swap_block(TranspositionKey::identity(6), 3, 0, 3)) == std::vector<Column>{3, 4, 5, 0, 1, 2});
    CHECK_THROWS_AS(swap_block(TranspositionKey::identity(6), 0, 1, 2), std::invalid_argument);
    CHECK_THROWS_AS(swap_block(TranspositionKey::identity(6), 0, 5, 2), std::invalid_argument);
    CHECK_THROWS_AS(swap_block(TranspositionKey::identity(6), 0, 3, 0), std::invalid_argument);
    oracle::Gen g(9);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t k = 2 + g() % 39;
        const std::size_t len = 1 + g() % (k / 2);
        const std::size_t p = g() % (k - 2 * len + 1);
        const std::size_t q = p + len + g() % (k - p - 2 * len + 1);
        const TranspositionKey key(oracle::random_perm(g, k));
        const auto once = swap_block(key, p, q, len);
        CHECK(oracle::is_permutation_of_iota(cols(once)));
        for (std::size_t t = 0; t < len; ++t) {
            CHECK(once[p + t] == key[q + t]);
            CHECK(once[q + t] == key[p + t]);
        }
        CHECK(swap_block(once, p, q, len) == key);
        CHECK(swap_block(key, q, p, len) == once);
    }
}

TEST_CASE("shift_block")
{
    CHECK(cols(shift_block(TranspositionKey::identity(5), 1, 2, 1)) == std::vector<Column>{0, 3, 1, 2, 4});
    CHECK(cols(shift_block(TranspositionKey::identity(5), 2, 2, -2)) == std::vector<Column>{2, 3, 0, 1, 4});
    CHECK(shift_block(TranspositionKey::identity(5), 1, 2, 0) == TranspositionKey::identity(5));
    CHECK(cols(shift_block(TranspositionKey::identity(2), 0, 1, 1)) == std::vector<Column>{1, 0});
    CHECK_THROWS_AS(shift_block(TranspositionKey::identity(5), 1, 2, 3), std::invalid_argument);
    CHECK_THROWS_AS(shift_block(TranspositionKey::identity(5), 1, 2, -2), std::invalid_argument);
    CHECK_THROWS_AS(shift_block(TranspositionKey::identity(5), 4, 2, 0), std::invalid_argument);
    CHECK_THROWS_AS(shift_block(TranspositionKey::identity(5), 0, 0, 1), std::invalid_argument);
    oracle::Gen g(10);
    for (int trial = 0; trial < 500; ++trial) {
        const std::size_t k = 2 + g() % 39;
        const std::size_t len = 1 + g() % (k - 1);
        const std::size_t p = g() % (k - len + 1);
        const std::ptrdiff_t lo = -static_cast<std::ptrdiff_t>(p);
        const std::ptrdiff_t hi = static_cast<std::ptrdiff_t>(k - len - p);
        const std::ptrdiff_t d = lo + static_cast<std::ptrdiff_t>(g() % static_cast<std::size_t>(hi - lo + 1));
        const TranspositionKey key(oracle::random_perm(g, k));
        const auto moved = shift_block(key, p, len, d);
        CHECK(oracle::is_permutation_of_iota(cols(moved)));
        const std::size_t dest = static_cast<std::size_t>(static_cast<std::ptrdiff_t>(p) + d);
        for (std::size_t t = 0; t < len; ++t) {
            CHECK(moved[dest + t] == key[p + t]);
        }
        // the displaced elements keep their relative order
        std::vector<Column> rest_before;
        std::vector<Column> rest_after;
        for (std::size_t t = 0; t < k; ++t) {
            if (t < p || t >= p + len) {
                rest_before.push_back(key[t]);
            }
            if (t < dest || t >= dest + len) {
                rest_after.push_back(moved[t]);
            }
        }
        CHECK(rest_before == rest_after);
        CHECK(shift_block(moved, dest, len, -d) == key);
    }
}
