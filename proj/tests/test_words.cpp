#include "oracles.hpp"

#include "pseudoprim/errors.hpp"
#include "pseudoprim/primitivity.hpp"
#include "pseudoprim/word.hpp"

#include <doctest.h>

using namespace pseudoprim;

namespace {

std::string str(const Word& w) { return Alphabet(w.alphabet_size()).letters(w); }

const Involution kMirror = Involution::mirror();
const Involution kSwap = Involution::parse("ba");

} // namespace

TEST_SUITE("words-core") {

TEST_CASE("alphabet parsing and formatting")
{
    const Alphabet ab;
    CHECK(ab.parse("abba") == word("abba"));
    CHECK(ab.parse("").empty());
    CHECK(ab.parse("ε").empty());
    CHECK(ab.format(Word(2)) == "ε");
    CHECK(ab.letters(Word(2)).empty());
    CHECK_THROWS_AS(ab.parse("abc"), InputError);
    CHECK(Alphabet(4, "acgt").parse("acgt") == word("abcd", 4));
    CHECK_THROWS_AS(Alphabet(4).parse("acgt"), InputError);
}

TEST_CASE("word slicing and powers")
{
    const Word w = word("aabab");
    CHECK(w.prefix(2) == word("aa"));
    CHECK(w.suffix(3) == word("bab"));
    CHECK(w.slice(1, 3) == word("aba"));
    CHECK(word("ab").power(3) == word("ababab"));
    CHECK(word("ab").power(0).empty());
    CHECK(word("a") < word("ab"));
    CHECK(word("ab") < word("b"));
}

TEST_CASE("involution parsing")
{
    CHECK(Involution::parse("mirror", 2) == kMirror);
    CHECK(kMirror.spec() == "ab");
    CHECK(kMirror.name() == "mirror");
    CHECK(kSwap.name() == "ba");
    CHECK(kSwap.alphabet_size() == 2);
    CHECK_THROWS_AS(Involution::parse("bc"), InputError);
    CHECK_THROWS_AS(Involution::parse("bca"), InputError); // a 3-cycle is not an involution
    CHECK_THROWS_AS(Involution::parse("ba", 3), InputError);

    const auto all2 = Involution::all(2);
    REQUIRE(all2.size() == 2);
    CHECK(all2[0].is_mirror());
    CHECK(all2[1] == kSwap);
    // Involutive permutations of 3 and 4 letters: 4 and 10.
    CHECK(Involution::all(3).size() == 4);
    CHECK(Involution::all(4).size() == 10);
}

TEST_CASE("apply_involution")
{
    CHECK(kMirror(word("abb")) == word("bba"));
    CHECK(kMirror(Word(2)).empty());
    // Reverse complement over {a, c, g, t}: a <-> t, c <-> g.
    const Alphabet dna_letters(4, "acgt");
    const auto dna = Involution::parse("dcba");
    CHECK(dna_letters.letters(dna(dna_letters.parse("acg"))) == "cgt");
    CHECK_THROWS_AS(kMirror(word("ab", 3)), InputError);
}

TEST_CASE("apply_involution agrees with the string oracle")
{
    for (const auto& [theta, ref] : {std::pair{kMirror, oracle::mirror()}, std::pair{kSwap, oracle::swap()}})
        for (const auto& s : oracle::words_up_to(2, 8)) {
            const Word w = word(s);
            CHECK(str(theta(w)) == ref(s));
            CHECK(theta(theta(w)) == w);
            CHECK(is_theta_palindrome(theta, w) == oracle::is_palindrome(ref, s));
        }
}

TEST_CASE("is_theta_palindrome")
{
    CHECK(is_theta_palindrome(kMirror, word("abba")));
    CHECK_FALSE(is_theta_palindrome(kMirror, word("ab")));
    CHECK(is_theta_palindrome(kSwap, word("ab")));
}

TEST_CASE("longest_common_prefix and occurrences")
{
    CHECK(longest_common_prefix(word("abab"), word("abba")) == 2);
    CHECK(longest_common_prefix(Word(3), word("abc", 3)) == 0);
    CHECK(longest_common_prefix(word("abbab"), word("abbab")) == 5);
    CHECK(occurrences(word("ab"), word("abab")) == std::vector<std::size_t>{0, 2});
    CHECK(occurrences(word("aa"), word("abab")).empty());
    CHECK(occurrences(word("aba"), word("ababa")) == std::vector<std::size_t>{0, 2});
    CHECK_THROWS_AS(occurrences(Word(2), word("ab")), InputError);
}

TEST_CASE("enumeration helpers")
{
    CHECK(words_of_length(2, 3).size() == 8);
    const auto upto = words_up_to(2, 3);
    REQUIRE(upto.size() == 14);
    CHECK(upto.front() == word("a"));
    CHECK(upto.back() == word("bbb"));
    // Mirror palindromes of length <= 4 over {a, b}: 2 + 2 + 4 + 4.
    CHECK(theta_palindromes_up_to(kMirror, 4).size() == 12);
}

} // TEST_SUITE

TEST_SUITE("primitivity") {

TEST_CASE("primitive_root examples")
{
    CHECK(primitive_root(word("abab")) == PrimitiveRoot{word("ab"), 2});
    CHECK(primitive_root(word("aabb")) == PrimitiveRoot{word("aabb"), 1});
    CHECK(primitive_root(word("aaa")) == PrimitiveRoot{word("a"), 3});
    CHECK_THROWS_AS(primitive_root(Word(2)), InputError);
}

TEST_CASE("primitive_root agrees with the divisor oracle")
{
    for (const auto& s : oracle::words_up_to(2, 12)) {
        const auto r = primitive_root(word(s));
        const auto expected = oracle::primitive_root(s);
        REQUIRE(str(r.root) == expected);
        CHECK(r.exponent == s.size() / expected.size());
    }
}

TEST_CASE("theta-primitivity examples")
{
    CHECK(is_theta_primitive(kMirror, word("aabb")));
    CHECK_FALSE(is_theta_primitive(kMirror, word("abba")));
    CHECK_FALSE(is_theta_primitive(kMirror, word("aa")));

    const auto abba = theta_primitive_root(kMirror, word("abba"));
    CHECK(abba.root == word("ab"));
    CHECK(abba.signs == Signs{Sign::plus, Sign::minus});
    const auto aaaa = theta_primitive_root(kMirror, word("aaaa"));
    CHECK(aaaa.root == word("a"));
    CHECK(aaaa.signs == Signs(4, Sign::plus));
    const auto abbaab = theta_primitive_root(kMirror, word("abbaab"));
    CHECK(abbaab.root == word("ab"));
    CHECK(abbaab.signs == Signs{Sign::plus, Sign::minus, Sign::plus});
}

TEST_CASE("theta_primitive_root agrees with the divisor oracle")
{
    for (const auto& [theta, ref] : {std::pair{kMirror, oracle::mirror()}, std::pair{kSwap, oracle::swap()}})
        for (const auto& s : oracle::words_up_to(2, 11)) {
            const Word w = word(s);
            const auto d = theta_primitive_root(theta, w);
            REQUIRE(str(d.root) == oracle::theta_primitive_root(ref, s));
            CHECK(d.expand(theta) == w);
            CHECK(d.signs.front() == Sign::plus);
            if (is_theta_palindrome(theta, d.root))
                CHECK(d.signs == Signs(d.signs.size(), Sign::plus));
            CHECK(is_theta_primitive(theta, w) == oracle::is_theta_primitive(ref, s));
        }
}

TEST_CASE("theta-primitive words are primitive")
{
    for (const auto& theta : Involution::all(2))
        for (const auto& w : words_up_to(2, 10))
            if (is_theta_primitive(theta, w))
                CHECK(is_primitive(w));
}

TEST_CASE("decompose_over")
{
    CHECK(decompose_over(kMirror, word("ab"), word("abbaab"))->signs == Signs{Sign::plus, Sign::minus, Sign::plus});
    CHECK(decompose_over(kMirror, word("ab"), word("abab"))->signs == Signs{Sign::plus, Sign::plus});
    CHECK_FALSE(decompose_over(kMirror, word("ab"), word("aabb")));
    // The first block must be t itself.
    CHECK_FALSE(decompose_over(kMirror, word("ab"), word("baab")));
}

TEST_CASE("conjugates")
{
    CHECK(conjugates(word("abb")) == std::vector<Word>{word("abb"), word("bba"), word("bab")});
    CHECK(conjugates(word("aa")) == std::vector<Word>{word("aa"), word("aa")});
    CHECK(conjugates(word("ab")) == std::vector<Word>{word("ab"), word("ba")});
}

TEST_CASE("sign formatting round trip")
{
    const Signs s{Sign::plus, Sign::minus, Sign::minus};
    CHECK(format_signs(s) == "+--");
    CHECK(bracket_signs(s) == "[+,-,-]");
    CHECK(parse_signs("+--") == s);
    CHECK_THROWS_AS(parse_signs("+x"), InputError);
}

TEST_CASE("BlockSet membership matches the oracle")
{
    for (const auto& [theta, ref] : {std::pair{kMirror, oracle::mirror()}, std::pair{kSwap, oracle::swap()}})
        for (const auto& xs : {"ab", "aab", "abb", "a"}) {
            const BlockSet bs(theta, word(xs));
            const std::string x = xs;
            const std::string tx = ref(x);
            for (const auto& s : oracle::words_up_to(2, 9)) {
                const Word w = word(s);
                REQUIRE(bs.in_star(w) == oracle::in_star(x, tx, s));
                if (auto signs = bs.block_signs(w))
                    CHECK(bs.expand(*signs) == w);
                // Prefix of some product: s is a prefix of a product of
                // length |s| + |x| rounded up to whole blocks.
                bool prefix = false, suffix = false;
                const std::size_t blocks = s.size() / x.size() + 1;
                for (const auto& choice : oracle::words(2, blocks)) {
                    std::string prod;
                    for (char c : choice)
                        prod += c == 'a' ? x : tx;
                    prefix = prefix || prod.compare(0, s.size(), s) == 0;
                    suffix = suffix || prod.compare(prod.size() - s.size(), s.size(), s) == 0;
                }
                CHECK(bs.is_block_prefix(w) == prefix);
                CHECK(bs.is_block_suffix(w) == suffix);
            }
        }
}

TEST_CASE("regression: p = a, q = baaab")
{
    // pq is theta-primitive while q p^3 is a square.
    CHECK(is_theta_primitive(kMirror, word("abaaab")));
    CHECK(word("baaab") + word("aaa") == word("baaabaaa"));
    CHECK(primitive_root(word("baaabaaa")) == PrimitiveRoot{word("baaa"), 2});
    CHECK_FALSE(is_primitive(word("baaabaaa")));
}

} // TEST_SUITE
