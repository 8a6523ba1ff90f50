#include "oracles.hpp"

#include "pseudoprim/errors.hpp"
#include "pseudoprim/overlaps.hpp"

#include <doctest.h>

using namespace pseudoprim;

namespace {

const Involution kMirror = Involution::mirror();
const Involution kSwap = Involution::parse("ba");

constexpr Sign P = Sign::plus;
constexpr Sign M = Sign::minus;

} // namespace

TEST_SUITE("overlaps") {

TEST_CASE("overlap3_witness examples")
{
    CHECK_FALSE(overlap3_witness(kMirror, word("ab")));
    CHECK_FALSE(overlap3_witness(kMirror, word("aab")));
    CHECK_THROWS_AS(overlap3_witness(kMirror, word("aa")), InputError);
    CHECK_THROWS_AS(overlap3_witness(kMirror, Word(2)), InputError);
}

TEST_CASE("no straddling marker in three blocks, by string search")
{
    for (const auto& [theta, ref] : {std::pair{kMirror, oracle::mirror()}, std::pair{kSwap, oracle::swap()}})
        for (const auto& x : oracle::words_up_to(2, 7)) {
            if (!oracle::is_theta_primitive(ref, x))
                continue;
            const std::string tx = ref(x);
            bool straddles = false;
            for (const auto& choice : oracle::words(2, 3)) {
                std::string prod;
                for (char c : choice)
                    prod += c == 'a' ? x : tx;
                for (const auto& marker : {x + tx, tx + x})
                    for (std::size_t d = 1; d + marker.size() <= prod.size(); ++d)
                        if (d % x.size() != 0 && prod.compare(d, marker.size(), marker) == 0)
                            straddles = true;
            }
            CHECK_FALSE(straddles);
            CHECK_FALSE(overlap3_witness(theta, word(x)));
        }
}

TEST_CASE("split_at_marker examples")
{
    CHECK(split_at_marker(kMirror, word("ab"), word("abbaab")) == MarkerSplit{{}, {P, M}, {P}});
    CHECK_FALSE(split_at_marker(kMirror, word("ab"), word("abab")));
    CHECK(split_at_marker(kMirror, word("ab"), word("baab")) == MarkerSplit{{}, {M, P}, {}});
    CHECK(split_at_marker(kMirror, word("ab"), word("ababba")) == MarkerSplit{{P}, {P, M}, {}});
}

TEST_CASE("pref_suff_split examples")
{
    const auto factored = pref_suff_split(kMirror, word("ab"), word("ba"), word("ab"));
    CHECK(factored.kind == SplitResult::Kind::factored);
    CHECK(factored.left_signs == Signs{M});
    CHECK(factored.right_signs == Signs{P});

    const auto equal = pref_suff_split(kMirror, word("ab"), word("b"), word("aba"));
    CHECK(equal.kind == SplitResult::Kind::all_equal);
    CHECK(equal.block == word("ba"));
    CHECK(equal.sign == M);

    CHECK_THROWS_AS(pref_suff_split(kMirror, word("ab"), word("b"), word("a")), InputError);
}

TEST_CASE("clean_split examples")
{
    CHECK(clean_split(kMirror, word("ab"), word("abba"), word("baab")) == CleanSplit{1, 2, {P, M, M, P}});
    CHECK_THROWS_AS(clean_split(kMirror, word("ab"), word("abba"), word("abba")), InputError);
    CHECK_THROWS_AS(clean_split(kMirror, word("aab"), word("aab"), word("baa")), InputError);
}

TEST_CASE("pal_prefix_classify examples")
{
    CHECK(pal_prefix_classify(kMirror, word("aab"), word("aabaa"), word("b")) == PalPrefixClass{P, P});
    CHECK(pal_prefix_classify(kMirror, word("aab"), word("aabaabaa"), word("b")) == PalPrefixClass{P, P});
    CHECK_THROWS_AS(pal_prefix_classify(kMirror, word("ab"), word("a"), word("b")), InputError);
}

} // TEST_SUITE
