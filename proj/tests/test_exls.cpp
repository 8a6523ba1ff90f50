#include "oracles.hpp"

#include "pseudoprim/errors.hpp"
#include "pseudoprim/exls.hpp"

#include <doctest.h>

#include <algorithm>

using namespace pseudoprim;

namespace {

const Involution kMirror = Involution::mirror();

constexpr Sign P = Sign::plus;
constexpr Sign M = Sign::minus;

ExlsInstance instance(const char* u, const char* v, const char* w, Signs us, Signs vs, Signs ws)
{
    return {kMirror, word(u), word(v), word(w), {std::move(us), std::move(vs), std::move(ws)}};
}

std::string str(const Word& w) { return Alphabet(w.alphabet_size()).letters(w); }

} // namespace

TEST_SUITE("exls") {

TEST_CASE("exls_holds examples")
{
    CHECK_FALSE(exls_holds(instance("aabba", "aab", "ba", {P, M}, {P, P}, {P, P})));
    CHECK(exls_holds(instance("aaaabbaa", "aaaabb", "aa", {P, M}, {P, P}, {P, P})));
    CHECK_FALSE(exls_holds(instance("ab", "a", "a", {P, P}, {P}, {P})));
    CHECK_THROWS_AS(exls_holds(instance("", "a", "a", {P}, {P}, {P})), InputError);
    CHECK_THROWS_AS(exls_holds(instance("a", "a", "a", {}, {P}, {P})), InputError);
}

TEST_CASE("theta_periodicity_witness examples")
{
    CHECK(theta_periodicity_witness(kMirror, word("abba"), word("ab"), word("ba")) == word("ab"));
    CHECK_FALSE(theta_periodicity_witness(kMirror, word("aaaabbaa"), word("aaaabb"), word("aa")));
    CHECK(theta_periodicity_witness(kMirror, word("a"), word("a"), word("a")) == word("a"));
}

TEST_CASE("is_trivial_instance examples")
{
    CHECK(is_trivial_instance(instance("ab", "ab", "ab", {P, P, P, P}, {P, P}, {P, P})));
    CHECK_FALSE(is_trivial_instance(make_ls33m(2)));
    // 2|u| = 16 is not a multiple of |v| = 6.
    CHECK_FALSE(is_trivial_instance(make_ls2(2, 2)));
}

TEST_CASE("example families")
{
    const auto ls2 = make_ls2(2, 2);
    CHECK(ls2.u == word("aaaabbaa"));
    CHECK(ls2.v == word("aaaabb"));
    CHECK(ls2.w == word("aa"));

    const auto ls33m = gen_example("ls33m", {{"m", 2}});
    CHECK(ls33m.u == word("abbabbabbab"));
    CHECK(ls33m.v == word("abbab"));
    CHECK(ls33m.w == word("bbabbabba"));
    CHECK(ls33m.pattern == SignPattern{{P, P, M}, {P, M, M}, {P, P}});

    const auto ls34 = make_ls34even(1);
    CHECK(ls34.u == word("aaaabaaaaaab"));
    CHECK(ls34.v == word("aaaabaa"));
    CHECK(ls34.w == word("baaa"));
    CHECK(ls34.pattern == SignPattern{{P, P, P}, {P, P, M, M}, {P, M}});

    for (std::size_t i = 0; i <= 2; ++i)
        for (std::size_t j = 0; j <= 2; ++j) {
            const auto inst = make_ls33shift(i, j);
            CHECK(exls_holds(inst));
            CHECK_FALSE(theta_periodicity_witness(inst.theta, inst.u, inst.v, inst.w));
        }

    CHECK_THROWS_AS(make_ls33m(1), InputError);
    CHECK_THROWS_AS(make_ls34even(0), InputError);
    CHECK_THROWS_AS(gen_example("nope", {}), InputError);
    CHECK_THROWS_AS(gen_example("ls33m", {}), InputError);
    CHECK_THROWS_AS(gen_example("ls33m", {{"m", 2}, {"n", 2}}), InputError);
}

TEST_CASE("structured families")
{
    CHECK(gen_structured_family("family1", kMirror, word("a"), word("b"), 0, 1, 1, 2).word == word("baaaba"));
    CHECK(gen_structured_family("family2", kMirror, word("a"), word("b"), 0, 1, 1, 1).word == word("baab"));

    const auto pz = gen_structured_family("pz", kMirror, word("a"), word("b"), 0, 1, 3, 0);
    CHECK(pz.word == word("aaba"));
    CHECK(pz.p == word("aabaaabaa"));
    CHECK(pz.z == word("baa"));

    CHECK_THROWS_AS(gen_structured_family("family1", kMirror, word("ab"), word("b"), 0, 1, 1, 2), InputError);
    CHECK_THROWS_AS(gen_structured_family("family1", kMirror, word("a"), word("a"), 0, 1, 1, 2), InputError);
    CHECK_THROWS_AS(gen_structured_family("pz", kMirror, word("a"), word("b"), 0, 1, 2, 0), InputError);
}

TEST_CASE("exls_search finds the two-two-two example")
{
    const auto records = exls_search(kMirror, {2, 2, 2}, {6, 2});
    const bool found = std::any_of(records.begin(), records.end(), [](const CounterexampleRecord& r) {
        return r.instance.u == word("aaaabbaa") && r.instance.v == word("aaaabb") && r.instance.w == word("aa");
    });
    CHECK(found);
}

TEST_CASE("exls_search is empty for l = 4")
{
    CHECK(exls_search(kMirror, {4, 3, 3}, {4, 4}).empty());
}

TEST_CASE("exls_search records are genuine counterexamples")
{
    const auto records = exls_search(kMirror, {3, 3, 3}, {6, 9});
    CHECK_FALSE(records.empty());
    for (const auto& r : records) {
        CHECK(exls_holds(r.instance));
        CHECK(r.instance.pattern.is_normalized());
        CHECK_FALSE(theta_periodicity_witness(r.instance.theta, r.instance.u, r.instance.v, r.instance.w));
    }
}

TEST_CASE("the search recovers family instances beyond the desk bounds")
{
    // The (3,3,4) and (3,4,4) families first appear with |v| = 11.
    for (auto inst : {make_ls33m(4), make_ls34even(2), make_ls33m(2), make_ls2(2, 2)}) {
        CAPTURE(to_string(inst.triple()));
        // The search names w so that its last factor is plus.
        if (inst.pattern.w.back() == M) {
            inst.w = kMirror(inst.w);
            for (auto& sign : inst.pattern.w)
                sign = flip(sign);
        }
        REQUIRE(inst.pattern.is_normalized());
        const auto found = exls_solutions_for(kMirror, inst.triple(), inst.v, inst.w.size());
        CHECK(std::find(found.begin(), found.end(), inst) != found.end());
    }
    CHECK(make_ls33m(4).v.size() == 11);
    CHECK(make_ls34even(2).v.size() == 11);
}

TEST_CASE("exls_solutions matches a brute-force enumeration")
{
    // (l, n, m) = (2, 2, 2) with |v|, |w| <= 3: v_1 and w_2 are plus, a palindromic
    // v or w only takes plus signs, and u is the first half of the right-hand side.
    const auto ref = oracle::mirror();
    std::size_t expected = 0;
    for (const auto& v : oracle::words_up_to(2, 3))
        for (const auto& w : oracle::words_up_to(2, 3))
            for (int mask = 0; mask < 4; ++mask) {
                const bool v2 = mask & 1, w1 = mask & 2;
                if ((v2 && oracle::is_palindrome(ref, v)) || (w1 && oracle::is_palindrome(ref, w)))
                    continue;
                const std::string rhs = v + (v2 ? ref(v) : v) + (w1 ? ref(w) : w) + w;
                const std::string u = rhs.substr(0, rhs.size() / 2);
                const std::string second = rhs.substr(rhs.size() / 2);
                if (second == u || second == ref(u))
                    ++expected;
            }
    const auto got = exls_solutions(kMirror, {2, 2, 2}, {3, 3});
    CHECK(got.size() == expected);
    for (const auto& inst : got)
        CHECK(exls_holds(inst));
}

TEST_CASE("classify_triple")
{
    const std::vector<Involution> thetas{kMirror};
    const auto found = classify_triple(thetas, {2, 2, 2}, {6, 2});
    CHECK(found.status == Classification::Status::counterexample_found);
    CHECK_FALSE(found.records.empty());
    const auto none = classify_triple(thetas, {4, 3, 3}, {4, 4});
    CHECK(none.status == Classification::Status::none_within_bounds);
    CHECK(to_string(none.status) == "none_within_bounds");
}

TEST_CASE("search output does not depend on the number of jobs")
{
    const auto one = exls_search(kMirror, {2, 2, 2}, {5, 3}, 1);
    const auto four = exls_search(kMirror, {2, 2, 2}, {5, 3}, 4);
    CHECK(one == four);
}

TEST_CASE("ccks_structure")
{
    const auto c1 = ccks_structure(kMirror, word("abbaaab"), M, word("abbaa"), {P, P, P}, 3);
    REQUIRE(std::holds_alternative<CcksCase1>(c1));
    CHECK(std::get<CcksCase1>(c1) == CcksCase1{word("abba"), word("a")});

    const auto c2 = ccks_structure(kMirror, word("aabaaab"), P, word("aaba"), {P, P, M, M}, 4);
    REQUIRE(std::holds_alternative<CcksCase2>(c2));
    CHECK(std::get<CcksCase2>(c2) == CcksCase2{word("a"), word("b"), 0, 1});

    // Odd n with u_2 = u.
    CHECK_THROWS_AS(ccks_structure(kMirror, word("aaba"), P, word("aab"), {P, P, P}, 3), InputError);
    // 2|u| = n|v| leaves the non-trivial band.
    CHECK_THROWS_AS(ccks_structure(kMirror, word("aba"), M, word("ab"), {P, P, P}, 3), InputError);
}

TEST_CASE("ccks examples round trip through their equations")
{
    // u theta(u) = (pq)^(n-1) p for the first case.
    CHECK(str(word("abbaaab") + kMirror(word("abbaaab"))) == oracle::power("abbaa", 2) + "abba");
}

} // TEST_SUITE
