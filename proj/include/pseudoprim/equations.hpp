// equations.hpp -- periodicity thresholds, common theta-roots and theta-commutation

#pragma once

#include "pseudoprim/primitivity.hpp"
#include "pseudoprim/word.hpp"

#include <optional>
#include <span>
#include <vector>

namespace pseudoprim {

/// |u| + |v| - gcd(|u|, |v|).
std::size_t fw_threshold(const Word& u, const Word& v);

/// 2|u| + |v| - gcd(|u|, |v|); requires |u| >= |v|.
std::size_t ext_fw_gcd_threshold(const Word& u, const Word& v);

/// lcm(|u|, |v|).
std::size_t ext_fw_lcm_threshold(const Word& u, const Word& v);

/// A theta-primitive t such that every word lies in {t, theta(t)}+, or none.
///
/// Of t and theta(t) the lexicographically smaller one is returned. The
/// first block of each word may be either orientation.
std::optional<Word> common_theta_root(const Involution& theta, std::span<const Word> words);

std::optional<Word> common_theta_root(const Involution& theta, const Word& u, const Word& v);

/// Parameters of a solution x = r(tr)^i, y = (tr)^j of xy = theta(y)x.
struct ThetaCommuteParams {
    Word r;
    Word t;
    std::size_t i = 0;
    std::size_t j = 1;

    bool operator==(const ThetaCommuteParams&) const = default;
};

/// Throws `InputError` unless r and t are theta-palindromes, t is
/// non-empty, rt is primitive, j >= 1 and x = r(tr)^i is non-empty.
void validate(const Involution& theta, const ThetaCommuteParams& params);

/// Returns (r(tr)^i, (tr)^j) after validating `params`.
std::pair<Word, Word> theta_commute_parametrize(const Involution& theta, const ThetaCommuteParams& params);

/// Inverse of `theta_commute_parametrize`. Throws `InputError` if x or y is
/// empty or xy != theta(y)x.
ThetaCommuteParams theta_commute_extract(const Involution& theta, const Word& x, const Word& y);

/// Every valid parameter set whose pair satisfies |x| + |y| <= budget.
std::vector<ThetaCommuteParams> theta_commute_params_up_to(const Involution& theta, std::size_t budget);

/// Generators of a product language: the first factor comes from `first`,
/// every later one from `rest`.
struct ProductLanguage {
    std::vector<Word> first;
    std::vector<Word> rest;
};

/// Two products that agree on their first `length` letters.
struct SharedPrefix {
    std::vector<std::size_t> left_factors;  ///< indices: first into `first`, then into `rest`
    std::vector<std::size_t> right_factors;
    Word prefix;
};

/// Looks for a word of `left` and a word of `right` sharing a prefix of
/// exactly `length` letters, returning the first pair found by a
/// depth-first search over factor choices. Factors must be non-empty.
std::optional<SharedPrefix> shared_product_prefix(const ProductLanguage& left,
                                                  const ProductLanguage& right,
                                                  std::size_t length);

} // namespace pseudoprim
