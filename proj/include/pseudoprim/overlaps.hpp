// overlaps.hpp -- overlap witnesses and splitting of words over {x, theta(x)}
//
// Every operation here takes a theta-primitive generator x. Sign sequences
// are relative to x (plus = x, minus = theta(x)) and the first block may have
// either orientation.

#pragma once

#include "pseudoprim/primitivity.hpp"
#include "pseudoprim/word.hpp"

#include <optional>
#include <utility>

namespace pseudoprim {

/// A straddling occurrence of x theta(x) or theta(x) x inside a product of
/// three blocks.
struct Overlap3Witness {
    Signs triple;       ///< the three blocks x1 x2 x3
    Signs marker;       ///< {plus, minus} or {minus, plus}
    std::size_t offset; ///< not a multiple of |x|

    bool operator==(const Overlap3Witness&) const = default;
};

/// Scans all eight triples and both markers for an occurrence at an offset
/// not divisible by |x|. Triples, then markers, then offsets are visited in
/// ascending order, so the first witness found is the smallest.
std::optional<Overlap3Witness> overlap3_witness(const Involution& theta, const Word& x);

struct MarkerSplit {
    Signs left;
    std::pair<Sign, Sign> marker;
    Signs right;

    bool operator==(const MarkerSplit&) const = default;
};

/// Splits w around its first pair of adjacent blocks with opposite signs.
/// Returns none when all blocks of w share one sign.
std::optional<MarkerSplit> split_at_marker(const Involution& theta, const Word& x, const Word& w);

struct SplitResult {
    enum class Kind { factored, all_equal };

    Kind kind = Kind::factored;
    Signs left_signs;   ///< factored: signs of u
    Signs right_signs;  ///< factored: signs of v
    Word block;         ///< all_equal: the repeated block
    Sign sign = Sign::plus;

    bool operator==(const SplitResult&) const = default;
};

/// For a suffix u and a prefix v of products over {x, theta(x)} whose
/// concatenation has at least two blocks: either u and v factor on their own,
/// or uv repeats a single block.
SplitResult pref_suff_split(const Involution& theta, const Word& x, const Word& u, const Word& v);

struct CleanSplit {
    std::size_t k = 0; ///< p spans 2k blocks
    std::size_t m = 0; ///< pq spans 2m blocks
    Signs signs;

    bool operator==(const CleanSplit&) const = default;
};

/// Splits a primitive product pq of two non-empty theta-palindromes on a block
/// boundary with an even number of blocks on each side.
CleanSplit clean_split(const Involution& theta, const Word& x, const Word& p, const Word& q);

struct PalPrefixClass {
    Sign uniform_sign = Sign::plus;
    Sign last_sign = Sign::plus;

    bool operator==(const PalPrefixClass&) const = default;
};

/// For a theta-palindrome p and a short tail z with pz in {x, theta(x)}^k,
/// k >= 2: the first k - 1 blocks agree, and when z is a theta-palindrome the
/// last one agrees too.
PalPrefixClass pal_prefix_classify(const Involution& theta, const Word& x, const Word& p, const Word& z);

} // namespace pseudoprim
