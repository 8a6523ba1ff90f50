// primitivity.hpp -- primitive roots, theta-primitive roots and block decompositions

#pragma once

#include "pseudoprim/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pseudoprim {

/// Orientation of one block: `plus` is the root t itself, `minus` is theta(t).
enum class Sign : unsigned char { plus, minus };

using Signs = std::vector<Sign>;

inline Sign flip(Sign s) { return s == Sign::plus ? Sign::minus : Sign::plus; }

/// "+-+" style rendering, as used in JSON records.
std::string format_signs(const Signs& signs);

/// "[+,-,+]" style rendering, as printed by the CLI.
std::string bracket_signs(const Signs& signs);

/// Inverse of `format_signs`; throws `InputError` on any other character.
Signs parse_signs(std::string_view text);

/// Concatenates `t` or theta(t) for each sign.
Word expand_signs(const Involution& theta, const Word& t, const Signs& signs);

struct PrimitiveRoot {
    Word root;
    std::size_t exponent = 0;

    bool operator==(const PrimitiveRoot&) const = default;
};

/// A word written as a sequence of blocks from {root, theta(root)}.
struct Decomposition {
    Word root;
    Signs signs;

    std::size_t block_count() const { return signs.size(); }
    Word expand(const Involution& theta) const { return expand_signs(theta, root, signs); }

    bool operator==(const Decomposition&) const = default;
};

/// The primitive word whose power is `w`, found from the border table.
PrimitiveRoot primitive_root(const Word& w);

bool is_primitive(const Word& w);

/// The theta-primitive root with the smallest block length. When the root is
/// a theta-palindrome every sign is plus.
Decomposition theta_primitive_root(const Involution& theta, const Word& w);

bool is_theta_primitive(const Involution& theta, const Word& w);

/// Signs of `w` over {t, theta(t)} with the first block equal to t, or none.
std::optional<Decomposition> decompose_over(const Involution& theta, const Word& t, const Word& w);

/// The |w| rotations of `w`, starting with `w` itself.
std::vector<Word> conjugates(const Word& w);

/// Membership queries for the language generated by {x, theta(x)}.
///
/// Unlike `decompose_over`, the first block may be either x or theta(x);
/// signs are reported relative to x.
class BlockSet {
public:
    BlockSet(const Involution& theta, Word x);

    const Involution& theta() const { return theta_; }
    const Word& x() const { return x_; }
    const Word& theta_x() const { return tx_; }
    bool palindromic() const { return x_ == tx_; }

    Word block(Sign s) const { return s == Sign::plus ? x_ : tx_; }
    Word expand(const Signs& signs) const { return expand_signs(theta_, x_, signs); }

    /// Sign of the block of `w` starting at `pos`, or none if it is neither
    /// x nor theta(x). Prefers plus when x is a theta-palindrome.
    std::optional<Sign> block_at(const Word& w, std::size_t pos) const;

    /// Signs of `w` as an element of {x, theta(x)}*, or none.
    std::optional<Signs> block_signs(const Word& w) const;

    bool in_star(const Word& w) const { return block_signs(w).has_value(); }
    bool in_plus(const Word& w) const { return !w.empty() && in_star(w); }

    /// `w` is a prefix of some word in {x, theta(x)}+.
    bool is_block_prefix(const Word& w) const;

    /// `w` is a suffix of some word in {x, theta(x)}+.
    bool is_block_suffix(const Word& w) const;

private:
    Involution theta_;
    Word x_;
    Word tx_;
};

} // namespace pseudoprim
