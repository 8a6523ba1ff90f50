#include "pseudoprim/overlaps.hpp"

#include "pseudoprim/errors.hpp"

#include <string>

namespace pseudoprim {

namespace {

void require_theta_primitive(const Involution& theta, const Word& x, const char* op)
{
    require(!x.empty(), std::string(op) + ": x must be non-empty");
    check_alphabet(theta, x);
    require(is_theta_primitive(theta, x), std::string(op) + ": x is not theta-primitive");
}

Signs slice(const Signs& s, std::size_t from, std::size_t to)
{
    return Signs(s.begin() + static_cast<std::ptrdiff_t>(from), s.begin() + static_cast<std::ptrdiff_t>(to));
}

} // namespace

std::optional<Overlap3Witness> overlap3_witness(const Involution& theta, const Word& x)
{
    require_theta_primitive(theta, x, "overlap3_witness");
    const BlockSet blocks(theta, x);
    const std::size_t d = x.size();
    const Signs markers[] = {{Sign::plus, Sign::minus}, {Sign::minus, Sign::plus}};
    for (unsigned mask = 0; mask < 8; ++mask) {
        Signs triple;
        for (int bit = 2; bit >= 0; --bit)
            triple.push_back((mask >> bit) & 1U ? Sign::minus : Sign::plus);
        const Word product = blocks.expand(triple);
        for (const auto& marker : markers) {
            for (std::size_t off : occurrences(blocks.expand(marker), product))
                if (off % d != 0)
                    return Overlap3Witness{triple, marker, off};
        }
    }
    return std::nullopt;
}

std::optional<MarkerSplit> split_at_marker(const Involution& theta, const Word& x, const Word& w)
{
    require_theta_primitive(theta, x, "split_at_marker");
    auto signs = BlockSet(theta, x).block_signs(w);
    require(signs.has_value(), "split_at_marker: w is not a product of x and theta(x)");
    for (std::size_t i = 0; i + 1 < signs->size(); ++i) {
        if ((*signs)[i] != (*signs)[i + 1])
            return MarkerSplit{slice(*signs, 0, i), {(*signs)[i], (*signs)[i + 1]}, slice(*signs, i + 2, signs->size())};
    }
    return std::nullopt;
}

SplitResult pref_suff_split(const Involution& theta, const Word& x, const Word& u, const Word& v)
{
    require_theta_primitive(theta, x, "pref_suff_split");
    require(!u.empty() && !v.empty(), "pref_suff_split: u and v must be non-empty");
    const BlockSet blocks(theta, x);
    require(blocks.is_block_suffix(u), "pref_suff_split: u is not a suffix of a product of x and theta(x)");
    require(blocks.is_block_prefix(v), "pref_suff_split: v is not a prefix of a product of x and theta(x)");
    auto signs = blocks.block_signs(u + v);
    require(signs && signs->size() >= 2, "pref_suff_split: uv is not a product of at least two blocks");

    if (u.size() % x.size() == 0) {
        auto left = blocks.block_signs(u);
        auto right = blocks.block_signs(v);
        if (left && right) {
            SplitResult out;
            out.kind = SplitResult::Kind::factored;
            out.left_signs = std::move(*left);
            out.right_signs = std::move(*right);
            return out;
        }
    }
    for (Sign s : *signs)
        ensure(s == signs->front(), "pref_suff_split: unaligned split over mixed blocks");
    SplitResult out;
    out.kind = SplitResult::Kind::all_equal;
    out.sign = signs->front();
    out.block = blocks.block(out.sign);
    return out;
}

CleanSplit clean_split(const Involution& theta, const Word& x, const Word& p, const Word& q)
{
    require_theta_primitive(theta, x, "clean_split");
    require(!p.empty() && !q.empty(), "clean_split: p and q must be non-empty");
    require(is_theta_palindrome(theta, p), "clean_split: p is not a theta-palindrome");
    require(is_theta_palindrome(theta, q), "clean_split: q is not a theta-palindrome");
    const Word pq = p + q;
    require(is_primitive(pq), "clean_split: pq is not primitive");
    const BlockSet blocks(theta, x);
    auto signs = blocks.block_signs(pq);
    require(signs && signs->size() >= 2, "clean_split: pq is not a product of at least two blocks");

    const std::size_t n = signs->size();
    ensure(p.size() % x.size() == 0, "clean_split: the boundary between p and q is not block aligned");
    const std::size_t i = p.size() / x.size();
    ensure(i % 2 == 0 && n % 2 == 0, "clean_split: odd block count on one side");
    ensure(blocks.in_plus(p) && blocks.in_plus(q), "clean_split: p or q does not factor");
    return CleanSplit{i / 2, n / 2, std::move(*signs)};
}

PalPrefixClass pal_prefix_classify(const Involution& theta, const Word& x, const Word& p, const Word& z)
{
    require_theta_primitive(theta, x, "pal_prefix_classify");
    require(is_theta_palindrome(theta, p), "pal_prefix_classify: p is not a theta-palindrome");
    require(!z.empty() && z.size() < x.size(), "pal_prefix_classify: need 0 < |z| < |x|");
    auto signs = BlockSet(theta, x).block_signs(p + z);
    require(signs.has_value(), "pal_prefix_classify: pz is not a product of x and theta(x)");
    require(signs->size() >= 2, "pal_prefix_classify: pz must have at least two blocks");

    const std::size_t k = signs->size();
    PalPrefixClass out{signs->front(), signs->back()};
    for (std::size_t i = 0; i + 1 < k; ++i)
        ensure((*signs)[i] == out.uniform_sign, "pal_prefix_classify: leading blocks differ");
    if (is_theta_palindrome(theta, z))
        ensure(out.last_sign == out.uniform_sign, "pal_prefix_classify: palindromic tail but last block differs");
    return out;
}

} // namespace pseudoprim
