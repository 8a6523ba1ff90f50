// Properties about overlaps and splits of words over {x, theta(x)}.

#include "properties.hpp"

#include "pseudoprim/equations.hpp"
#include "pseudoprim/errors.hpp"
#include "pseudoprim/overlaps.hpp"

#include <algorithm>

namespace pseudoprim::detail {

namespace {

std::vector<Word> theta_primitive_words(const Involution& theta, std::size_t max_length)
{
    std::vector<Word> out;
    for (auto& w : words_up_to(theta.alphabet_size(), max_length))
        if (is_theta_primitive(theta, w))
            out.push_back(std::move(w));
    return out;
}

/// Largest block count allowed for products over a generator of this length.
std::size_t max_block_count(const Bounds& b, std::size_t x_len)
{
    return std::min(b.max_blocks, b.max_product / x_len);
}

/// Sign sequences for products of min_blocks.. blocks within the bounds.
std::vector<Signs> products(const BlockSet& bs, std::size_t min_blocks, const Bounds& b)
{
    const std::size_t top = max_block_count(b, bs.x().size());
    if (top < min_blocks)
        return {};
    return block_sign_sequences(bs.palindromic(), min_blocks, top);
}

/// Reads theta and x and rejects generators that are not theta-primitive.
std::optional<BlockSet> generator(const WitnessReader& in)
{
    const Word x = in.word("x");
    if (x.empty() || !is_theta_primitive(in.theta(), x))
        return std::nullopt;
    return BlockSet(in.theta(), x);
}

bool same_block(const BlockSet& bs, Sign a, Sign b)
{
    return bs.block(a) == bs.block(b);
}

/// Every block of the decomposition is the same word.
bool uniform_blocks(const BlockSet& bs, const Signs& s)
{
    return std::all_of(s.begin(), s.end(), [&](Sign t) { return same_block(bs, t, s.front()); });
}

PropertyDef overlap2()
{
    return {{"P11-overlap2",
             "x1 x2 y = z x3 x4 with 0 < |y|, |z| < |x| over a theta-primitive x forces x2 != x3"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas)
                    for (const auto& x : theta_primitive_words(theta, ctx.bounds.max_x))
                        for (const auto& quad : all_signs(4))
                            for (std::size_t d = 1; d < x.size(); ++d)
                                out.push_back(
                                    WitnessBuilder(theta).word("x", x).signs("signs", quad).number("shift", d));
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto bs = generator(in);
                const Signs quad = in.signs("signs");
                const std::size_t d = in.number("shift");
                if (!bs || quad.size() != 4 || d == 0 || d >= bs->x().size())
                    return outside();
                const Word left = bs->expand({quad[0], quad[1]});
                const Word right = bs->expand({quad[2], quad[3]});
                const std::size_t overlap = left.size() - d;
                if (left.suffix(overlap) != right.prefix(overlap))
                    return outside();
                return checked(!same_block(*bs, quad[1], quad[2]));
            }};
}

PropertyDef overlap3()
{
    return {{"P12-overlap3",
             "neither x theta(x) nor theta(x) x is a proper infix of a word in {x, theta(x)}^3"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas)
                    for (const auto& x : theta_primitive_words(theta, ctx.bounds.max_x))
                        out.push_back(WitnessBuilder(theta).word("x", x));
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto bs = generator(in);
                if (!bs)
                    return outside();
                // Independent scan next to the library routine.
                bool straddles = false;
                const std::size_t len = bs->x().size();
                for (const auto& triple : all_signs(3))
                    for (const Signs& marker : {Signs{Sign::plus, Sign::minus}, Signs{Sign::minus, Sign::plus}})
                        for (std::size_t off : occurrences(bs->expand(marker), bs->expand(triple)))
                            straddles = straddles || off % len != 0;
                return checked(!straddles && !overlap3_witness(bs->theta(), bs->x()));
            }};
}

PropertyDef marker_infix()
{
    return {{"P13-xtex-infix1",
             "y x theta(x) z or y theta(x) x z in {x, theta(x)}* forces y, z in {x, theta(x)}*"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas)
                    for (const auto& x : theta_primitive_words(theta, ctx.bounds.max_x)) {
                        const BlockSet bs(theta, x);
                        for (const auto& signs : products(bs, 2, ctx.bounds)) {
                            const Word prod = bs.expand(signs);
                            for (const Signs& marker : {Signs{Sign::plus, Sign::minus}, Signs{Sign::minus, Sign::plus}})
                                for (std::size_t off : occurrences(bs.expand(marker), prod))
                                    out.push_back(WitnessBuilder(theta)
                                                      .word("x", x)
                                                      .signs("signs", signs)
                                                      .signs("marker", marker)
                                                      .number("offset", off));
                        }
                    }
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto bs = generator(in);
                const Signs marker = in.signs("marker");
                if (!bs || marker.size() != 2 || marker[0] == marker[1])
                    return outside();
                const Word prod = bs->expand(in.signs("signs"));
                const Word mid = bs->expand(marker);
                const std::size_t off = in.number("offset");
                if (off + mid.size() > prod.size() || prod.slice(off, mid.size()) != mid)
                    return outside();
                const Word y = prod.prefix(off);
                const Word z = prod.suffix(prod.size() - off - mid.size());
                return checked(bs->in_star(y) && bs->in_star(z));
            }};
}

/// Shared shape of the infix properties: v and yvz both products, the
/// occurrence given by its offset.
PropertyDef infix_split(PropertyInfo info, std::size_t min_v_blocks, std::size_t min_outer_blocks,
                        std::function<bool(const BlockSet&, const Word&)> admissible)
{
    return {info,
            [=](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas)
                    for (const auto& x : theta_primitive_words(theta, ctx.bounds.max_x)) {
                        const BlockSet bs(theta, x);
                        const auto outer = products(bs, std::max(min_v_blocks, min_outer_blocks), ctx.bounds);
                        for (const auto& v_signs : products(bs, min_v_blocks, ctx.bounds)) {
                            const Word v = bs.expand(v_signs);
                            if (!admissible(bs, v))
                                continue;
                            for (const auto& outer_signs : outer) {
                                if (outer_signs.size() < v_signs.size())
                                    continue;
                                for (std::size_t off : occurrences(v, bs.expand(outer_signs)))
                                    out.push_back(WitnessBuilder(theta)
                                                      .word("x", x)
                                                      .signs("v_signs", v_signs)
                                                      .signs("signs", outer_signs)
                                                      .number("offset", off));
                            }
                        }
                    }
                return out;
            },
            [=](const Witness& w) {
                WitnessReader in(w);
                const auto bs = generator(in);
                if (!bs)
                    return outside();
                const Signs v_signs = in.signs("v_signs");
                const Signs outer_signs = in.signs("signs");
                if (v_signs.size() < min_v_blocks || outer_signs.size() < min_outer_blocks)
                    return outside();
                const Word v = bs->expand(v_signs);
                const Word prod = bs->expand(outer_signs);
                const std::size_t off = in.number("offset");
                if (!admissible(*bs, v) || off + v.size() > prod.size() || prod.slice(off, v.size()) != v)
                    return outside();
                const Word y = prod.prefix(off);
                const Word z = prod.suffix(prod.size() - off - v.size());
                return checked(bs->in_star(y) && bs->in_star(z));
            }};
}

bool contains_marker(const BlockSet& bs, const Word& v)
{
    return !occurrences(bs.expand({Sign::plus, Sign::minus}), v).empty()
        || !occurrences(bs.expand({Sign::minus, Sign::plus}), v).empty();
}

/// Cut points of products with at least two blocks, as (u, v) pairs.
std::vector<Witness> product_cuts(const Context& ctx)
{
    std::vector<Witness> out;
    for (const auto& theta : ctx.thetas)
        for (const auto& x : theta_primitive_words(theta, ctx.bounds.max_x)) {
            const BlockSet bs(theta, x);
            for (const auto& signs : products(bs, 2, ctx.bounds)) {
                const Word prod = bs.expand(signs);
                for (std::size_t c = 1; c < prod.size(); ++c)
                    out.push_back(WitnessBuilder(theta)
                                      .word("x", x)
                                      .word("u", prod.prefix(c))
                                      .word("v", prod.suffix(prod.size() - c)));
            }
        }
    return out;
}

struct CutCase {
    BlockSet bs;
    Word u;
    Word v;
    Signs signs; ///< of uv
};

/// The common hypothesis of the split properties: uv in {x, theta(x)}^{>=2},
/// u a suffix and v a prefix of products.
std::optional<CutCase> read_cut(const Witness& w)
{
    WitnessReader in(w);
    auto bs = generator(in);
    if (!bs)
        return std::nullopt;
    Word u = in.word("u");
    Word v = in.word("v");
    if (u.empty() || v.empty() || !bs->is_block_suffix(u) || !bs->is_block_prefix(v))
        return std::nullopt;
    auto signs = bs->block_signs(u + v);
    if (!signs || signs->size() < 2)
        return std::nullopt;
    return CutCase{*bs, std::move(u), std::move(v), std::move(*signs)};
}

PropertyDef pref_suff()
{
    return {{"P17-pref-suff-split",
             "for u in Suff and v in Pref of {x, theta(x)}+ with uv = x1...xm, m >= 2: u, v factor or all xi are "
             "equal"},
            product_cuts,
            [](const Witness& w) {
                const auto c = read_cut(w);
                if (!c)
                    return outside();
                const bool factored = c->bs.in_plus(c->u) && c->bs.in_plus(c->v);
                if (!factored && !uniform_blocks(c->bs, c->signs))
                    return checked(false);
                try {
                    const auto result = pref_suff_split(c->bs.theta(), c->bs.x(), c->u, c->v);
                    const bool agrees = factored ? result.kind == SplitResult::Kind::factored
                                                        && c->bs.expand(result.left_signs) == c->u
                                                        && c->bs.expand(result.right_signs) == c->v
                                                 : result.kind == SplitResult::Kind::all_equal;
                    return checked(agrees);
                } catch (const std::logic_error&) {
                    return checked(false);
                }
            }};
}

PropertyDef pref_suff_primitive()
{
    return {{"P18-pref-suff-primitive",
             "for u in Suff and v in Pref of {x, theta(x)}+ with uv primitive in {x, theta(x)}^{>=2}: u, v in "
             "{x, theta(x)}+"},
            product_cuts,
            [](const Witness& w) {
                const auto c = read_cut(w);
                if (!c || !is_primitive(c->u + c->v))
                    return outside();
                return checked(c->bs.in_plus(c->u) && c->bs.in_plus(c->v));
            }};
}

PropertyDef conjugacy()
{
    return {{"P19-conjugacy",
             "uv, vu in {x, theta(x)}^n with n >= 2 means u, v factor, or {uv, vu} = {x^n, theta(x)^n}"},
            product_cuts,
            [](const Witness& w) {
                WitnessReader in(w);
                const auto bs = generator(in);
                const Word u = in.word("u");
                const Word v = in.word("v");
                if (!bs || u.empty() || v.empty())
                    return outside();
                const auto uv = bs->block_signs(u + v);
                const auto vu = bs->block_signs(v + u);
                if (!uv || !vu || uv->size() < 2)
                    return outside();
                const std::size_t n = uv->size();
                const Word xn = bs->x().power(n);
                const Word txn = bs->theta_x().power(n);
                return checked((bs->in_plus(u) && bs->in_plus(v)) || (u + v == xn && v + u == txn)
                               || (u + v == txn && v + u == xn));
            }};
}

/// Pairs of non-empty theta-palindromes, each at most `each` long, with
/// |p| + |q| <= limit.
template <typename Fn>
void palindrome_pairs(const Involution& theta, std::size_t each, std::size_t limit, Fn&& fn)
{
    const auto pals = theta_palindromes_up_to(theta, std::min(each, limit));
    for (const auto& p : pals)
        for (const auto& q : pals)
            if (p.size() + q.size() <= limit)
                fn(p, q);
}

PropertyDef clean_split_property()
{
    return {{"P20-clean-split",
             "a primitive pq of theta-palindromes in {x, theta(x)}^n splits as 2k blocks for p and 2m-2k for q"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas)
                    palindrome_pairs(theta, ctx.bounds.max_u, ctx.bounds.max_product,
                                     [&](const Word& p, const Word& q) {
                                         const Word pq = p + q;
                                         if (!is_primitive(pq))
                                             return;
                                         for (const auto& x : theta_primitive_generators(theta, pq, 2))
                                             out.push_back(WitnessBuilder(theta).word("x", x).word("p", p).word("q", q));
                                     });
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto bs = generator(in);
                const auto& theta = in.theta();
                const Word p = in.word("p");
                const Word q = in.word("q");
                if (!bs || p.empty() || q.empty() || !is_theta_palindrome(theta, p) || !is_theta_palindrome(theta, q))
                    return outside();
                const Word pq = p + q;
                const auto signs = decompose_over(theta, bs->x(), pq);
                if (!is_primitive(pq) || !signs || signs->block_count() < 2)
                    return outside();
                try {
                    const auto split = clean_split(theta, bs->x(), p, q);
                    const std::size_t len = bs->x().size();
                    return checked(split.k >= 1 && split.m > split.k && split.signs.size() == 2 * split.m
                                   && p.size() == 2 * split.k * len && bs->expand(split.signs) == pq);
                } catch (const std::logic_error&) {
                    return checked(false);
                }
            }};
}

PropertyDef prime_te_prime()
{
    return {{"P21-prime-te-prime",
             "a primitive pq of theta-palindromes p, q not both in some {x, theta(x)}+ is theta-primitive"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas)
                    palindrome_pairs(theta, ctx.bounds.max_u, ctx.bounds.max_u, [&](const Word& p, const Word& q) {
                        out.push_back(WitnessBuilder(theta).word("p", p).word("q", q));
                    });
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto& theta = in.theta();
                const Word p = in.word("p");
                const Word q = in.word("q");
                if (p.empty() || q.empty() || !is_theta_palindrome(theta, p) || !is_theta_palindrome(theta, q))
                    return outside();
                if (!is_primitive(p + q) || common_theta_root(theta, p, q))
                    return outside();
                return checked(is_theta_primitive(theta, p + q));
            }};
}

PropertyDef pq2_te_prime()
{
    return {{"P22-pq2-te-prime",
             "for theta-palindromes p, q with pq primitive: some word of {p, q}+ is theta-primitive iff pq is"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas) {
                    const auto pals = theta_palindromes_up_to(theta, ctx.bounds.max_x);
                    for (const auto& p : pals)
                        for (const auto& q : pals)
                            if (is_primitive(p + q))
                                out.push_back(WitnessBuilder(theta)
                                                  .word("p", p)
                                                  .word("q", q)
                                                  .number("max_factors", ctx.bounds.max_blocks)
                                                  .number("max_length", ctx.bounds.max_product));
                }
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto& theta = in.theta();
                const Word p = in.word("p");
                const Word q = in.word("q");
                if (p.empty() || q.empty() || !is_theta_palindrome(theta, p) || !is_theta_palindrome(theta, q)
                    || !is_primitive(p + q))
                    return outside();
                const std::size_t max_factors = in.number("max_factors");
                const std::size_t max_length = in.number("max_length");
                bool some = false;
                for (const auto& choice : block_sign_sequences(false, 1, max_factors)) {
                    Word prod(theta.alphabet_size());
                    for (Sign s : choice)
                        prod += s == Sign::plus ? p : q;
                    if (prod.size() <= max_length && is_theta_primitive(theta, prod)) {
                        some = true;
                        break;
                    }
                }
                const bool pq_prim = is_theta_primitive(theta, p + q);
                // With pq itself in range, one direction is immediate; the
                // check is on the converse.
                return checked(some == pq_prim || (!some && p.size() + q.size() > max_length));
            }};
}

PropertyDef conj_pal()
{
    return {{"P23-conj-pal", "for theta-palindromes p, q: pq theta-primitive implies qp theta-primitive"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas)
                    palindrome_pairs(theta, ctx.bounds.max_u, ctx.bounds.max_u, [&](const Word& p, const Word& q) {
                        if (is_theta_primitive(theta, p + q))
                            out.push_back(WitnessBuilder(theta).word("p", p).word("q", q));
                    });
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto& theta = in.theta();
                const Word p = in.word("p");
                const Word q = in.word("q");
                if (p.empty() || q.empty() || !is_theta_palindrome(theta, p) || !is_theta_palindrome(theta, q)
                    || !is_theta_primitive(theta, p + q))
                    return outside();
                return checked(is_theta_primitive(theta, q + p));
            }};
}

PropertyDef pal_prefix()
{
    return {{"P24-pal-x1-xn",
             "a theta-palindrome p with pz in {x, theta(x)}^k, 0 < |z| < |x|, k >= 2, has x1 = ... = x(k-1), and "
             "x(k) = x(k-1) when z is a theta-palindrome"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas)
                    for (const auto& x : theta_primitive_words(theta, ctx.bounds.max_x)) {
                        const BlockSet bs(theta, x);
                        for (const auto& signs : products(bs, 2, ctx.bounds)) {
                            const Word prod = bs.expand(signs);
                            for (std::size_t len = 1; len < x.size(); ++len) {
                                const Word p = prod.prefix(prod.size() - len);
                                if (is_theta_palindrome(theta, p))
                                    out.push_back(
                                        WitnessBuilder(theta).word("x", x).word("p", p).word("z", prod.suffix(len)));
                            }
                        }
                    }
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto bs = generator(in);
                const Word p = in.word("p");
                const Word z = in.word("z");
                if (!bs || z.empty() || z.size() >= bs->x().size() || !is_theta_palindrome(in.theta(), p))
                    return outside();
                const auto signs = bs->block_signs(p + z);
                if (!signs || signs->size() < 2)
                    return outside();
                const std::size_t k = signs->size();
                const Signs head(signs->begin(), signs->end() - 1);
                bool ok = uniform_blocks(*bs, head);
                if (is_theta_palindrome(in.theta(), z))
                    ok = ok && same_block(*bs, (*signs)[k - 1], (*signs)[k - 2]);
                try {
                    const auto cls = pal_prefix_classify(in.theta(), bs->x(), p, z);
                    ok = ok && same_block(*bs, cls.uniform_sign, (*signs)[0])
                        && same_block(*bs, cls.last_sign, (*signs)[k - 1]);
                } catch (const std::logic_error&) {
                    ok = false;
                }
                return checked(ok);
            }};
}

PropertyDef rootshare()
{
    return {{"P25-rootshare",
             "root sharing: u^n in w+ gives u in w+, and uv with one of u, v in w+ gives both; likewise over "
             "{x, theta(x)} for a theta-primitive x, also with theta(u)v and u theta(v)"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas) {
                    const auto words = words_up_to(theta.alphabet_size(), ctx.bounds.max_x);
                    for (const auto& u : words) {
                        for (std::size_t n = 1; n * u.size() <= ctx.bounds.max_product; ++n) {
                            const Word un = u.power(n);
                            out.push_back(WitnessBuilder(theta)
                                              .text("kind", "prim-power")
                                              .word("x", primitive_root(un).root)
                                              .word("u", u)
                                              .number("n", n));
                            for (const auto& x : theta_primitive_generators(theta, un))
                                out.push_back(
                                    WitnessBuilder(theta).text("kind", "theta-power").word("x", x).word("u", u).number(
                                        "n", n));
                        }
                        for (const auto& v : words) {
                            auto emit = [&](const char* kind, const Word& x) {
                                out.push_back(WitnessBuilder(theta).text("kind", kind).word("x", x).word("u", u).word(
                                    "v", v));
                            };
                            const Word uv = u + v;
                            const Word root = primitive_root(uv).root;
                            if (primitive_root(u).root == root || primitive_root(v).root == root)
                                emit("prim-concat", root);
                            for (const auto& x : theta_primitive_generators(theta, uv)) {
                                const BlockSet bs(theta, x);
                                if (bs.in_plus(u) || bs.in_plus(v))
                                    emit("theta-concat", x);
                            }
                            for (const Word& mixed : {theta(u) + v, u + theta(v)})
                                for (const auto& x : theta_primitive_generators(theta, mixed))
                                    emit("theta-mixed", x);
                        }
                    }
                }
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto& theta = in.theta();
                const std::string& kind = in.text("kind");
                const Word x = in.word("x");
                const Word u = in.word("u");
                if (x.empty() || u.empty())
                    return outside();
                if (kind == "prim-power" || kind == "prim-concat") {
                    if (!is_primitive(x))
                        return outside();
                    auto in_powers = [&](const Word& s) {
                        return !s.empty() && s.size() % x.size() == 0 && x.power(s.size() / x.size()) == s;
                    };
                    if (kind == "prim-power") {
                        const std::size_t n = in.number("n");
                        if (n == 0 || !in_powers(u.power(n)))
                            return outside();
                        return checked(in_powers(u));
                    }
                    const Word v = in.word("v");
                    if (v.empty() || !in_powers(u + v) || !(in_powers(u) || in_powers(v)))
                        return outside();
                    return checked(in_powers(u) && in_powers(v));
                }
                if (!is_theta_primitive(theta, x))
                    return outside();
                const BlockSet bs(theta, x);
                if (kind == "theta-power") {
                    const std::size_t n = in.number("n");
                    if (n == 0 || !bs.in_plus(u.power(n)))
                        return outside();
                    return checked(bs.in_plus(u));
                }
                const Word v = in.word("v");
                if (v.empty())
                    return outside();
                if (kind == "theta-concat") {
                    if (!bs.in_plus(u + v) || !(bs.in_plus(u) || bs.in_plus(v)))
                        return outside();
                    return checked(bs.in_plus(u) && bs.in_plus(v));
                }
                require(kind == "theta-mixed", "unknown rootshare kind '" + kind + "'");
                const bool first = bs.in_plus(theta(u) + v) && bs.in_plus(u);
                const bool second = bs.in_plus(u + theta(v)) && bs.in_plus(v);
                if (!first && !second)
                    return outside();
                return checked(bs.in_plus(u) && bs.in_plus(v));
            }};
}

} // namespace

void add_overlap_properties(std::vector<PropertyDef>& out)
{
    out.push_back(overlap2());
    out.push_back(overlap3());
    out.push_back(marker_infix());
    out.push_back(infix_split({"P14-xtex-infix2",
                               "v, yvz in {x, theta(x)}* with x theta(x) or theta(x) x an infix of v forces y, z in "
                               "{x, theta(x)}*"},
                              2, 1, contains_marker));
    out.push_back(infix_split({"P15-primitive-split",
                               "v, yvz in {x, theta(x)}^{>=2} with v primitive forces y, z in {x, theta(x)}*"},
                              2, 2, [](const BlockSet&, const Word& v) { return is_primitive(v); }));
    out.push_back(infix_split({"P16-pali-split",
                               "v, yvz in {x, theta(x)}+ with v a theta-palindrome forces y, z in {x, theta(x)}*"},
                              1, 1,
                              [](const BlockSet& bs, const Word& v) { return is_theta_palindrome(bs.theta(), v); }));
    out.push_back(pref_suff());
    out.push_back(pref_suff_primitive());
    out.push_back(conjugacy());
    out.push_back(clean_split_property());
    out.push_back(prime_te_prime());
    out.push_back(pq2_te_prime());
    out.push_back(conj_pal());
    out.push_back(pal_prefix());
    out.push_back(rootshare());
}

} // namespace pseudoprim::detail
