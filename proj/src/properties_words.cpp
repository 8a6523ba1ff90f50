// Properties about single words, roots and the equation module.

#include "properties.hpp"

#include "pseudoprim/equations.hpp"
#include "pseudoprim/errors.hpp"

#include <numeric>

namespace pseudoprim::detail {

namespace {

bool same_roots(const Word& a, const Word& b)
{
    return primitive_root(a).root == primitive_root(b).root;
}

/// Length of the longest common prefix of a^inf and b^inf, capped at `cap`.
std::size_t periodic_lcp(const Word& a, const Word& b, std::size_t cap)
{
    for (std::size_t i = 0; i < cap; ++i)
        if (a[i % a.size()] != b[i % b.size()])
            return i;
    return cap;
}

ProductLanguage theta_closure(const Involution& theta, const Word& u)
{
    return {{u, theta(u)}, {u, theta(u)}};
}

PropertyDef involution_laws()
{
    return {{"P01-involution-laws",
             "theta is an antimorphism of order two and maps theta-palindromes to theta-palindromes"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas) {
                    const auto words = words_with_empty(theta.alphabet_size(), ctx.bounds.max_x);
                    for (const auto& x : words)
                        for (const auto& y : words)
                            out.push_back(WitnessBuilder(theta).word("x", x).word("y", y));
                }
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto& theta = in.theta();
                const Word x = in.word("x");
                const Word y = in.word("y");
                bool ok = theta(theta(x)) == x && theta(x + y) == theta(y) + theta(x);
                ok = ok && (!is_theta_palindrome(theta, x) || is_theta_palindrome(theta, theta(x)));
                return checked(ok);
            }};
}

PropertyDef theta_primitive_is_primitive()
{
    return {{"P02-theta-primitive-is-primitive", "every theta-primitive word is primitive"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas)
                    for (const auto& w : words_up_to(theta.alphabet_size(), ctx.bounds.max_u))
                        out.push_back(WitnessBuilder(theta).word("w", w));
                return out;
            },
            [](const Witness& wit) {
                WitnessReader in(wit);
                const Word w = in.word("w");
                if (w.empty() || !is_theta_primitive(in.theta(), w))
                    return outside();
                return checked(is_primitive(w));
            }};
}

PropertyDef pq_qp()
{
    return {{"P03-pq-qp",
             "for theta-palindromes p, q with q a prefix of pq and |q| >= |p|, p, q and pq share a primitive root"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas) {
                    const auto pals = theta_palindromes_up_to(theta, ctx.bounds.max_u);
                    for (const auto& p : pals)
                        for (const auto& q : pals) {
                            if (p.size() + q.size() > ctx.bounds.max_u || q.size() < p.size())
                                continue;
                            if ((p + q).view().starts_with(q.view()))
                                out.push_back(WitnessBuilder(theta).word("p", p).word("q", q));
                        }
                }
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto& theta = in.theta();
                const Word p = in.word("p");
                const Word q = in.word("q");
                if (p.empty() || q.empty() || !is_theta_palindrome(theta, p) || !is_theta_palindrome(theta, q))
                    return outside();
                const Word pq = p + q;
                if (q.size() < p.size() || !pq.view().starts_with(q.view()))
                    return outside();
                return checked(same_roots(p, q) && same_roots(q, pq));
            }};
}

PropertyDef uv_expr()
{
    return {{"P04-uv-expr",
             "words of u{u,v}* and v{u,v}* sharing a prefix of length |u|+|v| force u and v to share a primitive root",
             true, true},
            [](const Context& ctx) {
                std::vector<Witness> out;
                const auto& theta = ctx.thetas.front();
                const auto words = words_up_to(theta.alphabet_size(), ctx.bounds.max_x);
                for (const auto& u : words)
                    for (const auto& v : words)
                        out.push_back(WitnessBuilder(theta).word("u", u).word("v", v).number("shift", ctx.shift()));
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const Word u = in.word("u");
                const Word v = in.word("v");
                if (u.empty() || v.empty())
                    return outside();
                const std::size_t target = u.size() + v.size() - std::min(in.number("shift"), u.size() + v.size());
                const ProductLanguage left{{u}, {u, v}};
                const ProductLanguage right{{v}, {u, v}};
                if (!shared_product_prefix(left, right, target))
                    return outside();
                return checked(same_roots(u, v));
            }};
}

PropertyDef pali_even()
{
    return {{"P05-pali-even",
             "an even-length theta-palindrome over a theta-primitive x uses an even number of blocks"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas)
                    for (const auto& p : theta_palindromes_up_to(theta, ctx.bounds.max_u)) {
                        if (p.size() % 2 != 0)
                            continue;
                        for (const auto& x : theta_primitive_generators(theta, p))
                            out.push_back(WitnessBuilder(theta).word("p", p).word("x", x));
                    }
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto& theta = in.theta();
                const Word p = in.word("p");
                const Word x = in.word("x");
                if (p.empty() || x.empty() || p.size() % 2 != 0 || !is_theta_palindrome(theta, p)
                    || !is_theta_primitive(theta, x))
                    return outside();
                auto signs = BlockSet(theta, x).block_signs(p);
                if (!signs)
                    return outside();
                return checked(signs->size() % 2 == 0);
            }};
}

PropertyDef fine_wilf()
{
    return {{"P06-fine-wilf",
             "powers of u and v agreeing on |u|+|v|-gcd(|u|,|v|) letters force a common primitive root", true, true},
            [](const Context& ctx) {
                std::vector<Witness> out;
                const auto& theta = ctx.thetas.front();
                const auto words = words_up_to(theta.alphabet_size(), ctx.bounds.max_x);
                for (const auto& u : words)
                    for (const auto& v : words)
                        out.push_back(WitnessBuilder(theta).word("u", u).word("v", v).number("shift", ctx.shift()));
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const Word u = in.word("u");
                const Word v = in.word("v");
                if (u.empty() || v.empty())
                    return outside();
                const std::size_t threshold = fw_threshold(u, v) - std::min(in.number("shift"), fw_threshold(u, v));
                if (periodic_lcp(u, v, threshold) < threshold)
                    return outside();
                return checked(same_roots(u, v));
            }};
}

PropertyDef exfw(bool lcm_version)
{
    PropertyInfo info = lcm_version
        ? PropertyInfo{"P07-exfw-lcm",
                       "words of {u,theta(u)}* and {v,theta(v)}* sharing lcm(|u|,|v|) letters force a common "
                       "theta-primitive root", true, false}
        : PropertyInfo{"P08-exfw-gcd",
                       "for |u| >= |v|, words of {u,theta(u)}* and {v,theta(v)}* sharing 2|u|+|v|-gcd(|u|,|v|) "
                       "letters force a common theta-primitive root", true, false};
    return {info,
            [lcm_version](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas) {
                    const auto words = words_up_to(theta.alphabet_size(), ctx.bounds.max_x);
                    for (const auto& u : words)
                        for (const auto& v : words)
                            if (lcm_version || u.size() >= v.size())
                                out.push_back(
                                    WitnessBuilder(theta).word("u", u).word("v", v).number("shift", ctx.shift()));
                }
                return out;
            },
            [lcm_version](const Witness& w) {
                WitnessReader in(w);
                const auto& theta = in.theta();
                const Word u = in.word("u");
                const Word v = in.word("v");
                if (u.empty() || v.empty() || (!lcm_version && u.size() < v.size()))
                    return outside();
                std::size_t threshold = lcm_version ? ext_fw_lcm_threshold(u, v) : ext_fw_gcd_threshold(u, v);
                threshold -= std::min(in.number("shift"), threshold);
                if (!shared_product_prefix(theta_closure(theta, u), theta_closure(theta, v), threshold))
                    return outside();
                return checked(common_theta_root(theta, u, v).has_value());
            }};
}

PropertyDef theta_commute()
{
    return {{"P09-theta-commute",
             "the solutions of xy = theta(y)x are exactly x = r(tr)^i, y = (tr)^j for theta-palindromes r, t with rt "
             "primitive, and extraction inverts the parametrization"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                const std::size_t budget = ctx.bounds.max_u;
                for (const auto& theta : ctx.thetas) {
                    const auto words = words_up_to(theta.alphabet_size(), budget);
                    for (const auto& x : words)
                        for (const auto& y : words) {
                            if (x.size() + y.size() > budget)
                                continue;
                            if (x + y == theta(y) + x)
                                out.push_back(WitnessBuilder(theta)
                                                  .text("kind", "pair")
                                                  .number("budget", budget)
                                                  .word("x", x)
                                                  .word("y", y));
                        }
                    for (const auto& p : theta_commute_params_up_to(theta, budget))
                        out.push_back(WitnessBuilder(theta)
                                          .text("kind", "params")
                                          .number("budget", budget)
                                          .word("r", p.r)
                                          .word("t", p.t)
                                          .number("i", p.i)
                                          .number("j", p.j));
                }
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto& theta = in.theta();
                const std::size_t budget = in.number("budget");
                if (in.text("kind") == "pair") {
                    const Word x = in.word("x");
                    const Word y = in.word("y");
                    if (x.empty() || y.empty() || x.size() + y.size() > budget || x + y != theta(y) + x)
                        return outside();
                    try {
                        auto p = theta_commute_extract(theta, x, y);
                        return checked(theta_commute_parametrize(theta, p) == std::make_pair(x, y));
                    } catch (const std::logic_error&) {
                        return checked(false);
                    }
                }
                ThetaCommuteParams p{in.word("r"), in.word("t"), in.number("i"), in.number("j")};
                try {
                    validate(theta, p);
                } catch (const InputError&) {
                    return outside();
                }
                if (p.r.size() + (p.i + p.j) * (p.r.size() + p.t.size()) > budget)
                    return outside();
                try {
                    auto [x, y] = theta_commute_parametrize(theta, p);
                    return checked(x + y == theta(y) + x && theta_commute_extract(theta, x, y) == p);
                } catch (const std::logic_error&) {
                    return checked(false);
                }
            }};
}

PropertyDef pali_conjugate()
{
    return {{"P10-pali-conjugate",
             "xy = zx with theta-palindromes y, z puts x, y and z in {t, theta(t)}* for one t"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas) {
                    const auto pals = theta_palindromes_up_to(theta, ctx.bounds.max_x);
                    for (const auto& x : words_up_to(theta.alphabet_size(), ctx.bounds.max_x))
                        for (const auto& y : pals) {
                            const Word xy = x + y;
                            const Word z = xy.prefix(y.size());
                            if (is_theta_palindrome(theta, z) && xy == z + x)
                                out.push_back(WitnessBuilder(theta).word("x", x).word("y", y).word("z", z));
                        }
                }
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto& theta = in.theta();
                const Word x = in.word("x");
                const Word y = in.word("y");
                const Word z = in.word("z");
                if (x.empty() || y.empty() || z.empty() || !is_theta_palindrome(theta, y)
                    || !is_theta_palindrome(theta, z) || x + y != z + x)
                    return outside();
                const Word words[] = {x, y, z};
                return checked(common_theta_root(theta, words).has_value());
            }};
}

PropertyDef ls_original()
{
    return {{"P43-ls-original", "u^l = v^n w^m with l, n, m >= 2 forces u, v, w to be powers of one word"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                const auto& theta = ctx.thetas.front();
                const std::size_t cap = ctx.bounds.max_product;
                const auto words = words_up_to(theta.alphabet_size(), ctx.bounds.max_x);
                for (const auto& v : words)
                    for (const auto& w : words)
                        for (std::size_t n = 2; n * v.size() + 2 * w.size() <= cap; ++n)
                            for (std::size_t m = 2; n * v.size() + m * w.size() <= cap; ++m) {
                                const Word rhs = v.power(n) + w.power(m);
                                for (std::size_t l = 2; l <= rhs.size(); ++l) {
                                    if (rhs.size() % l != 0)
                                        continue;
                                    const Word u = rhs.prefix(rhs.size() / l);
                                    if (u.power(l) == rhs)
                                        out.push_back(WitnessBuilder(theta)
                                                          .word("u", u)
                                                          .word("v", v)
                                                          .word("w", w)
                                                          .number("l", l)
                                                          .number("n", n)
                                                          .number("m", m));
                                }
                            }
                return out;
            },
            [](const Witness& wit) {
                WitnessReader in(wit);
                const Word u = in.word("u");
                const Word v = in.word("v");
                const Word w = in.word("w");
                const std::size_t l = in.number("l"), n = in.number("n"), m = in.number("m");
                if (u.empty() || v.empty() || w.empty() || l < 2 || n < 2 || m < 2)
                    return outside();
                if (u.power(l) != v.power(n) + w.power(m))
                    return outside();
                return checked(same_roots(u, v) && same_roots(v, w));
            }};
}

PropertyDef theta_root_unique()
{
    return {{"P44-theta-root-unique",
             "every non-empty word has exactly one theta-primitive root t with w in t{t, theta(t)}*"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas)
                    for (const auto& w : words_up_to(theta.alphabet_size(), ctx.bounds.max_u))
                        out.push_back(WitnessBuilder(theta).word("w", w));
                return out;
            },
            [](const Witness& wit) {
                WitnessReader in(wit);
                const auto& theta = in.theta();
                const Word w = in.word("w");
                if (w.empty())
                    return outside();
                std::vector<Word> roots;
                for (std::size_t d = 1; d <= w.size(); ++d) {
                    if (w.size() % d != 0)
                        continue;
                    const Word t = w.prefix(d);
                    if (is_theta_primitive(theta, t) && decompose_over(theta, t, w))
                        roots.push_back(t);
                }
                const auto found = theta_primitive_root(theta, w);
                return checked(roots.size() == 1 && roots.front() == found.root
                               && is_theta_primitive(theta, found.root) && found.expand(theta) == w);
            }};
}

} // namespace

void add_word_properties(std::vector<PropertyDef>& out)
{
    out.push_back(involution_laws());
    out.push_back(theta_primitive_is_primitive());
    out.push_back(pq_qp());
    out.push_back(uv_expr());
    out.push_back(pali_even());
    out.push_back(fine_wilf());
    out.push_back(exfw(true));
    out.push_back(exfw(false));
    out.push_back(theta_commute());
    out.push_back(pali_conjugate());
    out.push_back(ls_original());
    out.push_back(theta_root_unique());
}

} // namespace pseudoprim::detail
