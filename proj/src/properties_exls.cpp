// Properties about extended Lyndon-Schützenberger equations and the word
// families used to solve them.

#include "properties.hpp"

#include "pseudoprim/equations.hpp"
#include "pseudoprim/errors.hpp"

#include <map>
#include <numeric>
#include <mutex>
#include <tuple>

namespace pseudoprim::detail {

namespace {

// ---------------------------------------------------------------------------
// Solutions of u_1 ... u_l = v_1 ... v_n w_1 ... w_m with n, m in {3, 4}.

/// Satisfied normalized instances for the given l, all thetas, n and m in
/// {3, 4}, |v|, |w| <= max_x. Computed once per bounds and shared.
const std::vector<ExlsInstance>& solutions(const Context& ctx, std::size_t l)
{
    using Key = std::tuple<std::size_t, std::size_t, std::size_t>;
    static std::mutex mutex;
    static std::map<Key, std::vector<ExlsInstance>> cache;

    const Key key{l, ctx.bounds.max_x, ctx.bounds.alphabet_size};
    std::lock_guard lock(mutex);
    auto it = cache.find(key);
    if (it != cache.end())
        return it->second;
    std::vector<ExlsInstance> out;
    const SearchBounds bounds{ctx.bounds.max_x, ctx.bounds.max_x};
    for (const auto& theta : ctx.thetas)
        for (std::size_t n : {3, 4})
            for (std::size_t m : {3, 4})
                for (auto& inst : exls_solutions(theta, {l, n, m}, bounds, ctx.jobs))
                    out.push_back(std::move(inst));
    return cache.emplace(key, std::move(out)).first->second;
}

Witness instance_witness(const ExlsInstance& inst)
{
    return WitnessBuilder(inst.theta)
        .word("u", inst.u)
        .word("v", inst.v)
        .word("w", inst.w)
        .signs("u_signs", inst.pattern.u)
        .signs("v_signs", inst.pattern.v)
        .signs("w_signs", inst.pattern.w);
}

/// Reads an instance and keeps it only if the equation holds.
std::optional<ExlsInstance> satisfied_instance(const Witness& w)
{
    WitnessReader in(w);
    ExlsInstance inst{in.theta(), in.word("u"), in.word("v"), in.word("w"),
                      {in.signs("u_signs"), in.signs("v_signs"), in.signs("w_signs")}};
    if (inst.u.empty() || inst.v.empty() || inst.w.empty() || inst.pattern.u.empty() || inst.pattern.v.empty()
        || inst.pattern.w.empty() || !exls_holds(inst))
        return std::nullopt;
    return inst;
}

/// The setting of the l = 4 problem: n, m >= 3, theta-primitive v and w, the
/// v-side at least as long as the w-side, u_1, v_1, w_m fixed, and (when
/// asked) |v|, |w| < |u|.
bool in_setting(const ExlsInstance& inst, bool with_lengths)
{
    const auto t = inst.triple();
    if (t.l != 4 || t.n < 3 || t.m < 3 || !inst.pattern.is_normalized())
        return false;
    if (!is_theta_primitive(inst.theta, inst.v) || !is_theta_primitive(inst.theta, inst.w))
        return false;
    if (t.n * inst.v.size() < t.m * inst.w.size())
        return false;
    return !with_lengths || (inst.v.size() < inst.u.size() && inst.w.size() < inst.u.size());
}

Word w_side(const ExlsInstance& inst)
{
    return expand_signs(inst.theta, inst.w, inst.pattern.w);
}

/// u_3 u_4 of an l = 4 instance.
Word u_tail(const ExlsInstance& inst)
{
    return expand_signs(inst.theta, inst.u, {inst.pattern.u[2], inst.pattern.u[3]});
}

/// A property over the l = 4 solution set restricted to the problem setting.
PropertyDef setting_property(PropertyInfo info, bool with_lengths, std::function<bool(const ExlsInstance&)> holds)
{
    return {std::move(info),
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& inst : solutions(ctx, 4))
                    out.push_back(instance_witness(inst));
                return out;
            },
            [=](const Witness& w) {
                const auto inst = satisfied_instance(w);
                if (!inst || !in_setting(*inst, with_lengths))
                    return outside();
                return checked(holds(*inst));
            }};
}

PropertyDef uv_length()
{
    return {{"P26-uv-length",
             "a satisfied l = 4 instance with n, m >= 3 and theta-primitive v, w has |v| < |u| and |w| < |u|"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& inst : solutions(ctx, 4))
                    out.push_back(instance_witness(inst));
                return out;
            },
            [](const Witness& w) {
                const auto inst = satisfied_instance(w);
                if (!inst)
                    return outside();
                const auto t = inst->triple();
                if (t.l != 4 || t.n < 3 || t.m < 3 || !is_theta_primitive(inst->theta, inst->v)
                    || !is_theta_primitive(inst->theta, inst->w))
                    return outside();
                return checked(inst->v.size() < inst->u.size() && inst->w.size() < inst->u.size());
            }};
}

bool two_enough(const ExlsInstance& inst)
{
    const std::size_t g = std::gcd(inst.u.size(), inst.v.size());
    for (std::size_t d = 1; d <= g; ++d) {
        if (g % d != 0)
            continue;
        const BlockSet bs(inst.theta, inst.u.prefix(d));
        if (bs.in_plus(inst.u) && bs.in_plus(inst.v) && !bs.in_plus(inst.w))
            return false;
    }
    return true;
}

bool has_witness(const ExlsInstance& inst)
{
    return theta_periodicity_witness(inst.theta, inst.u, inst.v, inst.w).has_value();
}

bool claim_non_trivial(const ExlsInstance& inst)
{
    if (is_trivial_instance(inst))
        return true;
    const Word tail = u_tail(inst);
    const Word ws = w_side(inst);
    if (tail.size() <= ws.size())
        return false;
    const Word q = tail.prefix(tail.size() - ws.size());
    return is_theta_palindrome(inst.theta, q) && q + ws == tail;
}

bool claim_u3_ne_u4(const ExlsInstance& inst)
{
    const Word u3 = expand_signs(inst.theta, inst.u, {inst.pattern.u[2]});
    const Word u4 = expand_signs(inst.theta, inst.u, {inst.pattern.u[3]});
    if (is_trivial_instance(inst) || u3 == u4)
        return true;
    const Word ws = w_side(inst);
    if (ws != inst.w.power(inst.pattern.w.size()))
        return false;
    const Word tail = u3 + u4;
    const std::size_t reps = (tail.size() + inst.w.size() - 1) / inst.w.size();
    return inst.w.power(reps).suffix(tail.size()) == tail;
}

// ---------------------------------------------------------------------------
// Prefix configurations v v_2 ... v_n in Pref(u u_2 u_3).

PropertyDef ccks()
{
    return {{"P30-ccks09a",
             "a prefix configuration with (n-1)|v| < 2|u| < n|v| has the (pq)^{n-1}p shape when u2 = theta(u) and "
             "the r(tr)^i(rt)^{i+j}r shape with n even when u2 = u"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas)
                    for (const auto& v : words_up_to(theta.alphabet_size(), ctx.bounds.max_x)) {
                        if (!is_theta_primitive(theta, v))
                            continue;
                        const bool pal = is_theta_palindrome(theta, v);
                        for (std::size_t n = 3; n <= 6; ++n)
                            for (const auto& tail : block_sign_sequences(pal, n - 1, n - 1)) {
                                Signs signs{Sign::plus};
                                signs.insert(signs.end(), tail.begin(), tail.end());
                                const Word prod = expand_signs(theta, v, signs);
                                for (std::size_t len = 1; 2 * len < prod.size(); ++len) {
                                    if (2 * len <= (n - 1) * v.size())
                                        continue;
                                    const Word u = prod.prefix(len);
                                    for (Sign u2 : {Sign::plus, Sign::minus}) {
                                        const Word uu2 = u + expand_signs(theta, u, {u2});
                                        if (prod.prefix(2 * len) != uu2)
                                            continue;
                                        const Word rest = prod.suffix(prod.size() - 2 * len);
                                        if (!u.view().starts_with(rest.view()) && !theta(u).view().starts_with(rest.view()))
                                            continue;
                                        out.push_back(WitnessBuilder(theta)
                                                          .word("u", u)
                                                          .signs("u2", {u2})
                                                          .word("v", v)
                                                          .signs("v_signs", signs));
                                    }
                                }
                            }
                    }
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto& theta = in.theta();
                const Word u = in.word("u");
                const Word v = in.word("v");
                const Signs u2s = in.signs("u2");
                const Signs signs = in.signs("v_signs");
                const std::size_t n = signs.size();
                if (u.empty() || v.empty() || u2s.size() != 1 || n < 3 || signs.front() != Sign::plus
                    || !is_theta_primitive(theta, v))
                    return outside();
                if (!((n - 1) * v.size() < 2 * u.size() && 2 * u.size() < n * v.size()))
                    return outside();
                const Sign u2 = u2s.front();
                const Word prod = expand_signs(theta, v, signs);
                const Word head = u + expand_signs(theta, u, {u2});
                if (!(head + u).view().starts_with(prod.view()) && !(head + theta(u)).view().starts_with(prod.view()))
                    return outside();
                try {
                    const auto result = ccks_structure(theta, u, u2, v, signs, n);
                    if (u2 == Sign::minus) {
                        const auto* c = std::get_if<CcksCase1>(&result);
                        if (!c || c->p.empty() || c->q.empty() || !is_theta_palindrome(theta, c->p)
                            || !is_theta_palindrome(theta, c->q))
                            return checked(false);
                        return checked(v == c->p + c->q && prod == v.power(n)
                                       && u + theta(u) == (c->p + c->q).power(n - 1) + c->p);
                    }
                    const auto* c = std::get_if<CcksCase2>(&result);
                    if (!c || n % 2 != 0 || c->r.empty() || c->t.empty() || c->j < 1
                        || !is_theta_palindrome(theta, c->r) || !is_theta_palindrome(theta, c->t)
                        || !is_primitive(c->r + c->t))
                        return checked(false);
                    const Word tr = c->t + c->r;
                    const Word rt = c->r + c->t;
                    const Word expected_v = c->r + tr.power(c->i) + rt.power(c->i + c->j) + c->r;
                    const Word expected_u = v.power(n / 2 - 1) + c->r + tr.power(c->i) + rt.power(c->j);
                    return checked(v == expected_v && u == expected_u
                                   && prod == v.power(n / 2) + theta(v).power(n / 2));
                } catch (const std::logic_error&) {
                    return checked(false);
                }
            }};
}

// ---------------------------------------------------------------------------
// Auxiliary statements with their own universes.

std::vector<Word> theta_primitive_words(const Involution& theta, std::size_t max_length)
{
    std::vector<Word> out;
    for (auto& w : words_up_to(theta.alphabet_size(), max_length))
        if (is_theta_primitive(theta, w))
            out.push_back(std::move(w));
    return out;
}

/// Products over a theta-primitive w with min_blocks.. blocks within the bounds.
std::vector<Signs> products(const Involution& theta, const Word& w, std::size_t min_blocks, const Bounds& b)
{
    const std::size_t top = std::min(b.max_blocks, b.max_product / w.size());
    if (top < min_blocks)
        return {};
    return block_sign_sequences(is_theta_palindrome(theta, w), min_blocks, top);
}

bool uniform_words(const Involution& theta, const Word& w, const Signs& s)
{
    const Word first = expand_signs(theta, w, {s.front()});
    for (Sign x : s)
        if (expand_signs(theta, w, {x}) != first)
            return false;
    return true;
}

PropertyDef pali_pref_pali()
{
    return {{"P33-pali-pref-pali",
             "theta-palindromes p = q w1...wk over a theta-primitive w: p, q in {w, theta(w)}+ or all wi are equal"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas) {
                    const auto pals = theta_palindromes_up_to(theta, ctx.bounds.max_x);
                    for (const auto& w : theta_primitive_words(theta, ctx.bounds.max_x))
                        for (const auto& signs : products(theta, w, 1, ctx.bounds)) {
                            const Word ws = expand_signs(theta, w, signs);
                            const Word mirrored = theta(ws);
                            auto consider = [&](const Word& q) {
                                const Word p = q + ws;
                                if (p.size() <= ctx.bounds.max_product && is_theta_palindrome(theta, q)
                                    && is_theta_palindrome(theta, p))
                                    out.push_back(WitnessBuilder(theta).word("w", w).signs("w_signs", signs).word("q", q));
                            };
                            // For |q| <= |ws| the palindrome p fixes q as a prefix of theta(ws).
                            for (std::size_t len = 1; len <= std::min(ws.size(), ctx.bounds.max_u); ++len)
                                consider(mirrored.prefix(len));
                            for (const auto& q : pals)
                                if (q.size() > ws.size())
                                    consider(q);
                        }
                }
                return out;
            },
            [](const Witness& wit) {
                WitnessReader in(wit);
                const auto& theta = in.theta();
                const Word w = in.word("w");
                const Signs signs = in.signs("w_signs");
                const Word q = in.word("q");
                if (w.empty() || q.empty() || signs.empty() || !is_theta_primitive(theta, w)
                    || !is_theta_palindrome(theta, q))
                    return outside();
                const Word p = q + expand_signs(theta, w, signs);
                if (!is_theta_palindrome(theta, p))
                    return outside();
                const BlockSet bs(theta, w);
                return checked((bs.in_plus(p) && bs.in_plus(q)) || uniform_words(theta, w, signs));
            }};
}

/// (tr)^j [(r(tr)^i)^n (tr)^j]^k, or the second family when `second` is set.
Word rt_family(const Word& r, const Word& t, std::size_t i, std::size_t j, std::size_t k, std::size_t n_or_m,
               bool second)
{
    const Word tr = t + r;
    const Word rti = r + tr.power(i);
    if (!second)
        return tr.power(j) + (rti.power(n_or_m) + tr.power(j)).power(k);
    return tr.power(j) + (rti.power(n_or_m) + tr.power(j)).power(k - 1) + rti.power(n_or_m - 1)
        + (r + t).power(j);
}

PropertyDef rt_primitive(bool second)
{
    PropertyInfo info = second
        ? PropertyInfo{"P36-rt2-primitive-2",
                       "for rt primitive: (tr)^j [(r(tr)^i)^m (tr)^j]^{k-1} (r(tr)^i)^{m-1} (rt)^j is primitive"}
        : PropertyInfo{"P35-rt2-primitive-1", "for rt primitive: (tr)^j [(r(tr)^i)^n (tr)^j]^k is primitive, n >= 2"};
    const std::size_t lowest = second ? 1 : 2;
    return {info,
            [=](const Context& ctx) {
                std::vector<Witness> out;
                constexpr std::size_t kMaxPair = 6;
                constexpr std::size_t kMaxIndex = 3;
                for (const auto& theta : ctx.thetas) {
                    const auto words = words_up_to(theta.alphabet_size(), kMaxPair - 1);
                    for (const auto& r : words)
                        for (const auto& t : words) {
                            if (r.size() + t.size() > kMaxPair || !is_primitive(r + t))
                                continue;
                            for (std::size_t i = 0; i <= kMaxIndex; ++i)
                                for (std::size_t j = 1; j <= kMaxIndex; ++j)
                                    for (std::size_t k = 1; k <= kMaxIndex; ++k)
                                        for (std::size_t nm = lowest; nm <= kMaxIndex; ++nm)
                                            out.push_back(WitnessBuilder(theta)
                                                              .word("r", r)
                                                              .word("t", t)
                                                              .number("i", i)
                                                              .number("j", j)
                                                              .number("k", k)
                                                              .number(second ? "m" : "n", nm));
                        }
                }
                return out;
            },
            [=](const Witness& w) {
                WitnessReader in(w);
                const auto& theta = in.theta();
                const Word r = in.word("r");
                const Word t = in.word("t");
                const std::size_t i = in.number("i"), j = in.number("j"), k = in.number("k");
                const std::size_t nm = in.number(second ? "m" : "n");
                if (r.empty() || t.empty() || !is_primitive(r + t) || j < 1 || k < 1 || nm < lowest)
                    return outside();
                const Word built = rt_family(r, t, i, j, k, nm, second);
                bool ok = is_primitive(built);
                if (is_theta_palindrome(theta, r) && is_theta_palindrome(theta, t)) {
                    try {
                        const auto made = gen_structured_family(second ? "family2" : "family1", theta, r, t, i, j, k, nm);
                        ok = ok && made.word == built;
                    } catch (const std::logic_error&) {
                        ok = false;
                    }
                }
                return checked(ok);
            }};
}

PropertyDef zp_nonprime()
{
    return {{"P37-zp-nonprime", "zp = w^n with n >= 2, |z| < |w| and p a theta-palindrome forces z = theta(z)"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas)
                    for (const auto& w : words_up_to(theta.alphabet_size(), ctx.bounds.max_x))
                        for (std::size_t n = 2; n * w.size() <= ctx.bounds.max_product; ++n) {
                            const Word wn = w.power(n);
                            for (std::size_t len = 1; len < w.size(); ++len)
                                if (is_theta_palindrome(theta, wn.suffix(wn.size() - len)))
                                    out.push_back(
                                        WitnessBuilder(theta).word("w", w).number("n", n).word("z", wn.prefix(len)));
                        }
                return out;
            },
            [](const Witness& wit) {
                WitnessReader in(wit);
                const auto& theta = in.theta();
                const Word w = in.word("w");
                const Word z = in.word("z");
                const std::size_t n = in.number("n");
                if (w.empty() || z.empty() || z.size() >= w.size() || n < 2)
                    return outside();
                const Word wn = w.power(n);
                if (!wn.view().starts_with(z.view()) || !is_theta_palindrome(theta, wn.suffix(wn.size() - z.size())))
                    return outside();
                return checked(is_theta_palindrome(theta, z));
            }};
}

Word uteuqnu_word(const Involution& theta, const Word& u, const Word& q, std::size_t n, std::size_t l)
{
    return u + (theta(u) + q.power(n) + u).power(l);
}

PropertyDef uteuqnu()
{
    return {{"P38-uteuqnu",
             "u[theta(u) q^n u]^l in {x, theta(x)}^{>=2} with q a theta-palindrome, n >= 2, l >= 1 gives u, q in "
             "{x, theta(x)}+"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& theta : ctx.thetas) {
                    const auto pals = theta_palindromes_up_to(theta, ctx.bounds.max_x);
                    for (const auto& u : words_up_to(theta.alphabet_size(), ctx.bounds.max_x))
                        for (const auto& q : pals)
                            for (std::size_t n = 2; 3 * u.size() + n * q.size() <= ctx.bounds.max_product; ++n)
                                for (std::size_t l = 1;; ++l) {
                                    const Word word = uteuqnu_word(theta, u, q, n, l);
                                    if (word.size() > ctx.bounds.max_product)
                                        break;
                                    for (const auto& x : theta_primitive_generators(theta, word, 2))
                                        out.push_back(WitnessBuilder(theta)
                                                          .word("x", x)
                                                          .word("u", u)
                                                          .word("q", q)
                                                          .number("n", n)
                                                          .number("l", l));
                                }
                }
                return out;
            },
            [](const Witness& w) {
                WitnessReader in(w);
                const auto& theta = in.theta();
                const Word x = in.word("x");
                const Word u = in.word("u");
                const Word q = in.word("q");
                const std::size_t n = in.number("n"), l = in.number("l");
                if (x.empty() || u.empty() || q.empty() || n < 2 || l < 1 || !is_theta_primitive(theta, x)
                    || !is_theta_palindrome(theta, q))
                    return outside();
                const BlockSet bs(theta, x);
                const auto signs = bs.block_signs(uteuqnu_word(theta, u, q, n, l));
                if (!signs || signs->size() < 2)
                    return outside();
                return checked(bs.in_plus(u) && bs.in_plus(q));
            }};
}

/// u^2 = q w1...wm cases: w theta-primitive, q a theta-palindrome with
/// |q| < |u|. Odd-only restricts m to odd values >= 3.
std::vector<Witness> square_cases(const Context& ctx, bool odd_only)
{
    std::vector<Witness> out;
    for (const auto& theta : ctx.thetas)
        for (const auto& w : theta_primitive_words(theta, ctx.bounds.max_x))
            for (const auto& signs : products(theta, w, odd_only ? 3 : 2, ctx.bounds)) {
                if (odd_only && signs.size() % 2 == 0)
                    continue;
                const Word ws = expand_signs(theta, w, signs);
                // The second u is a suffix of ws, which fixes u and q.
                for (std::size_t len = 1; len < ws.size(); ++len) {
                    if ((len + ws.size()) % 2 != 0)
                        continue;
                    const Word u = ws.suffix((len + ws.size()) / 2);
                    const Word q = u.prefix(len);
                    if (is_theta_palindrome(theta, q) && u + u == q + ws)
                        out.push_back(WitnessBuilder(theta).word("w", w).signs("w_signs", signs).word("u", u).word("q", q));
                }
            }
    return out;
}

struct SquareCase {
    Word w;
    Word u;
    Word q;
    std::size_t m;
};

std::optional<SquareCase> read_square(const Witness& wit, std::size_t min_m)
{
    WitnessReader in(wit);
    const auto& theta = in.theta();
    SquareCase c{in.word("w"), in.word("u"), in.word("q"), 0};
    const Signs signs = in.signs("w_signs");
    c.m = signs.size();
    if (c.w.empty() || c.u.empty() || c.q.empty() || c.m < min_m || !is_theta_primitive(theta, c.w)
        || !is_theta_palindrome(theta, c.q) || c.q.size() >= c.u.size())
        return std::nullopt;
    if (c.u + c.u != c.q + expand_signs(theta, c.w, signs))
        return std::nullopt;
    return c;
}

PropertyDef u2qwm2()
{
    return {{"P39-u2qwm2",
             "u^2 = q w1...wm, m >= 2, |q| < |u|, q a theta-palindrome: u, q in {w, theta(w)}+ or u = qr with r a "
             "non-empty theta-palindrome"},
            [](const Context& ctx) { return square_cases(ctx, false); },
            [](const Witness& wit) {
                const auto c = read_square(wit, 2);
                if (!c)
                    return outside();
                const WitnessReader in(wit);
                const auto& theta = in.theta();
                const BlockSet bs(theta, c->w);
                const Word r = c->u.suffix(c->u.size() - c->q.size());
                return checked((bs.in_plus(c->u) && bs.in_plus(c->q)) || is_theta_palindrome(theta, r));
            }};
}

PropertyDef u2qwm3odd()
{
    return {{"P40-u2qwm3odd",
             "u^2 = q w1...wm with m >= 3 odd, |q| < |u|, q a theta-palindrome: w = theta(w), and rho(u) = rho(q) = w "
             "when |u| >= 2|q|"},
            [](const Context& ctx) { return square_cases(ctx, true); },
            [](const Witness& wit) {
                const auto c = read_square(wit, 3);
                if (!c || c->m % 2 == 0)
                    return outside();
                const WitnessReader in(wit);
                const auto& theta = in.theta();
                bool ok = is_theta_palindrome(theta, c->w);
                if (c->u.size() >= 2 * c->q.size())
                    ok = ok && primitive_root(c->u).root == c->w && primitive_root(c->q).root == c->w;
                return checked(ok);
            }};
}

PropertyDef exls4()
{
    return {{"P41-exls4",
             "for l in {4, 5} and n, m in {3, 4}, every solution has u, v, w in {t, theta(t)}+ for one t"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (std::size_t l : {4, 5})
                    for (const auto& inst : solutions(ctx, l))
                        out.push_back(instance_witness(inst));
                return out;
            },
            [](const Witness& w) {
                const auto inst = satisfied_instance(w);
                if (!inst)
                    return outside();
                const auto t = inst->triple();
                if (t.l < 4 || t.n < 3 || t.m < 3)
                    return outside();
                return checked(has_witness(*inst));
            }};
}

PropertyDef uu_theta_u()
{
    return {{"P42-uu-theta-u",
             "u u theta(u) = v1...vn w1...wm with n, m >= 3 and n|v| > 2|u| forces u, v, w in {t, theta(t)}+"},
            [](const Context& ctx) {
                std::vector<Witness> out;
                for (const auto& inst : solutions(ctx, 3))
                    if (inst.lhs() == inst.u + inst.u + inst.theta(inst.u)
                        && inst.pattern.v.size() * inst.v.size() > 2 * inst.u.size())
                        out.push_back(instance_witness(inst));
                return out;
            },
            [](const Witness& w) {
                const auto inst = satisfied_instance(w);
                if (!inst)
                    return outside();
                const auto t = inst->triple();
                if (t.l != 3 || t.n < 3 || t.m < 3 || inst->lhs() != inst->u + inst->u + inst->theta(inst->u)
                    || t.n * inst->v.size() <= 2 * inst->u.size())
                    return outside();
                return checked(has_witness(*inst));
            }};
}

} // namespace

void add_exls_properties(std::vector<PropertyDef>& out)
{
    out.push_back(uv_length());
    out.push_back(setting_property({"P27-two-enough",
                                    "in the l = 4 setting, u, v in {t, theta(t)}+ implies w in {t, theta(t)}+"},
                                   true, two_enough));
    out.push_back(setting_property({"P28-trivial", "in the l = 4 setting, a trivial instance has a common theta-root"},
                                   true, [](const ExlsInstance& inst) { return !is_trivial_instance(inst) || has_witness(inst); }));
    out.push_back(setting_property({"P29-longenough", "in the l = 4 setting, n|v| >= 2|u| + |v| makes the instance trivial"},
                                   true, [](const ExlsInstance& inst) {
                                       return inst.pattern.v.size() * inst.v.size() < 2 * inst.u.size() + inst.v.size()
                                           || is_trivial_instance(inst);
                                   }));
    out.push_back(ccks());
    out.push_back(setting_property({"P31-different-length", "in the l = 4 setting, a non-trivial instance has |v| != |w|"},
                                   true, [](const ExlsInstance& inst) {
                                       return is_trivial_instance(inst) || inst.v.size() != inst.w.size();
                                   }));
    out.push_back(setting_property({"P32-claim-nontrivial",
                                    "in the l = 4 setting, a non-trivial instance has u3 u4 = q w1...wm for a non-empty "
                                    "theta-palindrome q"},
                                   true, claim_non_trivial));
    out.push_back(pali_pref_pali());
    out.push_back(setting_property({"P34-claim-u3nequ4",
                                    "in the l = 4 setting, a non-trivial instance with u3 != u4 has all wi = w and "
                                    "u3 u4 in Suff(w+)"},
                                   true, claim_u3_ne_u4));
    out.push_back(rt_primitive(false));
    out.push_back(rt_primitive(true));
    out.push_back(zp_nonprime());
    out.push_back(uteuqnu());
    out.push_back(u2qwm2());
    out.push_back(u2qwm3odd());
    out.push_back(exls4());
    out.push_back(uu_theta_u());
}

} // namespace pseudoprim::detail
