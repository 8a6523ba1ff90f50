#include "pseudoprim/exls.hpp"

#include "pseudoprim/errors.hpp"
#include "pseudoprim/parallel.hpp"

#include <algorithm>

namespace pseudoprim {

namespace {

Signs repeat(Sign s, std::size_t count)
{
    return Signs(count, s);
}

Signs concat(Signs a, const Signs& b)
{
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// All sign sequences of the given length in lexicographic order, with the
/// position `fixed` (if any) held at plus.
std::vector<Signs> sign_sequences(std::size_t length, std::optional<std::size_t> fixed)
{
    std::vector<Signs> out;
    const std::size_t free = length - (fixed ? 1 : 0);
    for (std::size_t mask = 0; mask < (std::size_t{1} << free); ++mask) {
        Signs s;
        std::size_t bit = free;
        for (std::size_t pos = 0; pos < length; ++pos) {
            if (fixed && pos == *fixed) {
                s.push_back(Sign::plus);
                continue;
            }
            --bit;
            s.push_back((mask >> bit) & 1U ? Sign::minus : Sign::plus);
        }
        out.push_back(std::move(s));
    }
    return out;
}

void require_triple(const Triple& t)
{
    require(t.l >= 2 && t.n >= 2 && t.m >= 2, "exponents l, n, m must all be at least 2");
}

const Involution& mirror2()
{
    static const Involution theta = Involution::mirror(2);
    return theta;
}

ExlsInstance checked_example(ExlsInstance inst, const std::string& name)
{
    ensure(exls_holds(inst), name + ": generated instance does not satisfy its equation");
    ensure(!theta_periodicity_witness(inst.theta, inst.u, inst.v, inst.w).has_value(),
           name + ": generated instance has a common theta-root");
    return inst;
}

} // namespace

std::string to_string(const Triple& t)
{
    return "(" + std::to_string(t.l) + "," + std::to_string(t.n) + "," + std::to_string(t.m) + ")";
}

bool SignPattern::is_normalized() const
{
    return !u.empty() && !v.empty() && !w.empty() && u.front() == Sign::plus && v.front() == Sign::plus
        && w.back() == Sign::plus;
}

Word ExlsInstance::lhs() const
{
    return expand_signs(theta, u, pattern.u);
}

Word ExlsInstance::rhs() const
{
    return expand_signs(theta, v, pattern.v) + expand_signs(theta, w, pattern.w);
}

bool exls_holds(const ExlsInstance& inst)
{
    require(!inst.u.empty() && !inst.v.empty() && !inst.w.empty(), "exls_holds: u, v and w must be non-empty");
    require(!inst.pattern.u.empty() && !inst.pattern.v.empty() && !inst.pattern.w.empty(),
            "exls_holds: every sign sequence needs at least one entry");
    check_alphabet(inst.theta, inst.u);
    check_alphabet(inst.theta, inst.v);
    check_alphabet(inst.theta, inst.w);
    const auto t = inst.triple();
    if (t.l * inst.u.size() != t.n * inst.v.size() + t.m * inst.w.size())
        return false;
    return inst.lhs() == inst.rhs();
}

std::optional<Word> theta_periodicity_witness(const Involution& theta, const Word& u, const Word& v, const Word& w)
{
    require(!u.empty() && !v.empty() && !w.empty(), "theta_periodicity_witness: words must be non-empty");
    const Word words[] = {u, v, w};
    return common_theta_root(theta, words);
}

bool is_trivial_instance(const ExlsInstance& inst)
{
    require(inst.pattern.u.size() >= 2, "is_trivial_instance: needs l >= 2");
    require(exls_holds(inst), "is_trivial_instance: the equation does not hold");
    const std::size_t two_u = 2 * inst.u.size();
    if (two_u % inst.v.size() != 0)
        return false;
    const std::size_t i = two_u / inst.v.size();
    if (i > inst.pattern.v.size())
        return false;
    Signs head(inst.pattern.v.begin(), inst.pattern.v.begin() + static_cast<std::ptrdiff_t>(i));
    Signs u12(inst.pattern.u.begin(), inst.pattern.u.begin() + 2);
    return expand_signs(inst.theta, inst.u, u12) == expand_signs(inst.theta, inst.v, head);
}

std::vector<ExlsInstance> exls_solutions_for(const Involution& theta, const Triple& triple, const Word& v,
                                             std::size_t max_w_len)
{
    require_triple(triple);
    require(!v.empty(), "exls_solutions_for: v must be non-empty");
    check_alphabet(theta, v);
    const Word tv = theta(v);
    const bool v_pal = v == tv;
    const auto v_patterns = v_pal ? std::vector<Signs>{repeat(Sign::plus, triple.n)} : sign_sequences(triple.n, 0);

    std::vector<ExlsInstance> out;
    for (std::size_t wl = 1; wl <= max_w_len; ++wl) {
        const std::size_t total = triple.n * v.size() + triple.m * wl;
        if (total % triple.l != 0)
            continue;
        const std::size_t ul = total / triple.l;
        for (const auto& w : words_of_length(theta.alphabet_size(), wl)) {
            const Word tw = theta(w);
            const bool w_pal = w == tw;
            const auto w_patterns =
                w_pal ? std::vector<Signs>{repeat(Sign::plus, triple.m)} : sign_sequences(triple.m, triple.m - 1);
            for (const auto& vs : v_patterns) {
                const Word left = expand_signs(theta, v, vs);
                for (const auto& ws : w_patterns) {
                    const Word rhs = left + expand_signs(theta, w, ws);
                    const Word u = rhs.prefix(ul);
                    auto us = BlockSet(theta, u).block_signs(rhs);
                    if (!us)
                        continue;
                    out.push_back(ExlsInstance{theta, u, v, w, SignPattern{std::move(*us), vs, ws}});
                }
            }
        }
    }
    return out;
}

std::vector<ExlsInstance> exls_solutions(const Involution& theta, const Triple& triple, const SearchBounds& bounds,
                                         std::size_t jobs)
{
    require_triple(triple);
    const auto vs = words_up_to(theta.alphabet_size(), bounds.max_v_len);
    auto parts = parallel_map(vs.size(), jobs,
                              [&](std::size_t i) { return exls_solutions_for(theta, triple, vs[i], bounds.max_w_len); });
    std::vector<ExlsInstance> out;
    for (auto& part : parts)
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    return out;
}

std::vector<CounterexampleRecord> exls_search(const Involution& theta, const Triple& triple,
                                              const SearchBounds& bounds, std::size_t jobs)
{
    require_triple(triple);
    const std::string provenance = "search l=" + std::to_string(triple.l) + " n=" + std::to_string(triple.n)
        + " m=" + std::to_string(triple.m) + " max_v=" + std::to_string(bounds.max_v_len)
        + " max_w=" + std::to_string(bounds.max_w_len);
    const auto vs = words_up_to(theta.alphabet_size(), bounds.max_v_len);
    auto parts = parallel_map(vs.size(), jobs, [&](std::size_t i) {
        std::vector<CounterexampleRecord> found;
        for (auto& inst : exls_solutions_for(theta, triple, vs[i], bounds.max_w_len))
            if (!theta_periodicity_witness(theta, inst.u, inst.v, inst.w))
                found.push_back({std::move(inst), provenance});
        return found;
    });
    std::vector<CounterexampleRecord> out;
    for (auto& part : parts)
        out.insert(out.end(), std::make_move_iterator(part.begin()), std::make_move_iterator(part.end()));
    return out;
}

std::string to_string(Classification::Status status)
{
    return status == Classification::Status::counterexample_found ? "counterexample_found" : "none_within_bounds";
}

Classification classify_triple(std::span<const Involution> thetas, const Triple& triple, const SearchBounds& bounds,
                               std::size_t jobs)
{
    require(!thetas.empty(), "classify_triple: no involution given");
    Classification out{triple, bounds, Classification::Status::none_within_bounds, {}};
    for (const auto& theta : thetas) {
        auto found = exls_search(theta, triple, bounds, jobs);
        out.records.insert(out.records.end(), std::make_move_iterator(found.begin()),
                           std::make_move_iterator(found.end()));
    }
    if (!out.records.empty())
        out.status = Classification::Status::counterexample_found;
    return out;
}

// ---------------------------------------------------------------------------
// example families

ExlsInstance make_ls2(std::size_t n, std::size_t m)
{
    require(n >= 2, "ls2: n must be at least 2");
    require(m >= 1, "ls2: m must be at least 1");
    const Word a = word("a");
    const Word b = word("b");
    const Word v = a.power(2 * m) + b.power(2);
    const Word w = word("aa");
    const Word u = n % 2 == 0 ? v.power(n / 2) + a.power(m) : v.power((n - 1) / 2) + a.power(2 * m) + b;
    return checked_example(
        {mirror2(), u, v, w, {{Sign::plus, Sign::minus}, repeat(Sign::plus, n), repeat(Sign::plus, m)}}, "ls2");
}

ExlsInstance make_ls33m(std::size_t m)
{
    require(m >= 2, "ls33m: m must be at least 2");
    const Word abb = word("abb");
    const Word ab = word("ab");
    const Word u = abb.power(2 * m - 1) + ab;
    const Word v = abb.power(m - 1) + ab;
    const Word w = word("bba").power(3);
    return checked_example({mirror2(), u, v, w,
                            {{Sign::plus, Sign::plus, Sign::minus}, {Sign::plus, Sign::minus, Sign::minus},
                             repeat(Sign::plus, m)}},
                           "ls33m");
}

ExlsInstance make_ls33shift(std::size_t i, std::size_t j)
{
    const std::size_t s = i + j + 1;
    const Word ab = word("ab");
    const Word ba = word("ba");
    const Word b = word("b");
    const Word u = ab.power(s) + ba.power(2 * s) + b + ab.power(j);
    const Word v = ab.power(s) + ba.power(i + 2 * j + 1) + b;
    return checked_example({mirror2(), u, v, ab,
                            {{Sign::plus, Sign::minus, Sign::minus}, repeat(Sign::plus, 3),
                             concat(repeat(Sign::plus, 2 * s), repeat(Sign::minus, s))}},
                           "ls33shift");
}

ExlsInstance make_ls34even(std::size_t i)
{
    require(i >= 1, "ls34even: i must be at least 1");
    const Word a = word("a");
    const Word ba3 = word("baaa");
    const Word a3b = word("aaab");
    const Word u = a.power(4) + ba3.power(i) + a3b.power(i);
    const Word v = a.power(4) + ba3.power(i - 1) + word("baa");
    return checked_example({mirror2(), u, v, ba3,
                            {repeat(Sign::plus, 3), {Sign::plus, Sign::plus, Sign::minus, Sign::minus},
                             concat(repeat(Sign::plus, i), repeat(Sign::minus, i))}},
                           "ls34even");
}

const std::map<std::string, std::vector<std::string>>& example_families()
{
    static const std::map<std::string, std::vector<std::string>> families{
        {"ls2", {"n", "m"}},
        {"ls33m", {"m"}},
        {"ls33shift", {"i", "j"}},
        {"ls34even", {"i"}},
    };
    return families;
}

ExlsInstance gen_example(const std::string& name, const std::map<std::string, std::int64_t>& params)
{
    const auto& families = example_families();
    auto it = families.find(name);
    require(it != families.end(), "unknown example family '" + name + "'");
    for (const auto& [key, value] : params) {
        require(std::find(it->second.begin(), it->second.end(), key) != it->second.end(),
                name + ": unexpected parameter '" + key + "'");
        require(value >= 0, name + ": parameter '" + key + "' must be non-negative");
    }
    auto get = [&](const std::string& key) {
        auto p = params.find(key);
        require(p != params.end(), name + ": missing parameter '" + key + "'");
        return static_cast<std::size_t>(p->second);
    };
    if (name == "ls2")
        return make_ls2(get("n"), get("m"));
    if (name == "ls33m")
        return make_ls33m(get("m"));
    if (name == "ls33shift")
        return make_ls33shift(get("i"), get("j"));
    return make_ls34even(get("i"));
}

StructuredWord gen_structured_family(const std::string& name, const Involution& theta, const Word& r, const Word& t,
                                     std::size_t i, std::size_t j, std::size_t k, std::size_t n_or_m)
{
    require(name == "family1" || name == "family2" || name == "pz", "unknown structured family '" + name + "'");
    require(!r.empty() && !t.empty(), name + ": r and t must be non-empty");
    check_alphabet(theta, r);
    check_alphabet(theta, t);
    require(is_theta_palindrome(theta, r), name + ": r is not a theta-palindrome");
    require(is_theta_palindrome(theta, t), name + ": t is not a theta-palindrome");
    require(is_primitive(r + t), name + ": rt is not primitive");
    require(j >= 1, name + ": j must be at least 1");
    require(k >= 1, name + ": k must be at least 1");

    const Word tr = t + r;
    const Word rt = r + t;
    const Word head = r + tr.power(i); // r(tr)^i
    const Word trj = tr.power(j);

    if (name == "family1") {
        require(n_or_m >= 2, "family1: n must be at least 2");
        Word out = trj + (head.power(n_or_m) + trj).power(k);
        ensure(is_primitive(out), "family1: constructed word is not primitive");
        return {std::move(out), std::nullopt, std::nullopt};
    }
    if (name == "family2") {
        require(n_or_m >= 1, "family2: m must be at least 1");
        Word out = trj + (head.power(n_or_m) + trj).power(k - 1) + head.power(n_or_m - 1) + rt.power(j);
        ensure(is_primitive(out), "family2: constructed word is not primitive");
        return {std::move(out), std::nullopt, std::nullopt};
    }
    require(k >= 3, "pz: k must be at least 3");
    Word x = head.power(2) + trj;
    Word p = x.power(k - 1) + head;
    Word z = trj + head;
    ensure(p + z == x.power(k - 1) + theta(x), "pz: pz differs from x^{k-1} theta(x)");
    ensure(is_theta_palindrome(theta, p), "pz: p is not a theta-palindrome");
    ensure(z.size() < x.size(), "pz: z is not shorter than x");
    return {std::move(x), std::move(p), std::move(z)};
}

// ---------------------------------------------------------------------------
// prefix configurations

CcksStructure ccks_structure(const Involution& theta, const Word& u, Sign u2_sign, const Word& v,
                             const Signs& v_signs, std::size_t n)
{
    require(!u.empty() && !v.empty(), "ccks_structure: u and v must be non-empty");
    check_alphabet(theta, u);
    check_alphabet(theta, v);
    require(n >= 3, "ccks_structure: n must be at least 3");
    require(v_signs.size() == n, "ccks_structure: v_signs must have n entries");
    require(v_signs.front() == Sign::plus, "ccks_structure: the first v block must be v itself");
    require(is_theta_primitive(theta, v), "ccks_structure: v is not theta-primitive");
    require((n - 1) * v.size() < 2 * u.size() && 2 * u.size() < n * v.size(),
            "ccks_structure: need (n-1)|v| < 2|u| < n|v|");

    const Word tu = theta(u);
    const Word uu2 = u + (u2_sign == Sign::plus ? u : tu);
    const Word vprod = expand_signs(theta, v, v_signs);
    const bool prefix_ok = (uu2 + u).view().starts_with(vprod.view()) || (uu2 + tu).view().starts_with(vprod.view());
    require(prefix_ok, "ccks_structure: v_1 ... v_n is not a prefix of u u_2 u_3");

    const Word tv = theta(v);
    auto block_is = [&](std::size_t idx, const Word& expected) {
        return (v_signs[idx] == Sign::plus ? v : tv) == expected;
    };

    if (u2_sign == Sign::minus) {
        const std::size_t plen = 2 * u.size() - (n - 1) * v.size();
        CcksCase1 out{v.prefix(plen), v.suffix(v.size() - plen)};
        for (std::size_t idx = 1; idx < n; ++idx)
            ensure(block_is(idx, v), "ccks_structure: case 1 with a theta(v) block");
        ensure(!out.p.empty() && !out.q.empty(), "ccks_structure: case 1 with an empty factor");
        ensure(is_theta_palindrome(theta, out.p) && is_theta_palindrome(theta, out.q),
               "ccks_structure: case 1 factors are not theta-palindromes");
        ensure(u + tu == (out.p + out.q).power(n - 1) + out.p, "ccks_structure: case 1 re-substitution failed");
        return out;
    }

    ensure(n % 2 == 0, "ccks_structure: case 2 with odd n");
    const std::size_t half = n / 2;
    for (std::size_t idx = 1; idx < n; ++idx)
        ensure(block_is(idx, idx < half ? v : tv), "ccks_structure: case 2 block orientation");
    const Word lead = v.power(half - 1);
    ensure(u.view().starts_with(lead.view()), "ccks_structure: case 2 u does not start with v^{n/2-1}");
    const Word z = u.suffix(u.size() - lead.size());
    const Word x = v.prefix(v.size() - z.size());
    const Word y = v.suffix(2 * z.size() - v.size());
    ensure(x + y == theta(y) + x, "ccks_structure: case 2 derived words do not theta-commute");
    auto params = theta_commute_extract(theta, x, y);
    ensure(!params.r.empty(), "ccks_structure: case 2 with empty r");
    CcksCase2 out{params.r, params.t, params.i, params.j};

    const Word tr = out.t + out.r;
    const Word rt = out.r + out.t;
    const Word head = out.r + tr.power(out.i);
    ensure(v == head + rt.power(out.i + out.j) + out.r, "ccks_structure: case 2 re-substitution of v failed");
    ensure(u == lead + head + rt.power(out.j), "ccks_structure: case 2 re-substitution of u failed");
    return out;
}

} // namespace pseudoprim
