#include "pseudoprim/equations.hpp"

#include "pseudoprim/errors.hpp"

#include <numeric>
#include <set>
#include <string>
#include <tuple>

namespace pseudoprim {

namespace {

void require_non_empty(const Word& u, const Word& v, const char* what)
{
    require(!u.empty() && !v.empty(), std::string(what) + ": words must be non-empty");
}

} // namespace

std::size_t fw_threshold(const Word& u, const Word& v)
{
    require_non_empty(u, v, "fw_threshold");
    return u.size() + v.size() - std::gcd(u.size(), v.size());
}

std::size_t ext_fw_gcd_threshold(const Word& u, const Word& v)
{
    require_non_empty(u, v, "ext_fw_gcd_threshold");
    require(u.size() >= v.size(), "ext_fw_gcd_threshold: expects |u| >= |v|");
    return 2 * u.size() + v.size() - std::gcd(u.size(), v.size());
}

std::size_t ext_fw_lcm_threshold(const Word& u, const Word& v)
{
    require_non_empty(u, v, "ext_fw_lcm_threshold");
    return std::lcm(u.size(), v.size());
}

std::optional<Word> common_theta_root(const Involution& theta, std::span<const Word> words)
{
    require(!words.empty(), "common_theta_root: no words given");
    std::size_t g = 0;
    for (const auto& w : words) {
        require(!w.empty(), "common_theta_root: words must be non-empty");
        check_alphabet(theta, w);
        g = std::gcd(g, w.size());
    }
    for (std::size_t d = 1; d <= g; ++d) {
        if (g % d != 0)
            continue;
        BlockSet blocks(theta, words.front().prefix(d));
        bool all_in = true;
        for (const auto& w : words)
            all_in = all_in && blocks.in_plus(w);
        if (!all_in)
            continue;
        ensure(is_theta_primitive(theta, blocks.x()), "common_theta_root: shortest common root is not theta-primitive");
        return std::min(blocks.x(), blocks.theta_x());
    }
    return std::nullopt;
}

std::optional<Word> common_theta_root(const Involution& theta, const Word& u, const Word& v)
{
    require_non_empty(u, v, "common_theta_root");
    const Word words[] = {u, v};
    return common_theta_root(theta, words);
}

// ---------------------------------------------------------------------------
// theta-commutation

void validate(const Involution& theta, const ThetaCommuteParams& p)
{
    check_alphabet(theta, p.r);
    check_alphabet(theta, p.t);
    require(!p.t.empty(), "theta-commutation parameters: t must be non-empty");
    require(p.j >= 1, "theta-commutation parameters: j must be at least 1");
    require(!p.r.empty() || p.i >= 1, "theta-commutation parameters: x = r(tr)^i would be empty");
    require(is_theta_palindrome(theta, p.r), "theta-commutation parameters: r is not a theta-palindrome");
    require(is_theta_palindrome(theta, p.t), "theta-commutation parameters: t is not a theta-palindrome");
    require(is_primitive(p.r + p.t), "theta-commutation parameters: rt is not primitive");
}

std::pair<Word, Word> theta_commute_parametrize(const Involution& theta, const ThetaCommuteParams& p)
{
    validate(theta, p);
    const Word tr = p.t + p.r;
    Word x = p.r + tr.power(p.i);
    Word y = tr.power(p.j);
    ensure(x + y == theta(y) + x, "theta_commute_parametrize: xy != theta(y)x");
    return {std::move(x), std::move(y)};
}

ThetaCommuteParams theta_commute_extract(const Involution& theta, const Word& x, const Word& y)
{
    require_non_empty(x, y, "theta_commute_extract");
    check_alphabet(theta, x);
    check_alphabet(theta, y);
    require(x + y == theta(y) + x, "theta_commute_extract: xy = theta(y)x does not hold");

    const Word tr = primitive_root(y).root;
    const std::size_t period = tr.size();
    const std::size_t rest = x.size() % period;
    ThetaCommuteParams p;
    p.r = x.prefix(rest);
    p.t = tr.prefix(period - rest);
    p.i = x.size() / period;
    p.j = y.size() / period;
    ensure(tr.suffix(rest) == p.r, "theta_commute_extract: r is not a suffix of the root of y");

    auto [x2, y2] = theta_commute_parametrize(theta, p);
    ensure(x2 == x && y2 == y, "theta_commute_extract: parameters do not reproduce the input");
    return p;
}

std::vector<ThetaCommuteParams> theta_commute_params_up_to(const Involution& theta, std::size_t budget)
{
    std::vector<ThetaCommuteParams> out;
    if (budget < 2)
        return out;
    std::vector<Word> rs{Word(theta.alphabet_size())};
    for (auto& r : theta_palindromes_up_to(theta, budget))
        rs.push_back(std::move(r));
    const auto ts = theta_palindromes_up_to(theta, budget);
    for (const auto& r : rs) {
        for (const auto& t : ts) {
            const std::size_t period = r.size() + t.size();
            // |x| + |y| = |r| + (i + j)|rt| with j >= 1.
            if (r.size() + period > budget || !is_primitive(r + t))
                continue;
            for (std::size_t j = 1; r.size() + j * period <= budget; ++j)
                for (std::size_t i = r.empty() ? 1 : 0; r.size() + (i + j) * period <= budget; ++i)
                    out.push_back({r, t, i, j});
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// shared prefixes of product languages

namespace {

class PrefixSearch {
public:
    PrefixSearch(const ProductLanguage& left, const ProductLanguage& right, std::size_t length)
        : sides_{&left, &right}
        , length_(length)
    {
    }

    bool run() { return extend(0, "", 0, false, false); }

    std::vector<std::size_t> path[2];

private:
    const std::vector<Word>& choices(int side, bool started) const
    {
        return started ? sides_[side]->rest : sides_[side]->first;
    }

    // `hang` holds the letters of side `ahead` not yet matched by the other
    // side; `matched` letters agree so far.
    bool extend(int ahead, const std::string& hang, std::size_t matched, bool left_started, bool right_started)
    {
        if (matched >= length_)
            return true;
        auto key = std::make_tuple(ahead, hang, matched, left_started, right_started);
        if (failed_.count(key))
            return false;

        const int side = hang.empty() ? 0 : 1 - ahead;
        const bool started = side == 0 ? left_started : right_started;
        const bool now_left = side == 0 ? true : left_started;
        const bool now_right = side == 1 ? true : right_started;
        const auto& options = choices(side, started);
        for (std::size_t idx = 0; idx < options.size(); ++idx) {
            const auto block = options[idx].view();
            require(!block.empty(), "shared_product_prefix: factors must be non-empty");
            path[side].push_back(idx);
            if (hang.empty()) {
                if (extend(side, std::string(block), matched, now_left, now_right))
                    return true;
            } else {
                const std::size_t k = std::min(hang.size(), block.size());
                const std::size_t need = length_ - matched;
                if (need <= k) {
                    if (block.substr(0, need) == std::string_view(hang).substr(0, need))
                        return true;
                } else if (block.substr(0, k) == std::string_view(hang).substr(0, k)) {
                    bool found;
                    if (block.size() < hang.size())
                        found = extend(ahead, hang.substr(k), matched + k, now_left, now_right);
                    else
                        found = extend(side, std::string(block.substr(k)), matched + k, now_left, now_right);
                    if (found)
                        return true;
                }
            }
            path[side].pop_back();
        }
        failed_.insert(key);
        return false;
    }

    const ProductLanguage* sides_[2];
    std::size_t length_;
    std::set<std::tuple<int, std::string, std::size_t, bool, bool>> failed_;
};

Word expand_path(const ProductLanguage& lang, const std::vector<std::size_t>& path)
{
    Word out(lang.first.front().alphabet_size());
    for (std::size_t k = 0; k < path.size(); ++k)
        out += k == 0 ? lang.first[path[k]] : lang.rest[path[k]];
    return out;
}

} // namespace

std::optional<SharedPrefix> shared_product_prefix(const ProductLanguage& left,
                                                  const ProductLanguage& right,
                                                  std::size_t length)
{
    require(!left.first.empty() && !right.first.empty(), "shared_product_prefix: empty generator set");
    PrefixSearch search(left, right, length);
    if (length == 0)
        return SharedPrefix{{}, {}, Word(left.first.front().alphabet_size())};
    if (!search.run())
        return std::nullopt;
    SharedPrefix out{search.path[0], search.path[1], {}};
    Word a = expand_path(left, out.left_factors);
    Word b = expand_path(right, out.right_factors);
    ensure(a.size() >= length && b.size() >= length && a.prefix(length) == b.prefix(length),
           "shared_product_prefix: witness products disagree");
    out.prefix = a.prefix(length);
    return out;
}

} // namespace pseudoprim
