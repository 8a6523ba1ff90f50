#include "pseudoprim/primitivity.hpp"

#include "pseudoprim/errors.hpp"

namespace pseudoprim {

std::string format_signs(const Signs& signs)
{
    std::string out;
    for (Sign s : signs)
        out.push_back(s == Sign::plus ? '+' : '-');
    return out;
}

std::string bracket_signs(const Signs& signs)
{
    std::string out = "[";
    for (std::size_t i = 0; i < signs.size(); ++i) {
        if (i)
            out.push_back(',');
        out.push_back(signs[i] == Sign::plus ? '+' : '-');
    }
    out.push_back(']');
    return out;
}

Signs parse_signs(std::string_view text)
{
    Signs out;
    for (char c : text) {
        require(c == '+' || c == '-', "sign strings may only contain '+' and '-'");
        out.push_back(c == '+' ? Sign::plus : Sign::minus);
    }
    return out;
}

Word expand_signs(const Involution& theta, const Word& t, const Signs& signs)
{
    const Word tt = theta(t);
    Word out(t.alphabet_size());
    for (Sign s : signs)
        out += s == Sign::plus ? t : tt;
    return out;
}

PrimitiveRoot primitive_root(const Word& w)
{
    require(!w.empty(), "primitive_root: the empty word has no primitive root");
    const auto s = w.view();
    const std::size_t n = s.size();
    // fail[i] = length of the longest proper border of s[0..i).
    std::vector<std::size_t> fail(n + 1, 0);
    for (std::size_t i = 1, k = 0; i < n; ++i) {
        while (k > 0 && s[i] != s[k])
            k = fail[k];
        if (s[i] == s[k])
            ++k;
        fail[i + 1] = k;
    }
    const std::size_t period = n - fail[n];
    if (n % period != 0)
        return {w, 1};
    return {w.prefix(period), n / period};
}

bool is_primitive(const Word& w)
{
    return primitive_root(w).exponent == 1;
}

std::optional<Decomposition> decompose_over(const Involution& theta, const Word& t, const Word& w)
{
    require(!t.empty(), "decompose_over: root must be non-empty");
    check_alphabet(theta, t);
    check_alphabet(theta, w);
    const std::size_t d = t.size();
    if (w.size() % d != 0 || w.empty())
        return std::nullopt;
    const Word tt = theta(t);
    const bool pal = t == tt;
    const auto s = w.view();
    if (s.substr(0, d) != t.view())
        return std::nullopt;
    Decomposition out{t, {}};
    for (std::size_t pos = 0; pos < s.size(); pos += d) {
        auto block = s.substr(pos, d);
        if (block == t.view())
            out.signs.push_back(Sign::plus);
        else if (!pal && block == tt.view())
            out.signs.push_back(Sign::minus);
        else
            return std::nullopt;
    }
    return out;
}

Decomposition theta_primitive_root(const Involution& theta, const Word& w)
{
    require(!w.empty(), "theta_primitive_root: the empty word has no root");
    check_alphabet(theta, w);
    const std::size_t n = w.size();
    for (std::size_t d = 1; d <= n; ++d) {
        if (n % d != 0)
            continue;
        if (auto dec = decompose_over(theta, w.prefix(d), w))
            return *dec;
    }
    ensure(false, "theta_primitive_root: the trivial decomposition was not found");
    return {};
}

bool is_theta_primitive(const Involution& theta, const Word& w)
{
    return theta_primitive_root(theta, w).root.size() == w.size();
}

std::vector<Word> conjugates(const Word& w)
{
    require(!w.empty(), "conjugates: word must be non-empty");
    std::vector<Word> out;
    out.reserve(w.size());
    for (std::size_t i = 0; i < w.size(); ++i)
        out.push_back(w.suffix(w.size() - i) + w.prefix(i));
    return out;
}

// ---------------------------------------------------------------------------
// BlockSet

BlockSet::BlockSet(const Involution& theta, Word x)
    : theta_(theta)
    , x_(std::move(x))
{
    require(!x_.empty(), "block set generator must be non-empty");
    check_alphabet(theta_, x_);
    tx_ = theta_(x_);
}

std::optional<Sign> BlockSet::block_at(const Word& w, std::size_t pos) const
{
    const std::size_t d = x_.size();
    if (pos + d > w.size())
        return std::nullopt;
    auto block = w.view().substr(pos, d);
    if (block == x_.view())
        return Sign::plus;
    if (block == tx_.view())
        return Sign::minus;
    return std::nullopt;
}

std::optional<Signs> BlockSet::block_signs(const Word& w) const
{
    check_same_alphabet(x_, w);
    const std::size_t d = x_.size();
    if (w.size() % d != 0)
        return std::nullopt;
    Signs out;
    out.reserve(w.size() / d);
    for (std::size_t pos = 0; pos < w.size(); pos += d) {
        auto s = block_at(w, pos);
        if (!s)
            return std::nullopt;
        out.push_back(*s);
    }
    return out;
}

bool BlockSet::is_block_prefix(const Word& w) const
{
    check_same_alphabet(x_, w);
    const std::size_t d = x_.size();
    const std::size_t full = w.size() / d * d;
    for (std::size_t pos = 0; pos < full; pos += d)
        if (!block_at(w, pos))
            return false;
    auto rest = w.view().substr(full);
    return x_.view().starts_with(rest) || tx_.view().starts_with(rest);
}

bool BlockSet::is_block_suffix(const Word& w) const
{
    check_same_alphabet(x_, w);
    const std::size_t d = x_.size();
    const std::size_t head = w.size() % d;
    for (std::size_t pos = head; pos < w.size(); pos += d)
        if (!block_at(w, pos))
            return false;
    auto rest = w.view().substr(0, head);
    return x_.view().ends_with(rest) || tx_.view().ends_with(rest);
}

} // namespace pseudoprim
