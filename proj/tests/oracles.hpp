// oracles.hpp -- slow, obviously-correct reference implementations on plain
// strings, used to derive expected values independently of the library.

#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <vector>

namespace oracle {

/// An antimorphic involution given by its image string over 'a'...: the
/// letter 'a' + i maps to image[i].
struct Theta {
    std::string image;

    char map(char c) const { return image[static_cast<std::size_t>(c - 'a')]; }

    std::string operator()(const std::string& s) const
    {
        std::string out(s.rbegin(), s.rend());
        for (auto& c : out)
            c = map(c);
        return out;
    }
};

inline Theta mirror() { return {"ab"}; }
inline Theta swap() { return {"ba"}; }

/// Every word over the first k letters with the given length.
inline std::vector<std::string> words(std::size_t k, std::size_t length)
{
    std::vector<std::string> out{""};
    for (std::size_t i = 0; i < length; ++i) {
        std::vector<std::string> next;
        for (const auto& w : out)
            for (std::size_t c = 0; c < k; ++c)
                next.push_back(w + static_cast<char>('a' + c));
        out = std::move(next);
    }
    return out;
}

inline std::vector<std::string> words_up_to(std::size_t k, std::size_t max_length)
{
    std::vector<std::string> out;
    for (std::size_t n = 1; n <= max_length; ++n)
        for (auto& w : words(k, n))
            out.push_back(std::move(w));
    return out;
}

inline std::string power(const std::string& s, std::size_t n)
{
    std::string out;
    for (std::size_t i = 0; i < n; ++i)
        out += s;
    return out;
}

/// Shortest d dividing |s| with s a power of its prefix of length d.
inline std::string primitive_root(const std::string& s)
{
    for (std::size_t d = 1; d <= s.size(); ++d)
        if (s.size() % d == 0 && power(s.substr(0, d), s.size() / d) == s)
            return s.substr(0, d);
    return s;
}

inline bool is_primitive(const std::string& s) { return primitive_root(s) == s; }

/// Membership in {x, tx}* by dynamic programming over positions.
inline bool in_star(const std::string& x, const std::string& tx, const std::string& s)
{
    std::vector<bool> reach(s.size() + 1, false);
    reach[0] = true;
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (!reach[i])
            continue;
        for (const auto* b : {&x, &tx})
            if (!b->empty() && s.compare(i, b->size(), *b) == 0)
                reach[i + b->size()] = true;
    }
    return reach[s.size()];
}

inline bool in_plus(const std::string& x, const std::string& tx, const std::string& s)
{
    return !s.empty() && in_star(x, tx, s);
}

/// The shortest t with s in t{t, theta(t)}*, trying every prefix length.
inline std::string theta_primitive_root(const Theta& theta, const std::string& s)
{
    for (std::size_t d = 1; d <= s.size(); ++d) {
        if (s.size() % d != 0)
            continue;
        const std::string t = s.substr(0, d);
        if (in_star(t, theta(t), s.substr(d)))
            return t;
    }
    return s;
}

inline bool is_theta_primitive(const Theta& theta, const std::string& s)
{
    return theta_primitive_root(theta, s) == s;
}

/// Shortest t (returned as min(t, theta(t))) with every word in {t, theta(t)}+.
inline std::optional<std::string> common_theta_root(const Theta& theta, const std::vector<std::string>& ws)
{
    std::size_t shortest = ws.front().size();
    for (const auto& w : ws)
        shortest = std::min(shortest, w.size());
    for (std::size_t d = 1; d <= shortest; ++d) {
        for (const auto& cand : words(theta.image.size(), d)) {
            const std::string tc = theta(cand);
            if (std::all_of(ws.begin(), ws.end(), [&](const auto& w) { return in_plus(cand, tc, w); }))
                return std::min(cand, tc);
        }
    }
    return std::nullopt;
}

inline bool is_palindrome(const Theta& theta, const std::string& s) { return theta(s) == s; }

} // namespace oracle
