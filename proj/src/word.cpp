#include "pseudoprim/word.hpp"

#include "pseudoprim/errors.hpp"

#include <algorithm>
#include <functional>

namespace pseudoprim {

namespace {

constexpr std::string_view kEpsilon = "ε";

void check_alphabet_size(std::size_t size)
{
    require(size >= 1 && size <= kMaxAlphabetSize,
            "alphabet size must be between 1 and 26, got " + std::to_string(size));
}

} // namespace

// ---------------------------------------------------------------------------
// Alphabet

Alphabet::Alphabet(std::size_t size)
{
    check_alphabet_size(size);
    for (std::size_t i = 0; i < size; ++i)
        names_.push_back(static_cast<char>('a' + i));
}

Alphabet::Alphabet(std::size_t size, std::string names)
    : names_(std::move(names))
{
    check_alphabet_size(size);
    require(names_.size() == size, "alphabet needs exactly one name per letter");
    std::string sorted = names_;
    std::sort(sorted.begin(), sorted.end());
    require(std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end(),
            "alphabet letter names must be distinct");
}

std::optional<Letter> Alphabet::letter(char name) const
{
    auto pos = names_.find(name);
    if (pos == std::string::npos)
        return std::nullopt;
    return static_cast<Letter>(pos);
}

Word Alphabet::parse(std::string_view text) const
{
    Word result(size());
    if (text == kEpsilon)
        return result;
    for (char c : text) {
        auto l = letter(c);
        require(l.has_value(), std::string("letter '") + c + "' is not in the alphabet \"" + names_ + "\"");
        result.push_back(*l);
    }
    return result;
}

std::string Alphabet::format(const Word& w) const
{
    if (w.empty())
        return std::string(kEpsilon);
    return letters(w);
}

std::string Alphabet::letters(const Word& w) const
{
    require(w.alphabet_size() == size(), "word and alphabet sizes differ");
    std::string out;
    out.reserve(w.size());
    for (Letter l : w.view())
        out.push_back(names_[l]);
    return out;
}

// ---------------------------------------------------------------------------
// Word

Word::Word(std::size_t alphabet_size)
{
    check_alphabet_size(alphabet_size);
    alphabet_size_ = static_cast<std::uint8_t>(alphabet_size);
}

Word::Word(std::size_t alphabet_size, std::string_view letters)
    : Word(alphabet_size)
{
    for (char c : letters)
        require(static_cast<unsigned char>(c) < alphabet_size, "letter index out of range");
    letters_.assign(letters);
}

Word::Word(std::size_t alphabet_size, std::initializer_list<Letter> letters)
    : Word(alphabet_size)
{
    for (Letter l : letters)
        push_back(l);
}

Word Word::prefix(std::size_t length) const
{
    require(length <= size(), "prefix longer than the word");
    return slice(0, length);
}

Word Word::suffix(std::size_t length) const
{
    require(length <= size(), "suffix longer than the word");
    return slice(size() - length, length);
}

Word Word::slice(std::size_t pos, std::size_t length) const
{
    require(pos <= size() && length <= size() - pos, "slice out of range");
    Word out(alphabet_size_);
    out.letters_.assign(letters_, pos, length);
    return out;
}

Word Word::power(std::size_t exponent) const
{
    Word out(alphabet_size_);
    out.letters_.reserve(size() * exponent);
    for (std::size_t i = 0; i < exponent; ++i)
        out.letters_ += letters_;
    return out;
}

Word& Word::operator+=(const Word& other)
{
    check_same_alphabet(*this, other);
    letters_ += other.letters_;
    return *this;
}

Word& Word::push_back(Letter letter)
{
    require(letter < alphabet_size_, "letter index out of range");
    letters_.push_back(static_cast<char>(letter));
    return *this;
}

Word word(std::string_view text, std::size_t alphabet_size)
{
    return Alphabet(alphabet_size).parse(text);
}

std::string to_string(const Word& w)
{
    return Alphabet(w.alphabet_size()).format(w);
}

// ---------------------------------------------------------------------------
// Involution

Involution Involution::mirror(std::size_t alphabet_size)
{
    check_alphabet_size(alphabet_size);
    std::vector<Letter> map(alphabet_size);
    for (std::size_t i = 0; i < alphabet_size; ++i)
        map[i] = static_cast<Letter>(i);
    return Involution(std::move(map));
}

Involution::Involution(std::vector<Letter> letter_map)
    : letter_map_(std::move(letter_map))
{
    check_alphabet_size(letter_map_.size());
    for (std::size_t i = 0; i < letter_map_.size(); ++i) {
        require(letter_map_[i] < letter_map_.size(), "letter map image out of range");
        require(letter_map_[letter_map_[i]] == i, "letter map is not an involution");
    }
}

Involution Involution::parse(std::string_view spec, std::optional<std::size_t> alphabet_size)
{
    if (spec == "mirror")
        return mirror(alphabet_size.value_or(kDefaultAlphabetSize));
    require(!spec.empty(), "empty involution spec");
    require(!alphabet_size || *alphabet_size == spec.size(),
            "involution image \"" + std::string(spec) + "\" does not match alphabet size "
                + std::to_string(alphabet_size.value_or(0)));
    require(spec.size() <= kMaxAlphabetSize, "involution spec too long");
    std::vector<Letter> map;
    for (char c : spec) {
        require(c >= 'a' && static_cast<std::size_t>(c - 'a') < spec.size(),
                "involution image \"" + std::string(spec) + "\" names a letter outside the alphabet");
        map.push_back(static_cast<Letter>(c - 'a'));
    }
    return Involution(std::move(map));
}

std::vector<Involution> Involution::all(std::size_t alphabet_size)
{
    check_alphabet_size(alphabet_size);
    // Build matchings letter by letter: the smallest unassigned letter is
    // either fixed or paired with a larger unassigned one. Identity comes first.
    std::vector<Involution> out;
    std::vector<int> map(alphabet_size, -1);
    std::function<void()> extend = [&]() {
        auto it = std::find(map.begin(), map.end(), -1);
        if (it == map.end()) {
            out.emplace_back(std::vector<Letter>(map.begin(), map.end()));
            return;
        }
        auto i = static_cast<std::size_t>(it - map.begin());
        map[i] = static_cast<int>(i);
        extend();
        for (std::size_t j = i + 1; j < alphabet_size; ++j) {
            if (map[j] != -1)
                continue;
            map[i] = static_cast<int>(j);
            map[j] = static_cast<int>(i);
            extend();
            map[j] = -1;
        }
        map[i] = -1;
    };
    extend();
    return out;
}

Word Involution::operator()(const Word& w) const
{
    check_alphabet(*this, w);
    Word out(w.alphabet_size());
    out.letters_.resize(w.size());
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i)
        out.letters_[i] = static_cast<char>(letter_map_[w[n - 1 - i]]);
    return out;
}

bool Involution::is_mirror() const
{
    for (std::size_t i = 0; i < letter_map_.size(); ++i)
        if (letter_map_[i] != i)
            return false;
    return true;
}

std::string Involution::spec() const
{
    std::string out;
    for (Letter l : letter_map_)
        out.push_back(static_cast<char>('a' + l));
    return out;
}

std::string Involution::name() const
{
    return is_mirror() ? "mirror" : spec();
}

// ---------------------------------------------------------------------------
// Free functions

void check_same_alphabet(const Word& u, const Word& v)
{
    require(u.alphabet_size() == v.alphabet_size(), "words are over different alphabets");
}

void check_alphabet(const Involution& theta, const Word& w)
{
    require(theta.alphabet_size() == w.alphabet_size(),
            "involution and word are over different alphabets");
}

Word apply_involution(const Involution& theta, const Word& w)
{
    return theta(w);
}

bool is_theta_palindrome(const Involution& theta, const Word& w)
{
    check_alphabet(theta, w);
    const std::size_t n = w.size();
    for (std::size_t i = 0; i < n; ++i)
        if (w[i] != theta(w[n - 1 - i]))
            return false;
    return true;
}

std::size_t longest_common_prefix(const Word& u, const Word& v)
{
    check_same_alphabet(u, v);
    auto [a, b] = std::mismatch(u.begin(), u.end(), v.begin(), v.end());
    return static_cast<std::size_t>(a - u.begin());
}

std::vector<std::size_t> occurrences(const Word& pattern, const Word& text)
{
    check_same_alphabet(pattern, text);
    require(!pattern.empty(), "occurrences: pattern must be non-empty");
    std::vector<std::size_t> out;
    const auto hay = text.view();
    const auto needle = pattern.view();
    for (auto pos = hay.find(needle); pos != std::string_view::npos; pos = hay.find(needle, pos + 1))
        out.push_back(pos);
    return out;
}

std::vector<Word> words_of_length(std::size_t alphabet_size, std::size_t length)
{
    check_alphabet_size(alphabet_size);
    std::vector<Word> out;
    std::string digits(length, '\0');
    while (true) {
        out.emplace_back(alphabet_size, digits);
        std::size_t i = length;
        while (i > 0 && static_cast<std::size_t>(digits[i - 1]) + 1 == alphabet_size) {
            digits[i - 1] = 0;
            --i;
        }
        if (i == 0)
            break;
        ++digits[i - 1];
    }
    return out;
}

std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_length)
{
    std::vector<Word> out;
    for (std::size_t len = 1; len <= max_length; ++len) {
        auto layer = words_of_length(alphabet_size, len);
        out.insert(out.end(), std::make_move_iterator(layer.begin()), std::make_move_iterator(layer.end()));
    }
    return out;
}

std::vector<Word> theta_palindromes_up_to(const Involution& theta, std::size_t max_length)
{
    std::vector<Word> out;
    for (std::size_t len = 1; len <= max_length; ++len)
        for (auto& w : words_of_length(theta.alphabet_size(), len))
            if (is_theta_palindrome(theta, w))
                out.push_back(std::move(w));
    return out;
}

} // namespace pseudoprim
