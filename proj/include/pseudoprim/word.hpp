// word.hpp -- alphabets, words and antimorphic involutions

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace pseudoprim {

/// Index of a letter in its alphabet.
using Letter = std::uint8_t;

/// Alphabet size used when none is given.
inline constexpr std::size_t kDefaultAlphabetSize = 2;

/// Largest alphabet the textual syntax can name ('a' .. 'z').
inline constexpr std::size_t kMaxAlphabetSize = 26;

class Word;

/// A finite alphabet of `size` letters, indexed 0..size-1.
///
/// Each letter has a single-character display name. By default letter i is
/// named 'a' + i.
class Alphabet {
public:
    explicit Alphabet(std::size_t size = kDefaultAlphabetSize);
    Alphabet(std::size_t size, std::string names);

    std::size_t size() const { return names_.size(); }
    char name(Letter letter) const { return names_[letter]; }
    std::optional<Letter> letter(char name) const;

    /// Parses a string of letter names. "" and "ε" both denote the empty word.
    Word parse(std::string_view text) const;

    /// Renders a word; the empty word is rendered as "ε".
    std::string format(const Word& word) const;

    /// Renders a word for machine formats; the empty word is "".
    std::string letters(const Word& word) const;

    bool operator==(const Alphabet&) const = default;

private:
    std::string names_;
};

/// A finite word over an indexed alphabet.
///
/// The word remembers the size of its alphabet so that mixing words over
/// different alphabets is caught. Letters are stored one per byte, which keeps
/// short words in the small-string buffer.
class Word {
public:
    /// The empty word over the default binary alphabet.
    Word() = default;

    /// The empty word over an alphabet of the given size.
    explicit Word(std::size_t alphabet_size);

    /// Throws `InputError` if a letter is not below `alphabet_size`.
    Word(std::size_t alphabet_size, std::string_view letters);
    Word(std::size_t alphabet_size, std::initializer_list<Letter> letters);

    std::size_t size() const { return letters_.size(); }
    bool empty() const { return letters_.empty(); }
    std::size_t alphabet_size() const { return alphabet_size_; }

    Letter operator[](std::size_t i) const { return static_cast<Letter>(letters_[i]); }

    /// Raw letter indices, one per byte. Useful for allocation-free
    /// comparisons of factors.
    std::string_view view() const { return letters_; }

    auto begin() const { return letters_.begin(); }
    auto end() const { return letters_.end(); }

    Word prefix(std::size_t length) const;
    Word suffix(std::size_t length) const;
    Word slice(std::size_t pos, std::size_t length) const;

    /// `exponent` copies of this word; the empty word for exponent 0.
    Word power(std::size_t exponent) const;

    Word& operator+=(const Word& other);
    Word& push_back(Letter letter);

    friend Word operator+(Word lhs, const Word& rhs) { return lhs += rhs; }

    friend bool operator==(const Word&, const Word&) = default;

    /// Lexicographic order on letter indices (a proper prefix sorts first).
    friend std::strong_ordering operator<=>(const Word& lhs, const Word& rhs)
    {
        if (auto c = lhs.letters_.compare(rhs.letters_); c != 0)
            return c < 0 ? std::strong_ordering::less : std::strong_ordering::greater;
        return lhs.alphabet_size_ <=> rhs.alphabet_size_;
    }

private:
    friend class Involution;

    std::string letters_;
    std::uint8_t alphabet_size_ = kDefaultAlphabetSize;
};

/// Parses a word with the default letter names ('a' = 0, 'b' = 1, ...).
Word word(std::string_view text, std::size_t alphabet_size = kDefaultAlphabetSize);

/// Renders a word with the default letter names; the empty word is "ε".
std::string to_string(const Word& word);

/// An antimorphic involution: reverse the word, then map every letter
/// through an involutive permutation of the alphabet.
///
/// Every antimorphic involution of a free monoid has this shape, since an
/// involution must send letters to letters.
class Involution {
public:
    /// Reversal with the identity letter map.
    static Involution mirror(std::size_t alphabet_size = kDefaultAlphabetSize);

    /// Throws `InputError` unless `letter_map` is an involutive permutation.
    explicit Involution(std::vector<Letter> letter_map);

    /// Accepts "mirror" or an image string such as "ba" (a -> b, b -> a).
    /// For "mirror" the alphabet size must be supplied; for an image string
    /// it is the string's length and must agree with `alphabet_size` if given.
    static Involution parse(std::string_view spec,
                            std::optional<std::size_t> alphabet_size = std::nullopt);

    /// Every involutive letter permutation of the alphabet, identity first.
    static std::vector<Involution> all(std::size_t alphabet_size);

    std::size_t alphabet_size() const { return letter_map_.size(); }
    Letter operator()(Letter letter) const { return letter_map_[letter]; }

    /// Applies the involution to a word. Throws `InputError` on an alphabet
    /// mismatch.
    Word operator()(const Word& word) const;

    bool is_mirror() const;

    /// The image string ("ab" for the binary mirror image).
    std::string spec() const;

    /// "mirror" for the identity letter map, the image string otherwise.
    std::string name() const;

    const std::vector<Letter>& letter_map() const { return letter_map_; }

    bool operator==(const Involution&) const = default;

private:
    std::vector<Letter> letter_map_;
};

/// theta(w): reverse `w` and map each letter.
Word apply_involution(const Involution& theta, const Word& w);

/// True iff w = theta(w). The empty word is a theta-palindrome.
bool is_theta_palindrome(const Involution& theta, const Word& w);

/// Length of the longest common prefix of `u` and `v`.
std::size_t longest_common_prefix(const Word& u, const Word& v);

/// Every start offset of `pattern` in `text`, ascending, overlaps included.
/// Throws `InputError` for an empty pattern.
std::vector<std::size_t> occurrences(const Word& pattern, const Word& text);

/// Every word of length exactly `length` over the alphabet, in
/// lexicographic order.
std::vector<Word> words_of_length(std::size_t alphabet_size, std::size_t length);

/// Every word of length 1..max_length, shortlex order.
std::vector<Word> words_up_to(std::size_t alphabet_size, std::size_t max_length);

/// Every non-empty theta-palindrome of length <= max_length, shortlex order.
std::vector<Word> theta_palindromes_up_to(const Involution& theta, std::size_t max_length);

void check_same_alphabet(const Word& u, const Word& v);
void check_alphabet(const Involution& theta, const Word& w);

} // namespace pseudoprim

template <>
struct std::hash<pseudoprim::Word> {
    std::size_t operator()(const pseudoprim::Word& w) const noexcept
    {
        return std::hash<std::string_view>{}(w.view()) ^ (w.alphabet_size() * 0x9e3779b97f4a7c15ULL);
    }
};
