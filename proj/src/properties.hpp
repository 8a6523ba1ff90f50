// properties.hpp -- internal registry plumbing shared by the property files

#pragma once

#include "pseudoprim/exls.hpp"
#include "pseudoprim/primitivity.hpp"
#include "pseudoprim/verifier.hpp"
#include "pseudoprim/word.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace pseudoprim::detail {

struct Verdict {
    bool in_universe = false;
    bool holds = true;
};

inline Verdict outside() { return {false, true}; }
inline Verdict checked(bool holds) { return {true, holds}; }

struct Context {
    Bounds bounds;
    std::vector<Involution> thetas;
    std::size_t jobs = 1;
    bool sharpness = false;

    /// 1 in sharpness mode, else 0.
    std::size_t shift() const { return sharpness ? 1 : 0; }
};

struct PropertyDef {
    PropertyInfo info;
    std::function<std::vector<Witness>(const Context&)> enumerate;
    std::function<Verdict(const Witness&)> evaluate;
};

void add_word_properties(std::vector<PropertyDef>& out);
void add_overlap_properties(std::vector<PropertyDef>& out);
void add_exls_properties(std::vector<PropertyDef>& out);

/// Builds witnesses field by field.
class WitnessBuilder {
public:
    explicit WitnessBuilder(const Involution& theta);
    WitnessBuilder() = default;

    WitnessBuilder& text(const std::string& name, std::string value);
    WitnessBuilder& word(const std::string& name, const Word& w);
    WitnessBuilder& number(const std::string& name, std::size_t n);
    WitnessBuilder& signs(const std::string& name, const Signs& s);

    Witness build() const { return fields_; }
    operator Witness() const { return fields_; }

private:
    Witness fields_;
};

/// Typed access to witness fields; malformed fields raise `InputError`.
class WitnessReader {
public:
    explicit WitnessReader(const Witness& w);

    const Involution& theta() const { return theta_; }
    const std::string& text(const std::string& name) const { return witness_field(fields_, name); }
    Word word(const std::string& name) const;
    std::size_t number(const std::string& name) const;
    Signs signs(const std::string& name) const;
    bool has(const std::string& name) const;

private:
    const Witness& fields_;
    Involution theta_ = Involution::mirror();
};

// Shared helpers for property code.

/// theta-primitive generators x with w in {x, theta(x)}^k for some k >= min_blocks.
std::vector<Word> theta_primitive_generators(const Involution& theta, const Word& w, std::size_t min_blocks = 1);

/// Every sign sequence of the given length, lexicographic.
std::vector<Signs> all_signs(std::size_t length);

/// Sign sequences of length 1..max_len, shortlex; a palindromic generator
/// only gets all-plus sequences.
std::vector<Signs> block_sign_sequences(bool palindromic, std::size_t min_len, std::size_t max_len);

bool all_equal(const Signs& s);

/// Words of length 0..max_length, shortlex, starting with the empty word.
std::vector<Word> words_with_empty(std::size_t alphabet_size, std::size_t max_length);

} // namespace pseudoprim::detail
