// exls.hpp -- extended Lyndon-Schützenberger equations
//
// An instance is u_1 ... u_l = v_1 ... v_n w_1 ... w_m where every factor is
// either the base word or its theta-image, chosen by a sign pattern.

#pragma once

#include "pseudoprim/equations.hpp"
#include "pseudoprim/primitivity.hpp"
#include "pseudoprim/word.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

namespace pseudoprim {

struct Triple {
    std::size_t l = 0;
    std::size_t n = 0;
    std::size_t m = 0;

    bool operator==(const Triple&) const = default;
};

std::string to_string(const Triple& t);

struct SignPattern {
    Signs u;
    Signs v;
    Signs w;

    /// u_1 = u, v_1 = v and w_m = w.
    bool is_normalized() const;

    Triple triple() const { return {u.size(), v.size(), w.size()}; }

    bool operator==(const SignPattern&) const = default;
};

struct ExlsInstance {
    Involution theta = Involution::mirror();
    Word u;
    Word v;
    Word w;
    SignPattern pattern;

    Word lhs() const;
    Word rhs() const;
    Triple triple() const { return pattern.triple(); }

    bool operator==(const ExlsInstance&) const = default;
};

/// A solution without a common theta-root, with a note on where it came from.
struct CounterexampleRecord {
    ExlsInstance instance;
    std::string provenance;

    bool operator==(const CounterexampleRecord&) const = default;
};

struct SearchBounds {
    std::size_t max_v_len = 6;
    std::size_t max_w_len = 6;
};

/// True iff both sides are equal words. Throws `InputError` for empty words,
/// empty sign sequences or mixed alphabets.
bool exls_holds(const ExlsInstance& inst);

/// The common theta-root of u, v and w (see `common_theta_root`), or none.
std::optional<Word> theta_periodicity_witness(const Involution& theta, const Word& u, const Word& v, const Word& w);

/// True iff u_1 u_2 = v_1 ... v_i for some i <= n. Requires a satisfied
/// instance with l >= 2.
bool is_trivial_instance(const ExlsInstance& inst);

/// Every satisfied instance with the given first factor v: w ranges over
/// words of length 1..max_w_len, the pattern is normalized, and u is read off
/// the right-hand side. A theta-palindromic v or w only gets plus signs.
/// Ordered by (|w|, w, v signs, w signs).
std::vector<ExlsInstance> exls_solutions_for(const Involution& theta, const Triple& triple, const Word& v,
                                             std::size_t max_w_len);

/// `exls_solutions_for` over every v up to max_v_len, in (|v|, v, ...) order.
std::vector<ExlsInstance> exls_solutions(const Involution& theta, const Triple& triple, const SearchBounds& bounds,
                                         std::size_t jobs = 1);

/// Satisfied instances without a theta-periodicity witness. The output order
/// does not depend on `jobs`.
std::vector<CounterexampleRecord> exls_search(const Involution& theta, const Triple& triple,
                                              const SearchBounds& bounds, std::size_t jobs = 1);

struct Classification {
    enum class Status { counterexample_found, none_within_bounds };

    Triple triple;
    SearchBounds bounds;
    Status status = Status::none_within_bounds;
    std::vector<CounterexampleRecord> records;
};

std::string to_string(Classification::Status status);

/// Runs `exls_search` for each involution; never reports a triple as
/// theta-periodic, only the absence of counterexamples within bounds.
Classification classify_triple(std::span<const Involution> thetas, const Triple& triple, const SearchBounds& bounds,
                               std::size_t jobs = 1);

// ---------------------------------------------------------------------------
// Parametrized solution families over {a, b} with the mirror involution.
// Each maker checks that the equation holds and that no common root exists.

/// v = a^{2m} b^2, w = aa, u theta(u) = v^n w^m. Requires n >= 2, m >= 1.
ExlsInstance make_ls2(std::size_t n, std::size_t m);

/// u^2 theta(u) = v theta(v)^2 w^m with u = (abb)^{2m-1}ab. Requires m >= 2.
ExlsInstance make_ls33m(std::size_t m);

/// u theta(u)^2 = v^3 w^{2s} theta(w)^s with s = i + j + 1 and w = ab.
ExlsInstance make_ls33shift(std::size_t i, std::size_t j);

/// u^3 = v^2 theta(v)^2 w^i theta(w)^i with w = ba^3. Requires i >= 1.
ExlsInstance make_ls34even(std::size_t i);

/// Family names accepted by `gen_example`, with their parameter names.
const std::map<std::string, std::vector<std::string>>& example_families();

/// Dispatches to the makers above. Unknown names, missing or extra
/// parameters raise `InputError`.
ExlsInstance gen_example(const std::string& name, const std::map<std::string, std::int64_t>& params);

struct StructuredWord {
    Word word;
    std::optional<Word> p;  ///< pz family only
    std::optional<Word> z;  ///< pz family only
};

/// Words built from theta-palindromes r, t with rt primitive:
///  - "family1": (tr)^j [(r(tr)^i)^n (tr)^j]^k, checked primitive
///  - "family2": (tr)^j [(r(tr)^i)^m (tr)^j]^{k-1} (r(tr)^i)^{m-1} (rt)^j, checked primitive
///  - "pz": x = [r(tr)^i]^2 (tr)^j with p = x^{k-1} r(tr)^i and z = (tr)^j r(tr)^i,
///    checked against pz = x^{k-1} theta(x)
/// `n_or_m` is ignored by "pz".
StructuredWord gen_structured_family(const std::string& name, const Involution& theta, const Word& r, const Word& t,
                                     std::size_t i, std::size_t j, std::size_t k, std::size_t n_or_m);

// ---------------------------------------------------------------------------
// Structure of a non-trivial prefix configuration.

struct CcksCase1 {
    Word p;
    Word q;

    bool operator==(const CcksCase1&) const = default;
};

struct CcksCase2 {
    Word r;
    Word t;
    std::size_t i = 0;
    std::size_t j = 1;

    bool operator==(const CcksCase2&) const = default;
};

using CcksStructure = std::variant<CcksCase1, CcksCase2>;

/// For a theta-primitive v whose product v v_2 ... v_n is a prefix of
/// u u_2 u_3 for some u_3, with (n-1)|v| < 2|u| < n|v|: when u_2 = theta(u),
/// u theta(u) = (pq)^{n-1} p with v = pq; when u_2 = u, n is even and
/// v = r(tr)^i (rt)^{i+j} r. `v_signs` includes the leading plus.
CcksStructure ccks_structure(const Involution& theta, const Word& u, Sign u2_sign, const Word& v,
                             const Signs& v_signs, std::size_t n);

} // namespace pseudoprim
