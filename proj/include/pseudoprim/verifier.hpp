// verifier.hpp -- bounded exhaustive checks of the library's theorems
//
// Each registered property enumerates a finite universe of hypothesis tuples
// and evaluates its conclusion on every one. Violations are reported as
// witnesses: flat, ordered lists of named string fields that can be fed back
// to `replay` on their own.

#pragma once

#include <json.hpp>

#include <chrono>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace pseudoprim {

struct Bounds {
    std::size_t alphabet_size = 2;
    std::size_t max_x = 6;        ///< generators, v and w
    std::size_t max_u = 12;       ///< u, single words, theta-commutation budget
    std::size_t max_product = 24; ///< products of blocks
    std::size_t max_blocks = 8;   ///< factors per product

    bool operator==(const Bounds&) const = default;
};

using Witness = std::vector<std::pair<std::string, std::string>>;

/// Value of a witness field; throws `InputError` if absent.
const std::string& witness_field(const Witness& w, const std::string& name);

std::string format_witness(const Witness& w);

struct PropertyInfo {
    std::string id;
    std::string statement;
    bool has_threshold = false;  ///< supports sharpness mode
    bool sharpness_gated = false; ///< sharpness mode must find a violation
};

struct CheckOptions {
    bool sharpness = false;
    std::size_t jobs = 1;
    std::size_t max_witnesses = 8;
};

struct PropertyReport {
    std::string id;
    std::uint64_t universe_size = 0;
    std::uint64_t violation_count = 0;
    std::vector<Witness> violations; ///< the first `max_witnesses`, in enumeration order
    double elapsed_ms = 0;
    bool sharpness = false;
    bool gated = true;
    bool expected = false; ///< the outcome the registry asks for
};

/// The full registry in stable order.
const std::vector<PropertyInfo>& list_properties();

/// Throws `InputError` for an unknown id, for bounds below 1, or for
/// sharpness mode on a property without a threshold.
PropertyReport check_property(const std::string& id, const Bounds& bounds, const CheckOptions& options = {});

/// One report per registry entry. Sharpness mode covers only the properties
/// that support it.
std::vector<PropertyReport> check_all(const Bounds& bounds, const CheckOptions& options = {});

/// True iff the witness lies in the property's universe and violates it.
bool replay(const std::string& id, const Witness& witness);

/// {id, universe_size, violations[], elapsed_ms} plus bookkeeping fields.
nlohmann::ordered_json report_to_json(const PropertyReport& report);

std::string report_to_jsonl(const PropertyReport& report);

} // namespace pseudoprim
