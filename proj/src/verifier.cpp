#include "pseudoprim/verifier.hpp"

#include "pseudoprim/errors.hpp"
#include "pseudoprim/parallel.hpp"
#include "properties.hpp"

#include <algorithm>
#include <chrono>

namespace pseudoprim {

namespace detail {

WitnessBuilder::WitnessBuilder(const Involution& theta)
{
    text("theta", theta.spec());
}

WitnessBuilder& WitnessBuilder::text(const std::string& name, std::string value)
{
    fields_.emplace_back(name, std::move(value));
    return *this;
}

WitnessBuilder& WitnessBuilder::word(const std::string& name, const Word& w)
{
    return text(name, Alphabet(w.alphabet_size()).letters(w));
}

WitnessBuilder& WitnessBuilder::number(const std::string& name, std::size_t n)
{
    return text(name, std::to_string(n));
}

WitnessBuilder& WitnessBuilder::signs(const std::string& name, const Signs& s)
{
    return text(name, format_signs(s));
}

WitnessReader::WitnessReader(const Witness& w)
    : fields_(w)
{
    if (has("theta"))
        theta_ = Involution::parse(text("theta"));
}

bool WitnessReader::has(const std::string& name) const
{
    return std::any_of(fields_.begin(), fields_.end(), [&](const auto& f) { return f.first == name; });
}

Word WitnessReader::word(const std::string& name) const
{
    return Alphabet(theta_.alphabet_size()).parse(text(name));
}

std::size_t WitnessReader::number(const std::string& name) const
{
    const auto& s = text(name);
    require(!s.empty() && s.find_first_not_of("0123456789") == std::string::npos,
            "witness field '" + name + "' is not a non-negative integer");
    return std::stoul(s);
}

Signs WitnessReader::signs(const std::string& name) const
{
    return parse_signs(text(name));
}

std::vector<Word> theta_primitive_generators(const Involution& theta, const Word& w, std::size_t min_blocks)
{
    std::vector<Word> out;
    for (std::size_t d = 1; d <= w.size(); ++d) {
        if (w.size() % d != 0 || w.size() / d < min_blocks)
            continue;
        Word x = w.prefix(d);
        if (!BlockSet(theta, x).in_plus(w) || !is_theta_primitive(theta, x))
            continue;
        out.push_back(std::move(x));
    }
    return out;
}

std::vector<Signs> all_signs(std::size_t length)
{
    std::vector<Signs> out;
    for (std::size_t mask = 0; mask < (std::size_t{1} << length); ++mask) {
        Signs s;
        for (std::size_t bit = length; bit-- > 0;)
            s.push_back((mask >> bit) & 1U ? Sign::minus : Sign::plus);
        out.push_back(std::move(s));
    }
    return out;
}

std::vector<Signs> block_sign_sequences(bool palindromic, std::size_t min_len, std::size_t max_len)
{
    std::vector<Signs> out;
    for (std::size_t len = min_len; len <= max_len; ++len) {
        if (palindromic) {
            out.push_back(Signs(len, Sign::plus));
            continue;
        }
        for (auto& s : all_signs(len))
            out.push_back(std::move(s));
    }
    return out;
}

bool all_equal(const Signs& s)
{
    return std::adjacent_find(s.begin(), s.end(), std::not_equal_to<>()) == s.end();
}

std::vector<Word> words_with_empty(std::size_t alphabet_size, std::size_t max_length)
{
    std::vector<Word> out{Word(alphabet_size)};
    for (auto& w : words_up_to(alphabet_size, max_length))
        out.push_back(std::move(w));
    return out;
}

} // namespace detail

namespace {

using detail::PropertyDef;

const std::vector<PropertyDef>& registry()
{
    static const std::vector<PropertyDef> defs = [] {
        std::vector<PropertyDef> out;
        detail::add_word_properties(out);
        detail::add_overlap_properties(out);
        detail::add_exls_properties(out);
        std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.info.id < b.info.id; });
        return out;
    }();
    return defs;
}

const PropertyDef& find(const std::string& id)
{
    for (const auto& def : registry())
        if (def.info.id == id)
            return def;
    throw InputError("unknown property '" + id + "'");
}

void check_bounds(const Bounds& b)
{
    require(b.alphabet_size >= 1 && b.alphabet_size <= kMaxAlphabetSize, "alphabet size must be between 1 and 26");
    require(b.max_x >= 1 && b.max_u >= 1 && b.max_product >= 1 && b.max_blocks >= 1, "all bounds must be at least 1");
}

struct ChunkTally {
    std::uint64_t universe = 0;
    std::vector<std::size_t> violations;
};

} // namespace

const std::string& witness_field(const Witness& w, const std::string& name)
{
    for (const auto& [key, value] : w)
        if (key == name)
            return value;
    throw InputError("witness has no field '" + name + "'");
}

std::string format_witness(const Witness& w)
{
    std::string out;
    for (const auto& [key, value] : w) {
        if (!out.empty())
            out += ' ';
        out += key + '=' + (value.empty() ? std::string("ε") : value);
    }
    return out;
}

const std::vector<PropertyInfo>& list_properties()
{
    static const std::vector<PropertyInfo> infos = [] {
        std::vector<PropertyInfo> out;
        for (const auto& def : registry())
            out.push_back(def.info);
        return out;
    }();
    return infos;
}

PropertyReport check_property(const std::string& id, const Bounds& bounds, const CheckOptions& options)
{
    const auto& def = find(id);
    check_bounds(bounds);
    require(!options.sharpness || def.info.has_threshold, "property '" + id + "' has no threshold to perturb");

    const auto start = std::chrono::steady_clock::now();
    detail::Context ctx{bounds, Involution::all(bounds.alphabet_size), std::max<std::size_t>(1, options.jobs),
                        options.sharpness};
    const auto cases = def.enumerate(ctx);

    constexpr std::size_t kChunk = 512;
    const std::size_t chunks = (cases.size() + kChunk - 1) / kChunk;
    auto tallies = parallel_map(chunks, ctx.jobs, [&](std::size_t c) {
        ChunkTally tally;
        const std::size_t end = std::min(cases.size(), (c + 1) * kChunk);
        for (std::size_t i = c * kChunk; i < end; ++i) {
            const auto verdict = def.evaluate(cases[i]);
            if (!verdict.in_universe)
                continue;
            ++tally.universe;
            if (!verdict.holds)
                tally.violations.push_back(i);
        }
        return tally;
    });

    PropertyReport report;
    report.id = id;
    report.sharpness = options.sharpness;
    report.gated = !options.sharpness || def.info.sharpness_gated;
    for (const auto& tally : tallies) {
        report.universe_size += tally.universe;
        report.violation_count += tally.violations.size();
        for (std::size_t idx : tally.violations)
            if (report.violations.size() < options.max_witnesses)
                report.violations.push_back(cases[idx]);
    }
    if (!options.sharpness)
        report.expected = report.violation_count == 0 && !(report.universe_size == 0 && bounds == Bounds{});
    else
        report.expected = !report.gated || report.violation_count > 0;
    report.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return report;
}

std::vector<PropertyReport> check_all(const Bounds& bounds, const CheckOptions& options)
{
    std::vector<PropertyReport> out;
    for (const auto& info : list_properties()) {
        if (options.sharpness && !info.has_threshold)
            continue;
        out.push_back(check_property(info.id, bounds, options));
    }
    return out;
}

bool replay(const std::string& id, const Witness& witness)
{
    const auto verdict = find(id).evaluate(witness);
    return verdict.in_universe && !verdict.holds;
}

nlohmann::ordered_json report_to_json(const PropertyReport& report)
{
    nlohmann::ordered_json j;
    j["id"] = report.id;
    j["universe_size"] = report.universe_size;
    j["violations"] = nlohmann::ordered_json::array();
    for (const auto& w : report.violations) {
        nlohmann::ordered_json fields = nlohmann::ordered_json::object();
        for (const auto& [key, value] : w)
            fields[key] = value;
        j["violations"].push_back(std::move(fields));
    }
    j["elapsed_ms"] = report.elapsed_ms;
    j["violation_count"] = report.violation_count;
    j["sharpness"] = report.sharpness;
    j["gated"] = report.gated;
    j["status"] = report.expected ? "pass" : "fail";
    return j;
}

std::string report_to_jsonl(const PropertyReport& report)
{
    return report_to_json(report).dump();
}

} // namespace pseudoprim
