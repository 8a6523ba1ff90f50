#include "pseudoprim/serialization.hpp"

#include "pseudoprim/errors.hpp"

#include <istream>

namespace pseudoprim {

nlohmann::ordered_json record_to_json(const CounterexampleRecord& record)
{
    const auto& inst = record.instance;
    const Alphabet alphabet(inst.theta.alphabet_size());
    const auto t = inst.triple();
    nlohmann::ordered_json j;
    j["l"] = t.l;
    j["n"] = t.n;
    j["m"] = t.m;
    j["theta"] = inst.theta.spec();
    j["u"] = alphabet.letters(inst.u);
    j["v"] = alphabet.letters(inst.v);
    j["w"] = alphabet.letters(inst.w);
    j["u_signs"] = format_signs(inst.pattern.u);
    j["v_signs"] = format_signs(inst.pattern.v);
    j["w_signs"] = format_signs(inst.pattern.w);
    j["provenance"] = record.provenance;
    return j;
}

CounterexampleRecord record_from_json(const nlohmann::json& j)
{
    require(j.is_object(), "record must be a JSON object");
    auto field = [&](const char* key) -> const nlohmann::json& {
        require(j.contains(key), std::string("record is missing field '") + key + "'");
        return j.at(key);
    };
    auto text = [&](const char* key) {
        const auto& f = field(key);
        require(f.is_string(), std::string("record field '") + key + "' must be a string");
        return f.get<std::string>();
    };
    auto count = [&](const char* key) {
        const auto& f = field(key);
        require(f.is_number_unsigned() || (f.is_number_integer() && f.get<std::int64_t>() >= 0),
                std::string("record field '") + key + "' must be a non-negative integer");
        return f.get<std::size_t>();
    };

    CounterexampleRecord rec;
    auto& inst = rec.instance;
    inst.theta = Involution::parse(text("theta"));
    const Alphabet alphabet(inst.theta.alphabet_size());
    inst.u = alphabet.parse(text("u"));
    inst.v = alphabet.parse(text("v"));
    inst.w = alphabet.parse(text("w"));
    inst.pattern.u = parse_signs(text("u_signs"));
    inst.pattern.v = parse_signs(text("v_signs"));
    inst.pattern.w = parse_signs(text("w_signs"));
    require(inst.pattern.u.size() == count("l"), "record: u_signs length differs from l");
    require(inst.pattern.v.size() == count("n"), "record: v_signs length differs from n");
    require(inst.pattern.w.size() == count("m"), "record: w_signs length differs from m");
    if (j.contains("provenance"))
        rec.provenance = text("provenance");
    return rec;
}

std::string record_to_jsonl(const CounterexampleRecord& record)
{
    return record_to_json(record).dump();
}

std::vector<CounterexampleRecord> read_records(std::istream& in)
{
    std::vector<CounterexampleRecord> out;
    std::string line;
    for (std::size_t lineno = 1; std::getline(in, line); ++lineno) {
        if (line.find_first_not_of(" \t\r") == std::string::npos)
            continue;
        try {
            out.push_back(record_from_json(nlohmann::json::parse(line)));
        } catch (const nlohmann::json::exception& e) {
            throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        } catch (const InputError& e) {
            throw InputError("line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    return out;
}

} // namespace pseudoprim
