#include "pseudoprim/cli.hpp"
#include "pseudoprim/serialization.hpp"

#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

using namespace pseudoprim;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args)
{
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& text)
{
    std::vector<std::string> out;
    std::istringstream in(text);
    for (std::string line; std::getline(in, line);)
        if (!line.empty())
            out.push_back(line);
    return out;
}

} // namespace

TEST_SUITE("cli") {

TEST_CASE("root commands")
{
    CHECK(run({"root", "abab"}).out == "ab 2\n");
    CHECK(run({"theta-root", "abba", "--theta", "mirror"}).out == "ab [+,-]\n");
    CHECK(run({"theta-root", "abbaab"}).out == "ab [+,-,+]\n");
    CHECK(run({"is-theta-primitive", "aabb"}).out == "true\n");
    CHECK(run({"is-theta-primitive", "abba"}).out == "false\n");
    // ab = a theta(a) when theta swaps the letters.
    CHECK(run({"is-theta-primitive", "ab", "--theta", "ba"}).out == "false\n");

    const auto j = nlohmann::json::parse(run({"root", "abab", "--format", "jsonl"}).out);
    CHECK(j.at("root") == "ab");
    CHECK(j.at("exponent") == 2);
}

TEST_CASE("usage errors name the flag")
{
    const auto bad_theta = run({"theta-root", "ab", "--theta", "aa"});
    CHECK(bad_theta.code == cli::usage);
    CHECK(bad_theta.err.find("--theta") != std::string::npos);

    const auto bad_word = run({"root", "abc"});
    CHECK(bad_word.code == cli::usage);
    CHECK(bad_word.err.find("word") != std::string::npos);

    CHECK(run({"root", "ab", "--bogus"}).code == cli::usage);
    CHECK(run({"nothing"}).code == cli::usage);
    CHECK(run({"exls", "gen", "ls33m", "--m", "1"}).code == cli::usage);
    CHECK(run({"check", "P99-missing"}).code == cli::usage);
}

TEST_CASE("check")
{
    const auto pass = run({"check", "P12-overlap3"});
    CHECK(pass.code == cli::ok);
    CHECK(pass.out.rfind("PASS P12-overlap3", 0) == 0);

    const auto json = run({"check", "P12-overlap3", "--format", "jsonl"});
    CHECK(json.code == cli::ok);
    const auto j = nlohmann::json::parse(lines(json.out).front());
    CHECK(j.at("universe_size").get<int>() > 0);
    CHECK(j.at("violations").empty());

    const auto listing = run({"check", "--list"});
    CHECK(lines(listing.out).size() == 44);

    const auto sharp = run({"check", "P06-fine-wilf", "--sharpness", "--format", "jsonl"});
    CHECK(sharp.code == cli::ok);
    const auto violation = nlohmann::json::parse(lines(sharp.out).front()).at("violations").at(0);
    CHECK(run({"replay", "P06-fine-wilf", violation.dump()}).code == cli::failure);
    CHECK(run({"replay", "P06-fine-wilf", R"({"theta":"ab","u":"a","v":"b","shift":"0"})"}).code == cli::ok);
}

TEST_CASE("exls gen")
{
    const auto gen = run({"exls", "gen", "ls33m", "--m", "2"});
    CHECK(gen.code == cli::ok);
    const auto j = nlohmann::json::parse(gen.out);
    CHECK(j.at("u") == "abbabbabbab");
    CHECK(j.at("v_signs") == "+--");
}

TEST_CASE("exls search output is accepted by exls verify")
{
    const auto path = std::filesystem::temp_directory_path() / "pseudoprim_cli_test.jsonl";
    const auto search = run({"exls", "search", "--l", "2", "--n", "2", "--m", "2", "--max-v", "5", "--max-w", "2",
                             "--theta", "all", "--out", path.string()});
    REQUIRE(search.code == cli::ok);
    std::ifstream in(path);
    const auto records = read_records(in);
    CHECK_FALSE(records.empty());

    const auto verify = run({"exls", "verify", path.string()});
    CHECK(verify.code == cli::ok);
    CHECK(verify.out.find(std::to_string(records.size()) + "/" + std::to_string(records.size()))
          != std::string::npos);

    // A tampered record is rejected.
    auto j = record_to_json(records.front());
    j["u"] = std::string(j["u"].get<std::string>().size(), 'a');
    {
        std::ofstream bad(path);
        bad << j.dump() << "\n";
    }
    CHECK(run({"exls", "verify", path.string()}).code == cli::failure);
    std::filesystem::remove(path);
}

TEST_CASE("exls classify")
{
    const auto found = run({"exls", "classify", "--l", "2", "--n", "2", "--m", "2", "--max-v", "4", "--max-w", "2",
                            "--format", "jsonl"});
    CHECK(found.code == cli::ok);
    CHECK(nlohmann::json::parse(lines(found.out).front()).at("status") == "counterexample_found");

    const auto none = run({"exls", "classify", "--l", "4", "--n", "3", "--m", "3", "--max-v", "3", "--max-w", "3",
                           "--format", "jsonl"});
    CHECK(none.code == cli::ok);
    CHECK(nlohmann::json::parse(lines(none.out).front()).at("status") == "none_within_bounds");
}

} // TEST_SUITE
