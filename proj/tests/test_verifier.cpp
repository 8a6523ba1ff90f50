#include "pseudoprim/errors.hpp"
#include "pseudoprim/verifier.hpp"

#include <doctest.h>

#include <algorithm>
#include <set>

using namespace pseudoprim;

namespace {

bool listed(const std::string& id)
{
    const auto& all = list_properties();
    return std::any_of(all.begin(), all.end(), [&](const PropertyInfo& p) { return p.id == id; });
}

} // namespace

TEST_SUITE("verifier") {

TEST_CASE("registry")
{
    const auto& all = list_properties();
    CHECK(all.size() == 44);
    CHECK(listed("P12-overlap3"));
    CHECK(listed("P43-ls-original"));
    std::set<std::string> ids;
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(ids.insert(all[i].id).second);
        CHECK_FALSE(all[i].statement.empty());
        const std::string prefix = (i + 1 < 10 ? "P0" : "P") + std::to_string(i + 1) + "-";
        CHECK(all[i].id.rfind(prefix, 0) == 0);
    }
    for (const auto& p : all)
        if (p.sharpness_gated)
            CHECK(p.has_threshold);
}

TEST_CASE("theorems hold at default bounds")
{
    for (const char* id : {"P12-overlap3", "P06-fine-wilf", "P19-conjugacy", "P44-theta-root-unique"}) {
        const auto report = check_property(id, Bounds{});
        CAPTURE(id);
        CHECK(report.universe_size > 0);
        CHECK(report.violation_count == 0);
        CHECK(report.violations.empty());
        CHECK(report.expected);
    }
}

TEST_CASE("sharpness finds replayable violations")
{
    const auto report = check_property("P06-fine-wilf", Bounds{}, {.sharpness = true});
    CHECK(report.violation_count > 0);
    CHECK(report.expected);
    REQUIRE_FALSE(report.violations.empty());
    CHECK(report.violations.size() <= CheckOptions{}.max_witnesses);
    for (const auto& w : report.violations)
        CHECK(replay("P06-fine-wilf", w));

    const Witness unshifted{{"theta", "ab"}, {"u", "a"}, {"v", "b"}, {"shift", "0"}};
    CHECK_FALSE(replay("P06-fine-wilf", unshifted));
}

TEST_CASE("errors")
{
    CHECK_THROWS_AS(check_property("P99-nothing", Bounds{}), InputError);
    CHECK_THROWS_AS(check_property("P12-overlap3", Bounds{.max_x = 0}), InputError);
    CHECK_THROWS_AS(check_property("P12-overlap3", Bounds{.alphabet_size = 0}), InputError);
    CHECK_THROWS_AS(check_property("P01-involution-laws", Bounds{}, {.sharpness = true}), InputError);
    CHECK_THROWS_AS(replay("P06-fine-wilf", Witness{{"theta", "ab"}}), InputError);
    CHECK_THROWS_AS(witness_field(Witness{}, "u"), InputError);
}

TEST_CASE("degenerate bounds pass everywhere")
{
    for (const auto& report : check_all(Bounds{.alphabet_size = 1}))
        CHECK_MESSAGE(report.violation_count == 0, report.id);
    for (const auto& report : check_all(Bounds{2, 1, 1, 1, 1})) {
        CHECK_MESSAGE(report.violation_count == 0, report.id);
        CHECK(report.expected);
    }
}

TEST_CASE("reports do not depend on the number of jobs")
{
    const Bounds small{2, 5, 10, 20, 6};
    for (const char* id : {"P12-overlap3", "P25-rootshare", "P30-ccks09a"}) {
        const auto one = check_property(id, small, {.jobs = 1});
        const auto three = check_property(id, small, {.jobs = 3});
        CHECK(one.universe_size == three.universe_size);
        CHECK(one.violations == three.violations);
    }
    const auto a = check_property("P06-fine-wilf", Bounds{}, {.sharpness = true, .jobs = 1});
    const auto b = check_property("P06-fine-wilf", Bounds{}, {.sharpness = true, .jobs = 4});
    CHECK(a.violations == b.violations);
    CHECK(a.violation_count == b.violation_count);
}

TEST_CASE("universes grow with the bounds")
{
    for (const char* id : {"P03-pq-qp", "P12-overlap3", "P16-pali-split", "P26-uv-length"}) {
        const auto smaller = check_property(id, Bounds{2, 4, 8, 16, 6});
        const auto larger = check_property(id, Bounds{2, 5, 10, 20, 7});
        CAPTURE(id);
        CHECK(smaller.universe_size <= larger.universe_size);
    }
}

TEST_CASE("report serialization")
{
    const auto report = check_property("P12-overlap3", Bounds{});
    const auto j = report_to_json(report);
    CHECK(j.at("id") == "P12-overlap3");
    CHECK(j.at("universe_size") == report.universe_size);
    CHECK(j.at("violations").empty());
    CHECK(j.contains("elapsed_ms"));
    CHECK(j.at("status") == "pass");
    CHECK(report_to_jsonl(report).find('\n') == std::string::npos);
}

} // TEST_SUITE
