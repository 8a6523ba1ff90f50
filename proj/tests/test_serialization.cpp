#include "pseudoprim/errors.hpp"
#include "pseudoprim/serialization.hpp"

#include <doctest.h>

#include <sstream>

using namespace pseudoprim;

TEST_SUITE("serialization") {

TEST_CASE("record fields")
{
    const CounterexampleRecord rec{make_ls33m(2), "gen ls33m m=2"};
    CHECK(record_to_jsonl(rec)
          == R"({"l":3,"n":3,"m":2,"theta":"ab","u":"abbabbabbab","v":"abbab","w":"bbabbabba",)"
             R"("u_signs":"++-","v_signs":"+--","w_signs":"++","provenance":"gen ls33m m=2"})");
}

TEST_CASE("records round trip")
{
    std::stringstream io;
    std::vector<CounterexampleRecord> written;
    for (const auto& r : exls_search(Involution::mirror(), {2, 2, 2}, {4, 2}))
        written.push_back(r);
    written.push_back({make_ls34even(2), "gen"});
    for (const auto& r : written)
        io << record_to_jsonl(r) << "\n\n";
    CHECK(read_records(io) == written);
}

TEST_CASE("a record over a swapped alphabet keeps its involution")
{
    auto rec = exls_search(Involution::parse("ba"), {2, 2, 2}, {4, 4});
    if (rec.empty())
        rec.push_back({ExlsInstance{Involution::parse("ba"), word("ab"), word("ab"), word("ab"),
                                    {{Sign::plus, Sign::plus}, {Sign::plus}, {Sign::plus}}},
                       ""});
    const auto back = record_from_json(nlohmann::json::parse(record_to_jsonl(rec.front())));
    CHECK(back.instance.theta == Involution::parse("ba"));
    CHECK(back == rec.front());
}

TEST_CASE("malformed records")
{
    auto parse = [](const char* text) { return record_from_json(nlohmann::json::parse(text)); };
    CHECK_THROWS_AS(parse("[]"), InputError);
    CHECK_THROWS_AS(parse(R"({"l":1,"n":1,"m":1,"theta":"ab","u":"a","v":"a","w_signs":"+"})"), InputError);
    CHECK_THROWS_AS(parse(R"({"l":1,"n":1,"m":1,"theta":"ab","u":"c","v":"a","w":"a",)"
                          R"("u_signs":"+","v_signs":"+","w_signs":"+"})"),
                    InputError);
    CHECK_THROWS_AS(parse(R"({"l":2,"n":1,"m":1,"theta":"ab","u":"a","v":"a","w":"a",)"
                          R"("u_signs":"+","v_signs":"+","w_signs":"+"})"),
                    InputError);
    CHECK_THROWS_AS(parse(R"({"l":1,"n":1,"m":1,"theta":"aa","u":"a","v":"a","w":"a",)"
                          R"("u_signs":"+","v_signs":"+","w_signs":"+"})"),
                    InputError);

    std::istringstream bad("{\"l\":1}\nnot json\n");
    try {
        read_records(bad);
        FAIL("expected an error");
    } catch (const InputError& e) {
        CHECK(std::string(e.what()).find("line 1") != std::string::npos);
    }
}

} // TEST_SUITE
