#include <doctest.h>

#include "harness.hpp"

using namespace charforge;
using namespace charforge::harness;

TEST_CASE("base parsing")
{
    CHECK(parse_base(9) == ff::Base{3, 2});
    CHECK(parse_base(7) == ff::Base{7, 1});
    CHECK_THROWS_AS(parse_base(4), UsageError);
    CHECK_THROWS_AS(parse_base(15), UsageError);
}

TEST_CASE("unknown suites and void grids are usage errors")
{
    RunConfig c;
    c.suites = {"nonsense"};
    CHECK_THROWS_AS(run(c), UsageError);
    c.suites = {"elliptic_EF"};
    c.q = {3};
    try {
        run(c);
        FAIL("expected a usage error");
    } catch (const UsageError& e) {
        CHECK(std::string(e.what()).find("E=F generic suites require q") != std::string::npos);
    }
}

TEST_CASE("reports are deterministic across worker counts")
{
    RunConfig c;
    c.suites = {"split_I", "kondo", "dl_main"};
    c.q = {3, 5};
    c.k = {1};
    c.groups = {{groups::GroupType::Sp, 1}, {groups::GroupType::U, 1}};
    c.workers = 1;
    const auto a = report_document(c, run(c)).dump();
    c.workers = 4;
    const auto b = report_document(c, run(c)).dump();
    CHECK(a == b);
}

TEST_CASE("sampling is seeded")
{
    RunConfig c;
    c.suites = {"split_II"};
    c.q = {5};
    c.sample = 10;
    c.seed = 7;
    const auto r1 = run(c);
    const auto r2 = run(c);
    CHECK(r1.reports.size() == 10);
    CHECK(report_document(c, r1).dump() == report_document(c, r2).dump());
    c.seed = 8;
    CHECK(report_document(c, run(c))["reports"] != report_document(c, r1)["reports"]);
}

TEST_CASE("tolerance override and summaries")
{
    RunConfig c;
    c.suites = {"split_I"};
    c.q = {5};
    c.k = {1};
    const auto ok = run(c);
    CHECK(ok.all_pass);
    REQUIRE(ok.summary.size() == 1);
    CHECK(ok.summary[0].checks == static_cast<long long>(ok.reports.size()));
    c.tol = 1e-300;
    CHECK_FALSE(run(c).all_pass);
}

TEST_CASE("report header lists generator polynomials")
{
    RunConfig c;
    c.suites = {"gauss_core"};
    c.q = {3};
    c.k = {1};
    const json doc = report_document(c, run(c));
    bool seen = false;
    for (const auto& f : doc["header"]["fields"])
        if (f["field"] == "F_9") {
            seen = true;
            CHECK(f["modulus"].get<std::string>().size() > 0);
            CHECK(f["generator"].get<std::string>().size() > 0);
        }
    CHECK(seen);
    CHECK(report_csv(c, run(c)).find("identity,params") != std::string::npos);
}
