#include <doctest.h>

#include <cmath>
#include <string>

#include <json.hpp>

#include "charforge/charforge.h"

using json = nlohmann::json;

TEST_CASE("c api basics")
{
    cf_session* s = cf_session_new();
    REQUIRE(s != nullptr);
    double re = 1, im = 1;
    CHECK(cf_gauss(s, 3, 1, 1, 1, &re, &im) == CF_OK);
    CHECK(std::abs(re) < 1e-12);
    CHECK(im == doctest::Approx(-1.0));
    CHECK(std::string(cf_session_error(s)).empty());

    CHECK(cf_gauss(s, 4, 1, 1, 1, &re, &im) == CF_EINVAL);
    CHECK(std::string(cf_session_error(s)).size() > 0);

    int64_t order = 0;
    CHECK(cf_group_order(s, "Sp", 2, 3, &order) == CF_OK);
    CHECK(order == 51840);
    CHECK(cf_group_order(s, "Spin", 2, 3, &order) == CF_EUNSUPPORTED);
    CHECK(cf_group_order(s, "Sp", 6, 49, &order) == CF_ELIMIT);

    const int64_t minus_identity[4] = {2, 0, 0, 2};
    CHECK(cf_jacobi_kernel(s, 3, 2, minus_identity, 0, 1, &re, &im) == CF_OK);
    CHECK(re == doctest::Approx(16.0 / 9));
    const int64_t singular[4] = {1, 0, 0, 0};
    CHECK(cf_jacobi_kernel(s, 3, 2, singular, 0, 1, &re, &im) == CF_EINVAL);

    cf_result* r = nullptr;
    CHECK(cf_torus_catalog(s, "Sp", 1, 5, &r) == CF_OK);
    CHECK(json::parse(cf_result_text(r)).size() == 2);
    cf_result_free(r);

    r = nullptr;
    CHECK(cf_dl_gamma(s, R"({"type":"Sp","n":1,"q":5,"lambda_plus":[1],"alpha":[1],"chi":1})", &r) == CF_OK);
    const json d = json::parse(cf_result_text(r));
    CHECK(d["lhs"]["re"].get<double>() == doctest::Approx(d["rhs"]["re"].get<double>()));
    CHECK(d["c_V"]["re"].get<double>() == doctest::Approx(1.0));
    cf_result_free(r);
    CHECK(cf_dl_gamma(s, "{not json", &r) == CF_EINVAL);
    CHECK(cf_dl_gamma(s, R"({"type":"Sp","n":1,"q":5,"lambda_plus":[1],"alpha":[1],"chi":2})", &r) == CF_EINVAL);

    r = nullptr;
    int pass = 0;
    CHECK(cf_verify(s, R"({"suites":["gauss_core"],"q":[3]})", &r, &pass) == CF_OK);
    CHECK(pass == 1);
    cf_result_free(r);
    CHECK(cf_verify(s, R"({"suites":["bogus"]})", &r, &pass) == CF_EINVAL);

    r = nullptr;
    CHECK(cf_gl2_selftest(s, 3, &r, &pass) == CF_OK);
    CHECK(pass == 1);
    cf_result_free(r);
    CHECK(cf_gl2_selftest(s, 9, &r, &pass) == CF_EUNSUPPORTED);

    CHECK(std::string(cf_status_string(CF_ELIMIT)) == "limit exceeded");
    cf_session_free(s);
}
