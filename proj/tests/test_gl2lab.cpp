#include <doctest.h>

#include <map>

#include "errors.hpp"
#include "gl2lab.hpp"
#include "sums.hpp"

using namespace charforge;
using namespace charforge::gl2;
using chars::make_add_char;
using chars::make_mult_char;

TEST_CASE("table shape")
{
    const auto& t3 = gl2_char_table(3);
    CHECK(t3.rows.size() == 8);
    CHECK(t3.classes.size() == 8);
    i64 s = 0;
    for (const auto& r : t3.rows) s += r.dim * r.dim;
    CHECK(s == 48);

    const auto& t5 = gl2_char_table(5);
    CHECK(t5.rows.size() == 24);
    std::map<i64, int> dims;
    for (const auto& r : t5.rows) ++dims[r.dim];
    CHECK(dims == std::map<i64, int>{{1, 4}, {4, 10}, {5, 4}, {6, 6}});
    i64 total = 0;
    for (const auto& c : t5.classes) total += c.size;
    CHECK(total == 480);

    // the trivial representation
    for (const auto& v : t5.rows[0].values) CHECK(std::abs(v - cplx(1.0)) < 1e-12);
    CHECK_THROWS_AS(gl2_char_table(11), UnsupportedError);
}

TEST_CASE("orthogonality")
{
    for (int q : {3, 5}) {
        const auto& t = gl2_char_table(q);
        for (size_t i = 0; i < t.rows.size(); ++i)
            for (size_t j = 0; j < t.rows.size(); ++j)
                CHECK(std::abs(inner(t, t.rows[i].values, t.rows[j].values) - cplx(i == j ? 1.0 : 0.0)) < 1e-10);
    }
}

TEST_CASE("kondo and jacobi against brute force")
{
    for (int q : {3, 5}) {
        const auto& t = gl2_char_table(q);
        const auto psi = make_add_char(q, 1);
        for (const auto& r : t.rows)
            for (i64 c = 0; c < q - 1; ++c) {
                const auto chi = make_mult_char(t.F(), c);
                CHECK(verify_kondo(t, r, chi, psi).pass);
                if (c != 0 || !trivial_in_support(r)) CHECK(verify_jacobi(t, r, chi, psi).pass);
            }
    }
}

TEST_CASE("trivial chi with a cuspidal row at q = 5")
{
    const auto& t = gl2_char_table(5);
    const auto psi = make_add_char(5, 1);
    const auto one = make_mult_char(t.F(), 0);
    for (const auto& r : t.rows)
        if (r.family == RowFamily::Cuspidal) {
            const Report rep = verify_jacobi(t, r, one, psi);
            CHECK(rep.identity == "appendix_C_gl_trivial_chi");
            CHECK(rep.pass);
            // (-1)^k q^{-k/2} G(tau^vee) G(tau) with k = 2
            const auto dual = sums::dual_support(r.support);
            const cplx expect = 0.2 * sums::kondo_product(dual, one, psi).value * sums::kondo_product(r.support, one, psi).value;
            CHECK(std::abs(rep.rhs - expect) < 1e-10);
        }
    CHECK_THROWS_AS(verify_jacobi(t, t.rows[0], one, psi), std::invalid_argument);
}

TEST_CASE("singular matrices")
{
    const ff::Field& F3 = ff::Field::get(3, 1);
    ff::Mat e11(2);
    e11(0, 0) = F3.one();
    CHECK(verify_singular_vanishing(3, e11, make_mult_char(F3, 1), make_add_char(3, 1)).pass);
    CHECK(verify_singular_vanishing(3, ff::Mat(2), make_mult_char(F3, 1), make_add_char(3, 1)).pass);
    const ff::Field& F5 = ff::Field::get(5, 1);
    for (const auto& X : singular_representatives(5))
        for (i64 c = 1; c < 4; ++c) CHECK(verify_singular_vanishing(5, X, make_mult_char(F5, c), make_add_char(5, 1)).pass);
    CHECK_THROWS_AS(verify_singular_vanishing(3, ff::identity(F3, 2), make_mult_char(F3, 1), make_add_char(3, 1)),
                    std::invalid_argument);
}

TEST_CASE("pairing reduction")
{
    const auto psi3 = make_add_char(3, 1);
    const ff::Field& F3 = ff::Field::get(3, 1);
    CHECK(dl_pairing_check_gl2(3, TorusKind::Split, {0, 1}, TestFunction::ChiDet, make_mult_char(F3, 1), psi3).pass);
    for (i64 b : {1, 3})
        CHECK(dl_pairing_check_gl2(3, TorusKind::Elliptic, {b}, TestFunction::Jacobi, make_mult_char(F3, 1), psi3).pass);
    const ff::Field& F5 = ff::Field::get(5, 1);
    for (i64 a = 0; a < 4; ++a)
        CHECK(dl_pairing_check_gl2(5, TorusKind::Split, {a, a}, TestFunction::Jacobi, make_mult_char(F5, 1),
                                   make_add_char(5, 1))
                  .pass);
    CHECK_THROWS_AS(dl_pairing_check_gl2(3, TorusKind::Elliptic, {4}, TestFunction::ChiDet, make_mult_char(F3, 1), psi3),
                    std::invalid_argument);
    CHECK_THROWS_AS(dl_pairing_check_gl2(3, TorusKind::Split, {0, 0}, TestFunction::Jacobi, make_mult_char(F3, 0), psi3),
                    std::invalid_argument);
}

TEST_CASE("kondo operator is scalar")
{
    const auto& t = gl2_char_table(5);
    for (const auto& r : t.rows) CHECK(verify_kondo_scalar(t, r, make_mult_char(t.F(), 1), make_add_char(5, 1)).pass);
}

TEST_CASE("selftest")
{
    for (const auto& rec : selftest(3)) CHECK(rec["pass"].get<bool>());
}
