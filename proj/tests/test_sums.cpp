#include <doctest.h>

#include <random>

#include "identities.hpp"
#include "sums.hpp"

using namespace charforge;
using namespace charforge::sums;
using chars::make_add_char;
using chars::make_mult_char;
using ff::Field;
using ff::Mat;

namespace {

bool near(cplx a, cplx b, double tol = 1e-10) { return std::abs(a - b) < tol; }

cplx twisted_brute(const MultChar& alpha, const MultChar& chi, const AddChar& psi)
{
    const Field& K = *alpha.field;
    cplx s = 0;
    for (i64 x = 0; x < K.units(); ++x) {
        const ff::Elem e = static_cast<ff::Elem>(x);
        s += (alpha * chars::lift_norm(chi, K)).inverse()(e) * psi(K, e);
    }
    return -s / std::sqrt(static_cast<double>(K.size()));
}

}  // namespace

TEST_CASE("gauss sums of small fields")
{
    const AddChar psi = make_add_char(3, 1);
    CHECK(near(gauss(make_mult_char(Field::get(3, 1), 1), psi), {0, -1}));
    CHECK(near(gauss(make_mult_char(Field::get(5, 1), 2), make_add_char(5, 1)), -1.0));
    for (auto [p, e] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{7, 2}}) {
        const Field& K = Field::get(p, e);
        CHECK(near(gauss(make_mult_char(K, 0), make_add_char(p, 1)), 1.0 / std::sqrt(static_cast<double>(K.size()))));
        for (i64 a = 1; a < K.units(); ++a) CHECK(std::abs(gauss(make_mult_char(K, a), make_add_char(p, 1))) == doctest::Approx(1.0));
    }
}

TEST_CASE("twisted gauss sums")
{
    const ff::Base b{3, 1};
    const Field& K = b.ext(2);
    const AddChar psi = make_add_char(3, 1);
    for (i64 a = 0; a < K.units(); ++a)
        for (i64 c = 0; c < 2; ++c) {
            const MultChar alpha = make_mult_char(K, a), chi = make_mult_char(b.field(), c);
            CHECK(near(gauss_twisted(alpha, chi, psi), gauss(alpha * chars::lift_norm(chi, K), psi)));
            CHECK(near(gauss_twisted(alpha, chi, psi), twisted_brute(alpha, chi, psi)));
        }
    CHECK(near(gauss_twisted(make_mult_char(K, 1), make_mult_char(b.field(), 0), psi), gauss(make_mult_char(K, 1), psi)));
}

TEST_CASE("torus gauss sums")
{
    const Field& F = Field::get(5, 1);
    const AddChar psi = make_add_char(5, 1);
    const MultChar chi = make_mult_char(F, 1);
    CHECK(near(gauss_torus({make_mult_char(F, 3)}, chi, psi), gauss_twisted(make_mult_char(F, 3), chi, psi)));
    for (i64 a1 = 0; a1 < 4; ++a1)
        for (i64 a2 = 0; a2 < 4; ++a2) {
            const std::vector<MultChar> comps{make_mult_char(F, a1), make_mult_char(F, a2)};
            CHECK(near(gauss_torus(comps, chi, psi), gauss_torus_direct(comps, chi, psi)));
        }
}

TEST_CASE("hasse-davenport")
{
    for (auto [q, m] : {std::pair{3, 2}, std::pair{3, 3}, std::pair{5, 2}, std::pair{7, 2}})
        for (i64 beta = 0; beta < q - 1; ++beta) CHECK(verify_hasse_davenport(ff::Base{q, 1}, m, beta, make_add_char(q, 1)).pass);
}

TEST_CASE("jacobi kernel examples")
{
    const Field& F5 = Field::get(5, 1);
    const AddChar psi5 = make_add_char(5, 1);
    CHECK(near(jacobi_kernel_gl(F5, ff::scalar(F5, 2, F5.minus_one()), make_mult_char(F5, 1), psi5), 0.0));
    CHECK(near(jacobi_kernel_gl(F5, ff::identity(F5, 1), make_mult_char(F5, 1), psi5), {0, 1}));

    const Field& F3 = Field::get(3, 1);
    const AddChar psi3 = make_add_char(3, 1);
    const MultChar one = make_mult_char(F3, 0);
    // chi = 1 kernel with the corrected sign
    CHECK(kernel_li_hu(F3, ff::identity(F3, 1)) == doctest::Approx(1.0 / 3));
    CHECK(kernel_li_hu(F3, ff::scalar(F3, 1, F3.minus_one())) == doctest::Approx(-2.0 / 3));
    CHECK(kernel_li_hu(F3, ff::scalar(F3, 2, F3.minus_one())) == doctest::Approx(16.0 / 9));
    CHECK(near(jacobi_kernel_gl(F3, ff::identity(F3, 1), one, psi3), 1.0 / 3));
    CHECK(near(jacobi_kernel_gl(F3, ff::scalar(F3, 2, F3.minus_one()), one, psi3), 16.0 / 9));
}

TEST_CASE("li-hu closed form matches the Fourier sum")
{
    for (int q : {3, 5, 7, 9}) {
        const ff::Base b = q == 9 ? ff::Base{3, 2} : ff::Base{q, 1};
        const Field& E = b.field();
        for (const auto& g : ff::general_linear(E, 1)) CHECK(verify_li_hu(E, g, make_add_char(b.p, 1)).pass);
    }
    const Field& F3 = Field::get(3, 1);
    for (const auto& g : ff::general_linear(F3, 2)) CHECK(verify_li_hu(F3, g, make_add_char(3, 1)).pass);
}

TEST_CASE("jacobi kernel is a class function on GL_2(F_5)")
{
    const Field& F = Field::get(5, 1);
    const AddChar psi = make_add_char(5, 1);
    const auto& G = ff::general_linear(F, 2);
    std::mt19937_64 rng(12345);
    std::uniform_int_distribution<size_t> pick(0, G.size() - 1);
    for (int i = 0; i < 1000; ++i) {
        const Mat& h = G[pick(rng)];
        const Mat& g = G[pick(rng)];
        const Mat c = ff::mat_mul(F, ff::mat_mul(F, h, g), ff::inverse(F, h));
        for (i64 chi = 1; chi < 4; ++chi)
            CHECK(near(jacobi_kernel_gl(F, c, make_mult_char(F, chi), psi), jacobi_kernel_gl(F, g, make_mult_char(F, chi), psi)));
        CHECK(kernel_li_hu(F, c) == doctest::Approx(kernel_li_hu(F, g)));
    }
}

TEST_CASE("normalization constant")
{
    const ff::Base b{5, 1};
    const AddChar psi = make_add_char(5, 1);
    // Sp_2(F_5), chi exponent 1: eps = -1 and c = -tau(chi^{-2}) = 1
    CHECK(near(c_normalization(b, 1, 2, -1, make_mult_char(b.field(), 1), psi), 1.0));
}

TEST_CASE("kondo and jacobi scalars at k = 1")
{
    const Field& F = Field::get(5, 1);
    const AddChar psi = make_add_char(5, 1);
    for (i64 a = 0; a < 4; ++a)
        for (i64 c = 0; c < 4; ++c) {
            const MultChar alpha = make_mult_char(F, a), chi = make_mult_char(F, c);
            CHECK(near(kondo_product({alpha}, chi, psi).value, -gauss_twisted(alpha, chi, psi)));
            const cplx expect = chi(F.minus_one()) * (-gauss(chi.inverse(), psi)) * (-gauss(alpha.inverse(), psi)) *
                                (-gauss(alpha * chi, psi));
            CHECK(near(jacobi_scalar_gl_formula({alpha}, chi, psi), expect));
        }
}

TEST_CASE("jacobi scalar is multiplicative over principal-series supports")
{
    const Field& F = Field::get(5, 1);
    const AddChar psi = make_add_char(5, 1);
    for (i64 a1 = 0; a1 < 4; ++a1)
        for (i64 a2 = 0; a2 < 4; ++a2)
            for (i64 c = 0; c < 4; ++c) {
                const MultChar chi = make_mult_char(F, c);
                const MultChar x1 = make_mult_char(F, a1), x2 = make_mult_char(F, a2);
                CHECK(near(jacobi_scalar_gl_formula({x1, x2}, chi, psi),
                           jacobi_scalar_gl_formula({x1}, chi, psi) * jacobi_scalar_gl_formula({x2}, chi, psi)));
            }
}

TEST_CASE("torus and appendix identities at spot points")
{
    const AddChar psi3 = make_add_char(3, 1), psi5 = make_add_char(5, 1);
    const Report a1 = verify_appendix_A1(ff::Base{3, 1}, 1, 1, psi3);
    CHECK(a1.pass);
    CHECK(near(a1.lhs, -2.0));
    CHECK(verify_reflection(make_mult_char(Field::get(3, 1), 1), psi3).pass);
    for (i64 t = 0; t < 6; ++t) CHECK(verify_elliptic_EF(ff::Base{5, 1}, 1, t, 1, psi5).pass);
    CHECK_THROWS_AS(verify_elliptic_EF(ff::Base{5, 1}, 1, 0, 2, psi5), std::invalid_argument);
    CHECK_THROWS_AS(verify_split_I(ff::Base{5, 1}, 1, 1, 1, 0, psi5), std::invalid_argument);
    CHECK_THROWS_AS(verify_appendix_C_split(ff::Base{5, 1}, 1, 1, 1, 1, psi5), std::invalid_argument);
    // quadratic elliptic sum in the exceptional branch equals q^m
    const Report e = verify_appendix_C_elliptic_EF(ff::Base{5, 1}, 1, 0, 0, psi5);
    CHECK(e.pass);
    CHECK(near(e.rhs, 5.0));
}

TEST_CASE("frobenius invariance and conjugation spot checks")
{
    const AddChar psi = make_add_char(3, 1);
    for (i64 a = 0; a < 8; ++a) {
        CHECK(verify_frobenius_invariance(ff::Base{3, 1}, 1, 2, a, 1, psi).pass);
        CHECK(verify_conjugation(make_mult_char(Field::get(3, 2), a), psi).pass);
    }
}
