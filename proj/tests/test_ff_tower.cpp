#include <doctest.h>

#include <set>

#include "ff_tower.hpp"
#include "matrix.hpp"

using namespace charforge::ff;

TEST_CASE("field sizes and generators")
{
    const Field& F9 = Field::get(3, 2);
    CHECK(F9.size() == 9);
    CHECK(F9.units() == 8);
    // prime fields: the generator is the least primitive root
    CHECK(Field::get(3, 1).to_int(Field::get(3, 1).gen()) == 2);
    CHECK(Field::get(5, 1).to_int(Field::get(5, 1).gen()) == 2);
    CHECK(Field::get(7, 1).to_int(Field::get(7, 1).gen()) == 3);
    CHECK(&Field::get(3, 2) == &F9);
}

TEST_CASE("field axioms hold exhaustively on F_9 and F_25")
{
    for (auto [p, e] : {std::pair{3, 2}, std::pair{5, 2}}) {
        const Field& F = Field::get(p, e);
        for (i64 a = -1; a < F.units(); ++a)
            for (i64 b = -1; b < F.units(); ++b) {
                const Elem x = static_cast<Elem>(a), y = static_cast<Elem>(b);
                CHECK(F.add(x, y) == F.add(y, x));
                CHECK(F.sub(F.add(x, y), y) == x);
                if (y != ZERO) CHECK(F.mul(F.div(x, y), y) == x);
            }
        // additive codes round trip
        for (i64 c = 0; c < F.size(); ++c) CHECK(F.code(F.from_code(c)) == c);
    }
}

TEST_CASE("norm and trace from F_9 to F_3")
{
    const Field& F9 = Field::get(3, 2);
    CHECK(F9.modulus() == std::vector<int>{1, 0, 1});
    // gamma = x + 1 generates; gamma^4 = -1
    CHECK(F9.code(F9.gen()) == 1 + 3);
    CHECK(F9.norm_to(F9.gen(), 1) == F9.minus_one());
    CHECK(F9.norm_to(F9.one(), 1) == F9.one());
    CHECK(F9.trace_prime(F9.gen()) == 2);
    CHECK(F9.trace_to(ZERO, 1) == ZERO);
    // linearity over the subfield
    const Field& F3 = Field::get(3, 1);
    const auto& em = embedding(F3, F9);
    for (i64 c = 0; c < F3.units(); ++c)
        for (i64 x = -1; x < F9.units(); ++x) {
            const Elem cc = embed(em, static_cast<Elem>(c));
            CHECK(F9.trace_to(F9.mul(cc, static_cast<Elem>(x)), 1) ==
                  F9.mul(cc, F9.trace_to(static_cast<Elem>(x), 1)));
        }
}

TEST_CASE("norm from F_81 onto F_9 is surjective")
{
    const Base b{3, 2};
    const Field& K = b.ext(2);
    const Field& F = b.field();
    std::set<Elem> image;
    for (i64 x = 0; x < K.units(); ++x) image.insert(norm(b, K, static_cast<Elem>(x), 1));
    CHECK(static_cast<i64>(image.size()) == F.units());
}

TEST_CASE("self-embedding is the identity")
{
    for (auto [p, e] : {std::pair{3, 1}, std::pair{3, 2}, std::pair{5, 2}, std::pair{7, 2}}) {
        const Field& F = Field::get(p, e);
        const auto& em = embedding(F, F);
        for (i64 x = 0; x < F.units(); ++x) CHECK(embed(em, static_cast<Elem>(x)) == x);
    }
}

TEST_CASE("norm-one subgroups")
{
    const auto N = norm_one_subgroup(Base{3, 1}, 1);
    CHECK(N.order == 4);
    CHECK(std::set<Elem>(N.elements.begin(), N.elements.end()) == std::set<Elem>{0, 2, 4, 6});
    CHECK(norm_one_subgroup(Base{5, 1}, 1).order == 6);
    CHECK(norm_one_subgroup(Base{3, 1}, 2).order == 10);
}

TEST_CASE("etale algebras")
{
    CHECK(etale_algebra(Base{3, 1}, {2, 1}, 1).unit_order() == 16);
    CHECK(etale_algebra(Base{3, 1}, {2, 2}, 1).unit_order() == 64);
    const auto A = etale_algebra(Base{5, 1}, {1}, 2);
    CHECK(A.parts.size() == 1);
    CHECK(A.parts[0]->size() == 25);
}

TEST_CASE("matrix helpers")
{
    const Field& F = Field::get(5, 1);
    CHECK(general_linear(F, 2).size() == 480);
    CHECK(general_linear(Field::get(3, 1), 2).size() == 48);
    const Mat g = from_codes(F, 2, {1, 2, 3, 4});
    CHECK(det(F, g) == F.from_int(-2));
    CHECK(mat_mul(F, g, inverse(F, g)) == identity(F, 2));
    CHECK(rank(F, from_codes(F, 2, {1, 2, 2, 4})) == 1);
}
