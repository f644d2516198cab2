#include <doctest.h>

#include "chars.hpp"

using namespace charforge;
using namespace charforge::chars;
using ff::Field;

namespace {

bool near(cplx a, cplx b) { return std::abs(a - b) < 1e-12; }

}  // namespace

TEST_CASE("multiplicative characters of F_5 and F_9")
{
    const Field& F5 = Field::get(5, 1);
    const MultChar chi = make_mult_char(F5, 1);
    CHECK(near(chi(F5.from_int(2)), {0, 1}));
    CHECK(near(chi(F5.from_int(4)), -1.0));
    CHECK(near(chi(F5.from_int(3)), {0, -1}));
    const MultChar one = make_mult_char(F5, 0);
    for (int x = 1; x < 5; ++x) CHECK(near(one(F5.from_int(x)), 1.0));
    const Field& F9 = Field::get(3, 2);
    const MultChar q = make_mult_char(F9, 4);
    CHECK(near(q(F9.gen()), -1.0));
    for (i64 x = 0; x < 8; x += 2) CHECK(near(q(static_cast<ff::Elem>(x)), 1.0));
}

TEST_CASE("conjugate duality and regularity over F_9 / F_3")
{
    const ff::Base b{3, 1};
    const Field& F9 = b.ext(2);
    CHECK_FALSE(is_conjugate_dual(make_mult_char(F9, 1), b, 2));
    CHECK(is_conjugate_dual(make_mult_char(F9, 2), b, 2));
    CHECK(is_regular(make_mult_char(F9, 3), b.field()));
    CHECK_FALSE(is_regular(make_mult_char(F9, 4), b.field()));
    CHECK(orbit_min(make_mult_char(F9, 3), 3) == 1);
}

TEST_CASE("transfer of norm-one characters")
{
    const ff::Base b{3, 1};
    const NormOneChar th = make_norm_one_char(b, 1, 1);
    const Field& F9 = th.field();
    CHECK(near(th(2), {0, 1}));
    const MultChar hat = transfer_theta(th);
    CHECK(hat.a == 6);
    CHECK(transfer_theta(make_norm_one_char(b, 1, 0)).trivial());
    // trivial on F_q^x
    for (int q : {3, 5})
        for (i64 t = 0; t <= q; ++t) {
            const ff::Base bq{q, 1};
            const MultChar h = transfer_theta(make_norm_one_char(bq, 1, t));
            const MultChar r = restrict_to(h, bq.field());
            CHECK(r.trivial());
        }
    (void)F9;
}

TEST_CASE("torus character transfer")
{
    const ff::Base b{5, 1};
    TorusChar t;
    t.split.push_back(make_mult_char(b.field(), 1));
    const HatChar h = transfer_torus_char(t, b, 1);
    REQUIRE(h.comps.size() == 2);
    CHECK(h.comps[0].a == 1);
    CHECK(h.comps[1].a == 3);

    TorusChar e;
    e.elliptic.push_back(make_norm_one_char(ff::Base{3, 1}, 1, 1));
    const HatChar he = transfer_torus_char(e, ff::Base{3, 1}, 1);
    REQUIRE(he.comps.size() == 1);
    CHECK(he.comps[0].a == 6);
}

TEST_CASE("additive characters agree along the tower")
{
    const ff::Base b{3, 1};
    const Field& F = b.field();
    const Field& K = b.ext(2);
    const AddChar psi = make_add_char(3, 1);
    const auto& em = ff::embedding(F, K);
    for (i64 x = 0; x < K.units(); ++x) {
        const ff::Elem t = ff::pull(em, K.trace_to(static_cast<ff::Elem>(x), 1));
        CHECK(near(psi(K, static_cast<ff::Elem>(x)), psi(F, t)));
    }
}
