#include <doctest.h>

#include <set>

#include "errors.hpp"
#include "groups.hpp"
#include "sums.hpp"

using namespace charforge;
using namespace charforge::groups;
using chars::make_add_char;

namespace {

GroupSpec spec(GroupType t, int n, int q) { return GroupSpec{t, n, ff::Base{q, 1}}; }

}  // namespace

TEST_CASE("group orders")
{
    CHECK(group_order(spec(GroupType::Sp, 1, 3)) == 24);
    CHECK(group_order(spec(GroupType::Sp, 2, 3)) == 51840);
    CHECK(group_order(spec(GroupType::U, 2, 3)) == 96);
    CHECK(group_order(spec(GroupType::SO_minus, 1, 7)) == 8);
    CHECK(group_order(spec(GroupType::GSp, 1, 3)) == 48);
    CHECK(lie_algebra_size(spec(GroupType::Sp, 1, 3)) == 27);
    CHECK_THROWS_AS(group_order(GroupSpec{GroupType::Sp, 6, ff::Base{7, 2}}), LimitError);
}

TEST_CASE("type parsing")
{
    CHECK(parse_type("SO+") == GroupType::SO_plus);
    CHECK(parse_type("GSO-") == GroupType::GSO_minus);
    CHECK(parse_type("SO") == GroupType::SO_odd);
    CHECK_THROWS_AS(parse_type("Spin"), UnsupportedError);
    CHECK(spec_name(spec(GroupType::Sp, 2, 3)) == "Sp_4(F_3)");
}

TEST_CASE("enumeration matches order formulas and filtering")
{
    for (int q : {3, 5, 7}) CHECK(enumerate_group(spec(GroupType::Sp, 1, q)).elements.size() == static_cast<size_t>(q * (q * q - 1)));
    const auto& sp2 = enumerate_group(spec(GroupType::Sp, 1, 5));
    CHECK(sp2.elements.size() == 120);
    const auto filtered = filter_group(spec(GroupType::Sp, 1, 5));
    CHECK(std::set<ff::Mat>(filtered.begin(), filtered.end()) ==
          std::set<ff::Mat>(sp2.elements.begin(), sp2.elements.end()));
    CHECK(enumerate_group(spec(GroupType::GSp, 1, 3)).elements.size() == 48);
    CHECK(enumerate_group(spec(GroupType::U, 2, 3)).elements.size() == 96);
    CHECK(enumerate_group(spec(GroupType::SO_odd, 1, 5)).elements.size() ==
          static_cast<size_t>(group_order(spec(GroupType::SO_odd, 1, 5))));
    const auto u2 = filter_group(spec(GroupType::U, 2, 3));
    CHECK(u2.size() == 96);
}

TEST_CASE("torus catalog")
{
    const auto sp2 = torus_catalog(spec(GroupType::Sp, 1, 5));
    REQUIRE(sp2.size() == 2);
    CHECK(sp2[0].lambda_plus == std::vector<int>{1});
    CHECK(sp2[0].order == 4);
    CHECK(sp2[1].lambda_minus == std::vector<int>{1});
    CHECK(sp2[1].order == 6);

    const auto u2 = torus_catalog(spec(GroupType::U, 2, 3));
    REQUIRE(u2.size() == 2);
    std::set<i64> orders{u2[0].order, u2[1].order};
    CHECK(orders == std::set<i64>{8, 16});

    for (const auto& td : torus_catalog(spec(GroupType::GSp, 1, 5)))
        CHECK(td.rel_rank == static_cast<int>(td.lambda_plus.size()) + 1);
    CHECK_THROWS_AS(make_torus(spec(GroupType::SO_plus, 1, 5), {}, {1}), std::invalid_argument);
}

TEST_CASE("kernel on the torus")
{
    const GroupSpec g = spec(GroupType::Sp, 1, 5);
    const TorusDatum td = make_torus(g, {1}, {});
    const ff::Field& F = g.base.field();
    const auto chi = make_chi(g, 1);
    TorusPoint t;
    t.x = {F.from_int(2)};
    CHECK(std::abs(kernel_on_torus(td, t, chi) - cplx(0, 1)) < 1e-12);
    t.x = {F.minus_one()};
    CHECK(std::abs(kernel_on_torus(td, t, chi)) < 1e-12);
}

TEST_CASE("torus embeddings respect the form and the kernel")
{
    for (GroupType ty : {GroupType::Sp, GroupType::SO_odd, GroupType::SO_plus, GroupType::SO_minus, GroupType::U,
                         GroupType::GSp})
        for (int n : {1, 2}) {
            const GroupSpec g = spec(ty, n, 3);
            for (const auto& td : torus_catalog(g)) CHECK(verify_torus_embedding(td, make_chi(g, 1)).pass);
        }
}

TEST_CASE("main pairing identity on Sp_2(F_5) and SO_3(F_5)")
{
    const auto psi = make_add_char(5, 1);
    for (GroupType ty : {GroupType::Sp, GroupType::SO_odd}) {
        const GroupSpec g = spec(ty, 1, 5);
        bool flipped = false;
        for (const auto& td : torus_catalog(g))
            for (const auto& th : all_thetas(td))
                for (i64 c : {1, 3}) {
                    const auto chi = make_chi(g, c);
                    CHECK(verify_dl(td, th, chi, psi).pass);
                    if (ty == GroupType::SO_odd && !verify_dl(td, th, chi, psi, DlOptions{true}).pass) flipped = true;
                }
        if (ty == GroupType::SO_odd) CHECK(flipped);
    }
}

TEST_CASE("conjugate-dual chi is rejected by the generic identity")
{
    const GroupSpec g = spec(GroupType::Sp, 1, 5);
    const TorusDatum td = make_torus(g, {1}, {});
    const auto th = all_thetas(td)[1];
    CHECK_THROWS_AS(dl_gamma_rhs(td, th, make_chi(g, 2), make_add_char(5, 1)), std::invalid_argument);
}

TEST_CASE("split-torus gamma is a product of twisted sums")
{
    const GroupSpec g = spec(GroupType::Sp, 1, 5);
    const TorusDatum td = make_torus(g, {1}, {});
    const auto psi = make_add_char(5, 1);
    const auto chi = make_chi(g, 1);
    const ff::Field& F = g.base.field();
    for (i64 a = 0; a < 4; ++a) {
        const auto th = classical_theta(td, {a}, {});
        const auto d = dl_gamma_rhs(td, th, chi, psi);
        const auto alpha = chars::make_mult_char(F, a);
        CHECK(std::abs(d.gamma - sums::gauss_twisted(alpha, chi, psi) * sums::gauss_twisted(alpha.inverse(), chi, psi)) <
              1e-10);
    }
}

TEST_CASE("geometric conjugacy")
{
    for (int q : {3, 5})
        for (i64 t = 0; t <= q; ++t) CHECK(verify_geometric_conjugacy(ff::Base{q, 1}, t, make_add_char(q, 1)).pass);
}

TEST_CASE("unitary and similitude identities")
{
    for (int q : {3, 5})
        for (auto [ty, n] : {std::pair{GroupType::U, 1}, std::pair{GroupType::U, 2}, std::pair{GroupType::GSp, 1}}) {
            const GroupSpec g = spec(ty, n, q);
            const auto psi = make_add_char(q, 1);
            const i64 nchi = g.base.ext(degree_EF(g)).units();
            for (const auto& td : torus_catalog(g))
                for (const auto& th : all_thetas(td))
                    for (i64 c = 0; c < nchi; ++c) {
                        const auto chi = make_chi(g, c);
                        if (chi_conjugate_dual(g, chi)) {
                            if (appendix_C_dl_applies(td, th, chi)) CHECK(verify_appendix_C_dl(td, th, chi, psi).pass);
                        } else {
                            CHECK(verify_dl(td, th, chi, psi).pass);
                        }
                    }
        }
}
