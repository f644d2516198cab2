#include "harness.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <thread>

#include "errors.hpp"
#include "gl2lab.hpp"
#include "identities.hpp"

namespace charforge::harness {

using chars::AddChar;
using chars::make_mult_char;
using ff::i64;
using groups::GroupSpec;
using groups::GroupType;

namespace {

using Task = std::function<Report()>;

struct Builder {
    const RunConfig& cfg;
    std::vector<Task> tasks;
    long long void_points = 0;

    bool pick(const std::vector<long long>& filter, i64 v) const
    {
        return filter.empty() || std::find(filter.begin(), filter.end(), v) != filter.end();
    }
    // Scales that are valid for characteristic p.
    std::vector<AddChar> psis(int p) const
    {
        std::vector<AddChar> out;
        for (int c : cfg.psi_scale)
            if (c % p != 0) out.push_back(chars::make_add_char(p, c));
        return out;
    }
    void add(Task t) { tasks.push_back(std::move(t)); }
};

using Generator = std::function<void(Builder&)>;

const std::vector<int> kGl2Q{3, 5, 7};

bool gl2_q(long long q) { return std::find(kGl2Q.begin(), kGl2Q.end(), q) != kGl2Q.end(); }

void gauss_fields(Builder& B, const std::function<void(const ff::Base&, const ff::Field&, const AddChar&)>& f)
{
    for (long long q : B.cfg.q) {
        const ff::Base b = parse_base(q);
        for (int k : B.cfg.k) {
            if (ff::ipow(q, k) > kMaxPairField * 10) continue;
            for (const auto& psi : B.psis(b.p)) f(b, b.ext(k), psi);
        }
    }
}

// Torus-sum grids over (ef, k) with |E_k| capped.
void torus_grid(Builder& B, const std::function<void(const ff::Base&, int, int, const AddChar&)>& f)
{
    for (long long q : B.cfg.q) {
        const ff::Base b = parse_base(q);
        for (int ef : {1, 2})
            for (int k : B.cfg.k) {
                if (ff::ipow(q, ef * k) > kMaxPairField) continue;
                for (const auto& psi : B.psis(b.p)) f(b, ef, k, psi);
            }
    }
}

void elliptic_grid(Builder& B, bool odd_m_only, const std::function<void(const ff::Base&, int, const AddChar&)>& f)
{
    for (long long q : B.cfg.q) {
        const ff::Base b = parse_base(q);
        for (int m : B.cfg.m) {
            if (odd_m_only && m % 2 == 0) continue;
            if (ff::ipow(q, 2 * m) > kMaxPairField) continue;
            for (const auto& psi : B.psis(b.p)) f(b, m, psi);
        }
    }
}

std::vector<GroupSpec> group_grid(const Builder& B)
{
    const auto choices = B.cfg.groups.empty() ? default_groups() : B.cfg.groups;
    std::vector<GroupSpec> out;
    for (long long q : B.cfg.q) {
        const ff::Base b = parse_base(q);
        for (const auto& c : choices) {
            GroupSpec g{c.type, c.n, b};
            if (c.type == GroupType::GL) continue;
            // Keep the direct torus sums at desk scale.
            if (groups::group_order(g) > 2'000'000'000LL) continue;
            out.push_back(g);
        }
    }
    return out;
}

void dl_grid(Builder& B, const std::function<void(const groups::TorusDatum&, const groups::TorusTheta&,
                                                  const chars::MultChar&, const AddChar&)>& f)
{
    for (const GroupSpec& g : group_grid(B)) {
        const i64 nchi = g.base.ext(groups::degree_EF(g)).units();
        for (const auto& td : groups::torus_catalog(g))
            for (const auto& th : groups::all_thetas(td))
                for (i64 c = 0; c < nchi; ++c) {
                    if (!B.pick(B.cfg.chi, c)) continue;
                    const auto chi = groups::make_chi(g, c);
                    for (const auto& psi : B.psis(g.base.p)) f(td, th, chi, psi);
                }
    }
}

const std::vector<std::pair<std::string, Generator>>& registry()
{
    static const std::vector<std::pair<std::string, Generator>> reg = {
        {"gauss_core",
         [](Builder& B) {
             gauss_fields(B, [&](const ff::Base&, const ff::Field& K, const AddChar& psi) {
                 for (i64 a = 0; a < K.units(); ++a)
                     if (B.pick(B.cfg.alpha, a))
                         B.add([&K, a, psi] { return sums::verify_gauss_core(make_mult_char(K, a), psi); });
             });
         }},
        {"conjugation",
         [](Builder& B) {
             gauss_fields(B, [&](const ff::Base&, const ff::Field& K, const AddChar& psi) {
                 for (i64 a = 0; a < K.units(); ++a)
                     if (B.pick(B.cfg.alpha, a))
                         B.add([&K, a, psi] { return sums::verify_conjugation(make_mult_char(K, a), psi); });
             });
         }},
        {"reflection",
         [](Builder& B) {
             gauss_fields(B, [&](const ff::Base&, const ff::Field& K, const AddChar& psi) {
                 for (i64 c = 1; c < K.units(); ++c)
                     if (B.pick(B.cfg.chi, c))
                         B.add([&K, c, psi] { return sums::verify_reflection(make_mult_char(K, c), psi); });
             });
         }},
        {"hasse_davenport",
         [](Builder& B) {
             for (long long q : B.cfg.q) {
                 const ff::Base b = parse_base(q);
                 for (int m : B.cfg.m) {
                     if (ff::ipow(q, m) > kMaxPairField * 10) continue;
                     for (const auto& psi : B.psis(b.p))
                         for (i64 beta = 0; beta < b.field().units(); ++beta)
                             if (B.pick(B.cfg.theta, beta))
                                 B.add([b, m, beta, psi] { return sums::verify_hasse_davenport(b, m, beta, psi); });
                 }
             }
         }},
        {"twisted_definition",
         [](Builder& B) {
             for (long long q : B.cfg.q) {
                 const ff::Base b = parse_base(q);
                 for (int k : B.cfg.k) {
                     if (ff::ipow(q, k) > kMaxPairField) continue;
                     const ff::Field& K = b.ext(k);
                     for (const auto& psi : B.psis(b.p))
                         for (i64 a = 0; a < K.units(); ++a)
                             for (i64 c = 0; c < b.field().units(); ++c)
                                 if (B.pick(B.cfg.alpha, a) && B.pick(B.cfg.chi, c))
                                     B.add([&K, b, a, c, psi] {
                                         return sums::verify_twisted_definition(make_mult_char(K, a),
                                                                                make_mult_char(b.field(), c), psi);
                                     });
                 }
             }
         }},
        {"torus_product",
         [](Builder& B) {
             for (long long q : B.cfg.q) {
                 const ff::Base b = parse_base(q);
                 const ff::Field& F = b.field();
                 for (int k : B.cfg.k) {
                     if (ff::ipow(q, k) * q > kMaxPairField) continue;
                     const ff::Field& K = b.ext(k);
                     for (const auto& psi : B.psis(b.p))
                         for (i64 a1 = 0; a1 < F.units(); ++a1)
                             for (i64 a2 = 0; a2 < K.units(); ++a2)
                                 for (i64 c = 0; c < F.units(); ++c)
                                     if (B.pick(B.cfg.alpha, a2) && B.pick(B.cfg.chi, c))
                                         B.add([&F, &K, a1, a2, c, psi] {
                                             return sums::verify_torus_product(
                                                 {make_mult_char(F, a1), make_mult_char(K, a2)}, make_mult_char(F, c),
                                                 psi);
                                         });
                 }
             }
         }},
        {"frobenius_invariance",
         [](Builder& B) {
             torus_grid(B, [&](const ff::Base& b, int ef, int k, const AddChar& psi) {
                 const i64 na = b.ext(ef * k).units(), nc = b.ext(ef).units();
                 for (i64 a = 0; a < na; ++a)
                     for (i64 c = 0; c < nc; ++c)
                         if (B.pick(B.cfg.alpha, a) && B.pick(B.cfg.chi, c))
                             B.add([b, ef, k, a, c, psi] {
                                 return sums::verify_frobenius_invariance(b, ef, k, a, c, psi);
                             });
             });
         }},
        {"split_I",
         [](Builder& B) {
             torus_grid(B, [&](const ff::Base& b, int ef, int k, const AddChar& psi) {
                 const i64 na = b.ext(ef * k).units(), nc = b.ext(ef).units();
                 for (i64 a = 0; a < na; ++a)
                     for (i64 c = 1; c < nc; ++c)
                         if (B.pick(B.cfg.alpha, a) && B.pick(B.cfg.chi, c))
                             B.add([b, ef, k, a, c, psi] { return sums::verify_split_I(b, ef, k, a, c, psi); });
             });
         }},
        {"split_II",
         [](Builder& B) {
             torus_grid(B, [&](const ff::Base& b, int ef, int k, const AddChar& psi) {
                 const ff::Field& E = b.ext(ef);
                 for (i64 c = 0; c < E.units(); ++c) {
                     if (!B.pick(B.cfg.chi, c)) continue;
                     if (chars::is_conjugate_dual(make_mult_char(E, c), b, ef)) {
                         ++B.void_points;
                         continue;
                     }
                     for (i64 a = 0; a < b.ext(ef * k).units(); ++a)
                         if (B.pick(B.cfg.alpha, a))
                             B.add([b, ef, k, a, c, psi] { return sums::verify_split_II(b, ef, k, a, c, psi); });
                 }
             });
         }},
        {"elliptic_EF",
         [](Builder& B) {
             elliptic_grid(B, false, [&](const ff::Base& b, int m, const AddChar& psi) {
                 const ff::Field& F = b.field();
                 for (i64 c = 0; c < F.units(); ++c) {
                     if (!B.pick(B.cfg.chi, c)) continue;
                     if (make_mult_char(F, c).pow(2).trivial()) {
                         ++B.void_points;
                         continue;
                     }
                     for (i64 t = 0; t < ff::ipow(b.q(), m) + 1; ++t)
                         if (B.pick(B.cfg.theta, t))
                             B.add([b, m, t, c, psi] { return sums::verify_elliptic_EF(b, m, t, c, psi); });
                 }
             });
         }},
        {"elliptic_E2F",
         [](Builder& B) {
             elliptic_grid(B, true, [&](const ff::Base& b, int m, const AddChar& psi) {
                 const ff::Field& E = b.ext(2);
                 for (i64 c = 0; c < E.units(); ++c) {
                     if (!B.pick(B.cfg.chi, c)) continue;
                     if (chars::is_conjugate_dual(make_mult_char(E, c), b, 2)) {
                         ++B.void_points;
                         continue;
                     }
                     for (i64 t = 0; t < ff::ipow(b.q(), m) + 1; ++t)
                         if (B.pick(B.cfg.theta, t))
                             B.add([b, m, t, c, psi] { return sums::verify_elliptic_E2F(b, m, t, c, psi); });
                 }
             });
         }},
        {"appendix_A1",
         [](Builder& B) {
             elliptic_grid(B, false, [&](const ff::Base& b, int m, const AddChar& psi) {
                 for (i64 c = 1; c < b.ext(m).units(); ++c)
                     if (B.pick(B.cfg.chi, c))
                         B.add([b, m, c, psi] { return sums::verify_appendix_A1(b, m, c, psi); });
             });
         }},
        {"appendix_A2",
         [](Builder& B) {
             elliptic_grid(B, false, [&](const ff::Base& b, int m, const AddChar& psi) {
                 const ff::Field& K2 = b.ext(2 * m);
                 const ff::Base bk{b.p, b.f * m};
                 for (i64 c = 0; c < K2.units(); ++c) {
                     if (!B.pick(B.cfg.chi, c)) continue;
                     if (chars::is_conjugate_dual(make_mult_char(K2, c), bk, 2)) {
                         ++B.void_points;
                         continue;
                     }
                     for (i64 t = 0; t < ff::ipow(b.q(), m) + 1; ++t)
                         if (B.pick(B.cfg.theta, t))
                             B.add([b, m, t, c, psi] { return sums::verify_appendix_A2(b, m, t, c, psi); });
                 }
             });
         }},
        {"appendix_C_split",
         [](Builder& B) {
             torus_grid(B, [&](const ff::Base& b, int ef, int k, const AddChar& psi) {
                 const ff::Field& E = b.ext(ef);
                 for (i64 c = 0; c < E.units(); ++c) {
                     if (!B.pick(B.cfg.chi, c) || !chars::is_conjugate_dual(make_mult_char(E, c), b, ef)) continue;
                     for (i64 a = 0; a < b.ext(ef * k).units(); ++a)
                         if (B.pick(B.cfg.alpha, a))
                             B.add([b, ef, k, a, c, psi] {
                                 return sums::verify_appendix_C_split(b, ef, k, a, c, psi);
                             });
                 }
             });
         }},
        {"appendix_C_elliptic_EF",
         [](Builder& B) {
             elliptic_grid(B, false, [&](const ff::Base& b, int m, const AddChar& psi) {
                 const ff::Field& F = b.field();
                 for (i64 c = 0; c < F.units(); ++c) {
                     if (!B.pick(B.cfg.chi, c) || !make_mult_char(F, c).pow(2).trivial()) continue;
                     for (i64 t = 0; t < ff::ipow(b.q(), m) + 1; ++t)
                         if (B.pick(B.cfg.theta, t))
                             B.add([b, m, t, c, psi] { return sums::verify_appendix_C_elliptic_EF(b, m, t, c, psi); });
                 }
             });
         }},
        {"appendix_C_elliptic_E2F",
         [](Builder& B) {
             elliptic_grid(B, true, [&](const ff::Base& b, int m, const AddChar& psi) {
                 const ff::Field& E = b.ext(2);
                 for (i64 c = 0; c < E.units(); ++c) {
                     if (!B.pick(B.cfg.chi, c) || !chars::is_conjugate_dual(make_mult_char(E, c), b, 2)) continue;
                     for (i64 t = 0; t < ff::ipow(b.q(), m) + 1; ++t)
                         if (B.pick(B.cfg.theta, t))
                             B.add([b, m, t, c, psi] {
                                 return sums::verify_appendix_C_elliptic_E2F(b, m, t, c, psi);
                             });
                 }
             });
         }},
        {"li_hu_kernel",
         [](Builder& B) {
             for (long long q : B.cfg.q) {
                 if (q > 9) continue;
                 const ff::Base b = parse_base(q);
                 const ff::Field& E = b.field();
                 for (const auto& psi : B.psis(b.p))
                     for (int k : {1, 2}) {
                         if (k == 2 && q != 3) continue;
                         const auto& els = ff::general_linear(E, k);
                         for (size_t i = 0; i < els.size(); ++i)
                             B.add([&E, &els, i, psi] { return sums::verify_li_hu(E, els[i], psi); });
                     }
             }
         }},
        {"kondo",
         [](Builder& B) {
             for (long long q : B.cfg.q) {
                 if (!gl2_q(q)) continue;
                 const auto& t = gl2::gl2_char_table(static_cast<int>(q));
                 for (const auto& psi : B.psis(static_cast<int>(q)))
                     for (size_t r = 0; r < t.rows.size(); ++r)
                         for (i64 c = 0; c < t.F().units(); ++c)
                             if (B.pick(B.cfg.chi, c))
                                 B.add([&t, r, c, psi] {
                                     return gl2::verify_kondo(t, t.rows[r], make_mult_char(t.F(), c), psi);
                                 });
             }
         }},
        {"gl_jacobi",
         [](Builder& B) {
             for (long long q : B.cfg.q) {
                 if (!gl2_q(q)) continue;
                 const auto& t = gl2::gl2_char_table(static_cast<int>(q));
                 for (const auto& psi : B.psis(static_cast<int>(q)))
                     for (size_t r = 0; r < t.rows.size(); ++r)
                         for (i64 c = 0; c < t.F().units(); ++c) {
                             if (!B.pick(B.cfg.chi, c)) continue;
                             if (c == 0 && gl2::trivial_in_support(t.rows[r])) {
                                 ++B.void_points;
                                 continue;
                             }
                             B.add([&t, r, c, psi] {
                                 return gl2::verify_jacobi(t, t.rows[r], make_mult_char(t.F(), c), psi);
                             });
                         }
             }
         }},
        {"singular_vanishing",
         [](Builder& B) {
             for (long long q : B.cfg.q) {
                 if (!gl2_q(q)) continue;
                 const int qi = static_cast<int>(q);
                 const ff::Field& F = ff::Field::get(qi, 1);
                 for (const auto& psi : B.psis(qi))
                     for (const auto& X : gl2::singular_representatives(qi))
                         for (i64 c = 1; c < F.units(); ++c)
                             if (B.pick(B.cfg.chi, c))
                                 B.add([qi, X, &F, c, psi] {
                                     return gl2::verify_singular_vanishing(qi, X, make_mult_char(F, c), psi);
                                 });
             }
         }},
        {"gl2_dl_pairing",
         [](Builder& B) {
             for (long long q : B.cfg.q) {
                 if (!gl2_q(q)) continue;
                 const int qi = static_cast<int>(q);
                 const auto& t = gl2::gl2_char_table(qi);
                 const i64 n = t.F().units();
                 for (const auto& psi : B.psis(qi))
                     for (i64 c = 0; c < n; ++c) {
                         if (!B.pick(B.cfg.chi, c)) continue;
                         for (auto fn : {gl2::TestFunction::ChiDet, gl2::TestFunction::Jacobi}) {
                             if (fn == gl2::TestFunction::Jacobi && c == 0) {
                                 ++B.void_points;
                                 continue;
                             }
                             const auto chi = make_mult_char(t.F(), c);
                             for (i64 a1 = 0; a1 < n; ++a1)
                                 for (i64 a2 = 0; a2 < n; ++a2)
                                     B.add([=] {
                                         return gl2::dl_pairing_check_gl2(qi, gl2::TorusKind::Split, {a1, a2}, fn, chi,
                                                                          psi);
                                     });
                             for (const auto& r : t.rows)
                                 if (r.family == gl2::RowFamily::Cuspidal) {
                                     const i64 b = r.params[0];
                                     B.add([=] {
                                         return gl2::dl_pairing_check_gl2(qi, gl2::TorusKind::Elliptic, {b}, fn, chi,
                                                                          psi);
                                     });
                                 }
                         }
                     }
             }
         }},
        {"gl2_table",
         [](Builder& B) {
             for (long long q : B.cfg.q) {
                 if (!gl2_q(q)) continue;
                 const int qi = static_cast<int>(q);
                 const auto& t = gl2::gl2_char_table(qi);
                 const AddChar psi{qi, 1};
                 B.add([&t] {
                     i64 total = 0;
                     for (const auto& c : t.classes) total += c.size;
                     json p;
                     p["q"] = t.q;
                     p["classes"] = t.classes.size();
                     return make_exact_report("class_sizes", p,
                                              total == t.order() &&
                                                  static_cast<i64>(t.classes.size()) == i64{t.q} * t.q - 1,
                                              static_cast<double>(total), static_cast<double>(t.order()));
                 });
                 B.add([&t] {
                     double s = 0;
                     for (const auto& r : t.rows) s += static_cast<double>(r.dim * r.dim);
                     json p;
                     p["q"] = t.q;
                     p["rows"] = t.rows.size();
                     return make_report("sum_of_squares", p, s, static_cast<double>(t.order()), 1);
                 });
                 for (size_t i = 0; i < t.rows.size(); ++i)
                     for (size_t j = i; j < t.rows.size(); ++j)
                         B.add([&t, i, j] {
                             json p;
                             p["q"] = t.q;
                             p["rows"] = {t.rows[i].name(), t.rows[j].name()};
                             return make_report("row_orthogonality", p, gl2::inner(t, t.rows[i].values, t.rows[j].values),
                                                i == j ? 1.0 : 0.0, static_cast<long long>(t.classes.size()));
                         });
                 for (size_t a = 0; a < t.classes.size(); ++a)
                     for (size_t b = a; b < t.classes.size(); ++b)
                         B.add([&t, a, b] {
                             chars::cplx s = 0;
                             for (const auto& r : t.rows) s += r.values[a] * std::conj(r.values[b]);
                             const double expect =
                                 a == b ? static_cast<double>(t.order()) / static_cast<double>(t.classes[a].size) : 0.0;
                             json p;
                             p["q"] = t.q;
                             p["classes"] = {a, b};
                             return make_report("column_orthogonality", p, s, expect,
                                                static_cast<long long>(t.rows.size()) * 10);
                         });
                 for (size_t r = 0; r < t.rows.size(); ++r)
                     B.add([&t, r, psi] {
                         return gl2::verify_kondo_scalar(t, t.rows[r], make_mult_char(t.F(), 1), psi);
                     });
             }
         }},
        {"torus_embedding",
         [](Builder& B) {
             for (const GroupSpec& g : group_grid(B)) {
                 const i64 nchi = g.base.ext(groups::degree_EF(g)).units();
                 for (const auto& td : groups::torus_catalog(g))
                     for (i64 c = 0; c < nchi; ++c)
                         if (B.pick(B.cfg.chi, c)) B.add([td, g, c] { return groups::verify_torus_embedding(td, groups::make_chi(g, c)); });
             }
         }},
        {"dl_main",
         [](Builder& B) {
             dl_grid(B, [&](const auto& td, const auto& th, const auto& chi, const AddChar& psi) {
                 if (groups::chi_conjugate_dual(td.group, chi)) {
                     ++B.void_points;
                     return;
                 }
                 B.add([td, th, chi, psi] { return groups::verify_dl(td, th, chi, psi); });
             });
         }},
        {"dl_multiplicativity",
         [](Builder& B) {
             dl_grid(B, [&](const auto& td, const auto& th, const auto& chi, const AddChar& psi) {
                 if (td.lambda_plus.size() + td.lambda_minus.size() < 2) return;
                 if (groups::chi_conjugate_dual(td.group, chi)) {
                     ++B.void_points;
                     return;
                 }
                 B.add([td, th, chi, psi] { return groups::verify_dl_multiplicativity(td, th, chi, psi); });
             });
         }},
        {"appendix_C_dl",
         [](Builder& B) {
             dl_grid(B, [&](const auto& td, const auto& th, const auto& chi, const AddChar& psi) {
                 if (!groups::chi_conjugate_dual(td.group, chi)) return;
                 if (!groups::appendix_C_dl_applies(td, th, chi)) {
                     ++B.void_points;
                     return;
                 }
                 B.add([td, th, chi, psi] { return groups::verify_appendix_C_dl(td, th, chi, psi); });
             });
         }},
        {"geometric_conjugacy",
         [](Builder& B) {
             for (long long q : B.cfg.q) {
                 const ff::Base b = parse_base(q);
                 for (const auto& psi : B.psis(b.p))
                     for (i64 t = 0; t < b.q() + 1; ++t)
                         if (B.pick(B.cfg.theta, t))
                             B.add([b, t, psi] { return groups::verify_geometric_conjugacy(b, t, psi); });
             }
         }},
    };
    return reg;
}

Report failure_report(const std::string& suite, const std::string& what)
{
    Report r;
    r.identity = suite;
    r.params["error"] = what;
    r.abs_err = 0;
    r.pass = false;
    return r;
}

void validate(const RunConfig& cfg)
{
    if (cfg.q.empty()) throw UsageError("verify: empty q list");
    for (long long q : cfg.q) parse_base(q);
    for (int k : cfg.k)
        if (k < 1 || k > 3) throw UsageError("verify: k must be in [1, 3]");
    for (int m : cfg.m)
        if (m < 1 || m > 3) throw UsageError("verify: m must be in [1, 3]");
    if (cfg.psi_scale.empty()) throw UsageError("verify: empty psi scale list");
    for (int c : cfg.psi_scale)
        if (c < 1) throw UsageError("verify: psi scale must be positive");
    if (cfg.sample < 0) throw UsageError("verify: sample must be non-negative");
    if (cfg.workers < 1 || cfg.workers > 256) throw UsageError("verify: workers must be in [1, 256]");
    if (cfg.tol && !(*cfg.tol >= 0)) throw UsageError("verify: tolerance must be non-negative");
    for (const auto& g : cfg.groups) {
        try {
            groups::validate(GroupSpec{g.type, g.n, ff::Base{3, 1}});
        } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
        }
    }
}

// FNV-1a, stable across standard libraries so seeded samples reproduce everywhere.
std::uint32_t suite_hash(const std::string& s)
{
    std::uint32_t h = 2166136261u;
    for (unsigned char c : s) h = (h ^ c) * 16777619u;
    return h;
}

std::string void_reason(const std::string& suite)
{
    if (suite == "elliptic_EF" || suite == "split_II") return "E=F generic suites require q \xE2\x89\xA5 5";
    return "suite " + suite + " has no admissible grid point";
}

}  // namespace

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names = [] {
        std::vector<std::string> v;
        for (const auto& [n, g] : registry()) v.push_back(n);
        return v;
    }();
    return names;
}

std::vector<GroupChoice> default_groups()
{
    std::vector<GroupChoice> out;
    for (GroupType t : {GroupType::Sp, GroupType::SO_odd, GroupType::SO_plus, GroupType::SO_minus, GroupType::U,
                        GroupType::GSp, GroupType::GSO_plus, GroupType::GSO_minus})
        for (int n : {1, 2}) out.push_back({t, n});
    return out;
}

ff::Base parse_base(long long q)
{
    if (q < 3 || q > 2401) throw UsageError("verify: q must be an odd prime power in [3, 2401], got " + std::to_string(q));
    const auto pf = ff::prime_factors(q);
    if (pf.size() != 1 || pf[0] == 2)
        throw UsageError("verify: q must be an odd prime power, got " + std::to_string(q));
    int f = 0;
    for (long long r = q; r > 1; r /= pf[0]) ++f;
    return ff::Base{static_cast<int>(pf[0]), f};
}

RunResult run(const RunConfig& cfg)
{
    validate(cfg);
    std::vector<std::string> suites;
    bool expanded = false;
    for (const auto& s : cfg.suites) {
        if (s == "all") {
            expanded = true;
            for (const auto& n : suite_names()) suites.push_back(n);
        } else if (std::find(suite_names().begin(), suite_names().end(), s) != suite_names().end()) {
            suites.push_back(s);
        } else {
            throw UsageError("verify: unknown suite '" + s + "'");
        }
    }
    std::sort(suites.begin(), suites.end());
    suites.erase(std::unique(suites.begin(), suites.end()), suites.end());
    if (suites.empty()) throw UsageError("verify: no suite selected");

    std::vector<std::pair<size_t, Task>> work;
    RunResult res;
    for (size_t si = 0; si < suites.size(); ++si) {
        const auto& name = suites[si];
        const auto it = std::find_if(registry().begin(), registry().end(), [&](const auto& e) { return e.first == name; });
        Builder B{cfg, {}, 0};
        it->second(B);
        if (B.tasks.empty() && !expanded) throw UsageError("verify: " + void_reason(name));
        std::vector<size_t> idx(B.tasks.size());
        for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
        if (cfg.sample > 0 && static_cast<long long>(idx.size()) > cfg.sample) {
            std::seed_seq seq{static_cast<std::uint32_t>(cfg.seed), static_cast<std::uint32_t>(cfg.seed >> 32),
                              suite_hash(name)};
            std::mt19937_64 rng(seq);
            std::vector<size_t> chosen;
            std::sample(idx.begin(), idx.end(), std::back_inserter(chosen), cfg.sample, rng);
            idx = std::move(chosen);
        }
        for (size_t i : idx) work.emplace_back(si, std::move(B.tasks[i]));
        SuiteSummary s;
        s.suite = name;
        s.void_points = B.void_points;
        res.summary.push_back(s);
    }

    std::vector<Report> out(work.size());
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i; (i = next.fetch_add(1)) < work.size();) {
            try {
                out[i] = work[i].second();
            } catch (const std::exception& e) {
                out[i] = failure_report(suites[work[i].first], e.what());
            }
            Report& r = out[i];
            if (cfg.tol && r.tol > 0) {
                r.tol = *cfg.tol;
                r.pass = std::isfinite(r.abs_err) && r.abs_err <= r.tol;
            }
        }
    };
    const int nw = std::min<int>(cfg.workers, std::max<int>(1, static_cast<int>(work.size())));
    std::vector<std::thread> pool;
    for (int w = 1; w < nw; ++w) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();

    for (size_t i = 0; i < work.size(); ++i) {
        SuiteSummary& s = res.summary[work[i].first];
        ++s.checks;
        if (!out[i].pass) ++s.failures;
        s.max_abs_err = std::max(s.max_abs_err, out[i].abs_err);
    }
    for (const auto& s : res.summary) res.all_pass = res.all_pass && s.failures == 0;
    res.reports = std::move(out);
    sort_reports(res.reports);
    return res;
}

json summary_json(const SuiteSummary& s)
{
    json j;
    j["suite"] = s.suite;
    j["checks"] = s.checks;
    j["failures"] = s.failures;
    j["void_points"] = s.void_points;
    j["max_abs_err"] = s.max_abs_err;
    return j;
}

namespace {

json field_header(const RunConfig& cfg)
{
    json fields = json::array();
    std::set<std::pair<int, int>> seen;
    for (long long q : cfg.q) {
        const ff::Base b = parse_base(q);
        for (int d : {1, 2})
            if (seen.insert({b.p, b.f * d}).second) {
                const ff::Field& K = b.ext(d);
                json f;
                f["field"] = K.name();
                f["modulus"] = K.modulus_string();
                f["generator"] = K.gen_string();
                fields.push_back(f);
            }
    }
    return fields;
}

}  // namespace

json report_document(const RunConfig& cfg, const RunResult& r)
{
    json doc;
    json h;
    h["tool"] = "charforge";
    h["suites"] = cfg.suites;
    h["q"] = cfg.q;
    h["seed"] = cfg.seed;
    h["sample"] = cfg.sample;
    h["fields"] = field_header(cfg);
    doc["header"] = h;
    doc["reports"] = json::array();
    for (const auto& rep : r.reports) doc["reports"].push_back(to_json(rep));
    doc["summary"] = json::array();
    for (const auto& s : r.summary) doc["summary"].push_back(summary_json(s));
    doc["pass"] = r.all_pass;
    return doc;
}

std::string report_csv(const RunConfig& cfg, const RunResult& r)
{
    std::ostringstream os;
    for (const auto& f : field_header(cfg))
        os << "# " << f["field"].get<std::string>() << " modulus " << f["modulus"].get<std::string>() << " generator "
           << f["generator"].get<std::string>() << "\n";
    os << "identity,params,lhs_re,lhs_im,rhs_re,rhs_im,abs_err,tol,pass\n";
    for (const auto& rep : r.reports) {
        const json j = to_json(rep);
        std::string params = j["params"].dump();
        std::string quoted;
        for (char c : params) quoted += c == '"' ? std::string("\"\"") : std::string(1, c);
        os << rep.identity << ",\"" << quoted << "\"," << j["lhs"][0].dump() << "," << j["lhs"][1].dump() << ","
           << j["rhs"][0].dump() << "," << j["rhs"][1].dump() << "," << j["abs_err"].dump() << "," << j["tol"].dump()
           << "," << (rep.pass ? "true" : "false") << "\n";
    }
    return os.str();
}

}  // namespace charforge::harness
