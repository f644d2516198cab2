#include "identities.hpp"

#include <cmath>
#include <stdexcept>

namespace charforge::sums {

using chars::make_mult_char;
using chars::NormOneChar;

namespace {

json base_params(const ff::Base& b, const AddChar& psi)
{
    json j;
    j["q"] = b.q();
    j["psi_scale"] = psi.c;
    return j;
}

const Field& field_E(const ff::Base& b, int ef)
{
    if (ef != 1 && ef != 2) throw std::invalid_argument("verify: [E:F] must be 1 or 2");
    return b.ext(ef);
}

// chi(N_{K/E}(y)) for y in K, zero at y = 0.
cplx chi_norm(const MultChar& chi, const Field& K, Elem y)
{
    if (y == ff::ZERO) return 0;
    return chars::eval_in(chi, K, K.norm_to(y, chi.field->e()));
}

double sqrt_size(const Field& K)
{
    return std::sqrt(static_cast<double>(K.size()));
}

void require_positive(int k, const char* what)
{
    if (k < 1 || k > 3) throw std::invalid_argument(std::string("verify: ") + what + " must be in [1, 3]");
}

}  // namespace

cplx split_sum(const ff::Base& b, int ef, const MultChar& alpha, const MultChar& chi)
{
    const Field& K = *alpha.field;
    cplx s = 0;
    for (i64 xi = 0; xi < K.units(); ++xi) {
        const Elem x = static_cast<Elem>(xi);
        if (x == K.minus_one()) continue;
        // x-bar = (x^sigma)^{-1}, with sigma the q-power map when E != F.
        const Elem xb = ef == 1 ? K.inv(x) : K.inv(K.frobenius(x, b.f));
        s += alpha(x) * chi_norm(chi, K, K.add(K.one(), x)) * chi_norm(chi, K, K.add(K.one(), xb));
    }
    return s;
}

cplx elliptic_sum(const ff::Base& b, const NormOneChar& theta, const MultChar& chi)
{
    const auto N = ff::norm_one_subgroup(b, theta.m);
    const Field& K = *N.field;
    cplx s = 0;
    for (Elem x : N.elements) {
        if (x == K.minus_one()) continue;
        s += theta(x) * chi_norm(chi, K, K.add(K.one(), x));
    }
    return s;
}

Report verify_gauss_core(const MultChar& alpha, const AddChar& psi, double scale)
{
    const Field& K = *alpha.field;
    const cplx g = gauss(alpha, psi);
    const double expect = alpha.trivial() ? 1.0 / sqrt_size(K) : 1.0;
    json p;
    p["field"] = K.size();
    p["alpha"] = alpha.a;
    p["psi_scale"] = psi.c;
    return make_report("gauss_core", p, std::abs(g), expect, K.units(), scale);
}

Report verify_hasse_davenport(const ff::Base& b, int m, i64 beta, const AddChar& psi, double scale)
{
    require_positive(m, "m");
    const MultChar bt = make_mult_char(b.field(), beta);
    const Field& Km = b.ext(m);
    const cplx lhs = gauss(chars::lift_norm(bt, Km), psi);
    const cplx rhs = std::pow(gauss(bt, psi), m);
    json p = base_params(b, psi);
    p["m"] = m;
    p["beta"] = bt.a;
    return make_report("hasse_davenport", p, lhs, rhs, Km.units() + b.field().units(), scale);
}

Report verify_reflection(const MultChar& chi, const AddChar& psi, double scale)
{
    if (chi.trivial()) throw std::invalid_argument("reflection: chi must be nontrivial");
    const Field& K = *chi.field;
    const cplx lhs = gauss(chi, psi) * gauss(chi.inverse(), psi);
    const cplx rhs = chi(K.minus_one());
    json p;
    p["field"] = K.size();
    p["chi"] = chi.a;
    p["psi_scale"] = psi.c;
    return make_report("reflection", p, lhs, rhs, 2 * K.units(), scale);
}

Report verify_conjugation(const MultChar& alpha, const AddChar& psi, double scale)
{
    const Field& K = *alpha.field;
    const cplx lhs = gauss(alpha.inverse(), psi);
    const cplx rhs = alpha(K.minus_one()) * std::conj(gauss(alpha, psi));
    json p;
    p["field"] = K.size();
    p["alpha"] = alpha.a;
    p["psi_scale"] = psi.c;
    return make_report("conjugation", p, lhs, rhs, 2 * K.units(), scale);
}

Report verify_frobenius_invariance(const ff::Base& b, int ef, int k, i64 alpha, i64 chi, const AddChar& psi,
                                   double scale)
{
    require_positive(k, "k");
    const Field& E = field_E(b, ef);
    const Field& Ek = b.ext(ef * k);
    const MultChar a = make_mult_char(Ek, alpha), c = make_mult_char(E, chi);
    const cplx lhs = gauss_twisted(chars::frob(a, b.q()), chars::frob(c, b.q()), psi);
    const cplx rhs = gauss_twisted(a, c, psi);
    json p = base_params(b, psi);
    p["ef"] = ef;
    p["k"] = k;
    p["alpha"] = a.a;
    p["chi"] = c.a;
    return make_report("frobenius_invariance", p, lhs, rhs, 2 * Ek.units(), scale);
}

Report verify_twisted_definition(const MultChar& alpha, const MultChar& chi, const AddChar& psi, double scale)
{
    const cplx lhs = gauss_twisted_direct(alpha, chi, psi);
    const cplx rhs = gauss(alpha * chars::lift_norm(chi, *alpha.field), psi);
    json p;
    p["field"] = alpha.field->size();
    p["base"] = chi.field->size();
    p["alpha"] = alpha.a;
    p["chi"] = chi.a;
    p["psi_scale"] = psi.c;
    return make_report("twisted_definition", p, lhs, rhs, 2 * alpha.field->units(), scale);
}

Report verify_torus_product(const std::vector<MultChar>& comps, const MultChar& chi, const AddChar& psi,
                            double scale)
{
    const cplx lhs = gauss_torus_direct(comps, chi, psi);
    const cplx rhs = gauss_torus(comps, chi, psi);
    i64 terms = 1, rterms = 0;
    json parts = json::array(), exps = json::array();
    for (const auto& c : comps) {
        terms *= c.field->units();
        rterms += c.field->units();
        parts.push_back(c.field->size());
        exps.push_back(c.a);
    }
    json p;
    p["base"] = chi.field->size();
    p["parts"] = parts;
    p["alpha"] = exps;
    p["chi"] = chi.a;
    p["psi_scale"] = psi.c;
    return make_report("torus_product", p, lhs, rhs, terms + rterms, scale);
}

Report verify_split_I(const ff::Base& b, int ef, int k, i64 alpha, i64 chi, const AddChar& psi, double scale)
{
    require_positive(k, "k");
    const Field& E = field_E(b, ef);
    const Field& Ek = b.ext(ef * k);
    const MultChar a = make_mult_char(Ek, alpha), c = make_mult_char(E, chi);
    if (c.trivial()) throw std::invalid_argument("split_I: chi must be nontrivial");
    cplx lhs = 0;
    for (i64 xi = 0; xi < Ek.units(); ++xi) {
        const Elem x = static_cast<Elem>(xi);
        if (x == Ek.minus_one()) continue;
        lhs += a(x) * chi_norm(c, Ek, Ek.add(Ek.one(), x));
    }
    const cplx sgn = std::pow(c(E.minus_one()), k);
    const cplx rhs = -sgn * sqrt_size(Ek) * gauss_twisted(a, c, psi) * gauss(a.inverse(), psi) *
                     gauss(chars::lift_norm(c.inverse(), Ek), psi);
    json p = base_params(b, psi);
    p["ef"] = ef;
    p["k"] = k;
    p["alpha"] = a.a;
    p["chi"] = c.a;
    return make_report("split_I", p, lhs, rhs, 4 * Ek.units(), scale);
}

Report verify_split_II(const ff::Base& b, int ef, int k, i64 alpha, i64 chi, const AddChar& psi, double scale)
{
    require_positive(k, "k");
    const Field& E = field_E(b, ef);
    const Field& Ek = b.ext(ef * k);
    const MultChar a = make_mult_char(Ek, alpha), c = make_mult_char(E, chi);
    if (chars::is_conjugate_dual(c, b, ef))
        throw std::invalid_argument("split_II: chi^{1+sigma} must be nontrivial");
    const cplx lhs = split_sum(b, ef, a, c);
    const MultChar abar = ef == 1 ? a.inverse() : chars::frob(a, b.q()).inverse();
    const cplx t = gauss(chars::one_plus_sigma(c, b, ef).inverse(), psi);
    const cplx rhs = -std::pow(static_cast<double>(E.size()), k / 2.0) * gauss_twisted(a, c, psi) *
                     gauss_twisted(abar, c, psi) * std::pow(t, k);
    json p = base_params(b, psi);
    p["ef"] = ef;
    p["k"] = k;
    p["alpha"] = a.a;
    p["chi"] = c.a;
    return make_report("split_II", p, lhs, rhs, Ek.units() + 2 * Ek.units() + E.units(), scale);
}

Report verify_elliptic_EF(const ff::Base& b, int m, i64 theta, i64 chi, const AddChar& psi, double scale)
{
    require_positive(m, "m");
    const Field& F = b.field();
    const MultChar c = make_mult_char(F, chi);
    if (c.pow(2).trivial()) throw std::invalid_argument("elliptic_EF: chi^2 must be nontrivial");
    const NormOneChar th = chars::make_norm_one_char(b, m, theta);
    const Field& K2 = th.field();
    const cplx lhs = elliptic_sum(b, th, c);
    const cplx rhs = std::pow(static_cast<double>(b.q()), m / 2.0) * std::pow(gauss(c.pow(-2), psi), m) *
                     gauss_twisted(chars::transfer_theta(th), c, psi);
    json p = base_params(b, psi);
    p["m"] = m;
    p["theta"] = th.b;
    p["chi"] = c.a;
    return make_report("elliptic_EF", p, lhs, rhs, th.order() + K2.units() + F.units(), scale);
}

Report verify_elliptic_E2F(const ff::Base& b, int m, i64 theta, i64 chi, const AddChar& psi, double scale)
{
    require_positive(m, "m");
    if (m % 2 == 0) throw std::invalid_argument("elliptic_E2F: m must be odd");
    const Field& E = b.ext(2);
    const MultChar c = make_mult_char(E, chi);
    if (chars::is_conjugate_dual(c, b, 2)) throw std::invalid_argument("elliptic_E2F: chi^{1+q} must be nontrivial");
    const NormOneChar th = chars::make_norm_one_char(b, m, theta);
    const Field& K2 = th.field();
    const cplx lhs = elliptic_sum(b, th, c);
    const MultChar res = chars::restrict_to(c.inverse(), b.field());
    const cplx rhs = std::pow(static_cast<double>(b.q()), m / 2.0) * c(E.minus_one()) * std::pow(gauss(res, psi), m) *
                     gauss_twisted(chars::transfer_theta(th), c, psi);
    json p = base_params(b, psi);
    p["m"] = m;
    p["theta"] = th.b;
    p["chi"] = c.a;
    return make_report("elliptic_E2F", p, lhs, rhs, th.order() + K2.units() + b.field().units(), scale);
}

Report verify_appendix_A1(const ff::Base& b, int m, i64 chi, const AddChar& psi, double scale)
{
    require_positive(m, "m");
    const Field& K = b.ext(m);
    const Field& K2 = b.ext(2 * m);
    const MultChar c = make_mult_char(K, chi);
    if (c.trivial()) throw std::invalid_argument("appendix_A1: chi must be nontrivial");
    cplx lhs = 0;
    for (i64 xi = 0; xi < K2.units(); ++xi) {
        const Elem x = static_cast<Elem>(xi);
        const Elem tr = K2.trace_to(x, K.e());
        if (tr == ff::ZERO) continue;
        lhs += chi_norm(c, K2, K2.div(x, tr));
    }
    const double Q = static_cast<double>(K.size());
    const cplx rhs = std::sqrt(Q) * (Q - 1) * std::pow(gauss(c.inverse(), psi), 2) * gauss(c.pow(2), psi);
    json p = base_params(b, psi);
    p["m"] = m;
    p["chi"] = c.a;
    return make_report("appendix_A1", p, lhs, rhs, K2.units() + 2 * K.units(), scale);
}

Report verify_appendix_A2(const ff::Base& b, int m, i64 theta, i64 chi, const AddChar& psi, double scale)
{
    require_positive(m, "m");
    const Field& K = b.ext(m);
    const NormOneChar th = chars::make_norm_one_char(b, m, theta);
    const Field& K2 = th.field();
    const MultChar c = make_mult_char(K2, chi);
    const ff::Base bk{b.p, b.f * m};
    if (chars::is_conjugate_dual(c, bk, 2)) throw std::invalid_argument("appendix_A2: chi^{1+|K|} must be nontrivial");
    const auto N = ff::norm_one_subgroup(b, m);
    cplx lhs = 0;
    for (Elem x : N.elements) {
        if (x == K2.minus_one()) continue;
        lhs += th(x) * c(K2.add(K2.one(), x));
    }
    const MultChar res = chars::restrict_to(c.inverse(), K);
    const cplx rhs = std::sqrt(static_cast<double>(K.size())) * c(K2.minus_one()) *
                     gauss_twisted(chars::transfer_theta(th), c, psi) * gauss(res, psi);
    json p = base_params(b, psi);
    p["m"] = m;
    p["theta"] = th.b;
    p["chi"] = c.a;
    return make_report("appendix_A2", p, lhs, rhs, N.order + K2.units() + K.units(), scale);
}

Report verify_appendix_C_split(const ff::Base& b, int ef, int k, i64 alpha, i64 chi, const AddChar& psi,
                               double scale)
{
    require_positive(k, "k");
    const Field& E = field_E(b, ef);
    const Field& Ek = b.ext(ef * k);
    const MultChar a = make_mult_char(Ek, alpha), c = make_mult_char(E, chi);
    if (!chars::is_conjugate_dual(c, b, ef))
        throw std::invalid_argument("appendix_C_split: chi must be conjugate-dual");
    const cplx lhs = split_sum(b, ef, a, c);
    const bool exceptional = a == chars::lift_norm(c.inverse(), Ek);
    cplx rhs;
    if (exceptional) {
        rhs = static_cast<double>(Ek.size()) - 2.0;
    } else {
        const MultChar abar = ef == 1 ? a.inverse() : chars::frob(a, b.q()).inverse();
        rhs = -gauss_twisted(a, c, psi) * gauss_twisted(abar, c, psi);
    }
    json p = base_params(b, psi);
    p["ef"] = ef;
    p["k"] = k;
    p["alpha"] = a.a;
    p["chi"] = c.a;
    p["branch"] = exceptional ? "alpha_eq_chi_inv_norm" : "generic";
    return make_report("appendix_C_split", p, lhs, rhs, 3 * Ek.units(), scale);
}

Report verify_appendix_C_elliptic_EF(const ff::Base& b, int m, i64 theta, i64 chi, const AddChar& psi,
                                     double scale)
{
    require_positive(m, "m");
    const Field& F = b.field();
    const MultChar c = make_mult_char(F, chi);
    if (!c.pow(2).trivial()) throw std::invalid_argument("appendix_C_elliptic_EF: chi^2 must be trivial");
    const NormOneChar th = chars::make_norm_one_char(b, m, theta);
    const Field& K2 = th.field();
    const cplx lhs = elliptic_sum(b, th, c);
    const MultChar that = chars::transfer_theta(th);
    const bool exceptional = that == chars::lift_norm(c, K2);
    cplx rhs;
    std::string branch;
    if (!exceptional) {
        rhs = gauss_twisted(that, c, psi);
        branch = "generic";
    } else {
        // Every summand is 1 here, for trivial and quadratic chi alike.
        rhs = static_cast<double>(ff::ipow(b.q(), m));
        branch = c.trivial() ? "theta_hat_eq_chi_norm_trivial" : "theta_hat_eq_chi_norm_quadratic";
    }
    json p = base_params(b, psi);
    p["m"] = m;
    p["theta"] = th.b;
    p["chi"] = c.a;
    p["branch"] = branch;
    return make_report("appendix_C_elliptic_EF", p, lhs, rhs, th.order() + K2.units(), scale);
}

Report verify_appendix_C_elliptic_E2F(const ff::Base& b, int m, i64 theta, i64 chi, const AddChar& psi,
                                      double scale)
{
    require_positive(m, "m");
    if (m % 2 == 0) throw std::invalid_argument("appendix_C_elliptic_E2F: m must be odd");
    const Field& E = b.ext(2);
    const MultChar c = make_mult_char(E, chi);
    if (!chars::is_conjugate_dual(c, b, 2))
        throw std::invalid_argument("appendix_C_elliptic_E2F: chi must be conjugate-dual");
    const NormOneChar th = chars::make_norm_one_char(b, m, theta);
    const Field& K2 = th.field();
    const cplx lhs = elliptic_sum(b, th, c);
    const MultChar that = chars::transfer_theta(th);
    const bool exceptional = that == chars::lift_norm(c.inverse(), K2);
    const cplx rhs = exceptional ? cplx(static_cast<double>(ff::ipow(b.q(), m))) : gauss_twisted(that, c, psi);
    json p = base_params(b, psi);
    p["m"] = m;
    p["theta"] = th.b;
    p["chi"] = c.a;
    p["branch"] = exceptional ? "theta_hat_eq_chi_inv_norm" : "generic";
    return make_report("appendix_C_elliptic_E2F", p, lhs, rhs, th.order() + K2.units(), scale);
}

Report verify_li_hu(const Field& E, const ff::Mat& g, const AddChar& psi, double scale)
{
    const cplx lhs = jacobi_kernel_gl(E, g, make_mult_char(E, 0), psi);
    const double rhs = kernel_li_hu(E, g);
    json p;
    p["field"] = E.size();
    p["k"] = g.n;
    p["g"] = ff::to_string(E, g);
    p["psi_scale"] = psi.c;
    return make_report("li_hu_kernel", p, lhs, rhs, static_cast<long long>(ff::general_linear(E, g.n).size()), scale);
}

}  // namespace charforge::sums
