#include "chars.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>
#include <stdexcept>

namespace charforge::chars {

const std::vector<cplx>& roots_table(i64 n)
{
    static std::mutex mu;
    static std::map<i64, std::unique_ptr<std::vector<cplx>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[n];
    if (!slot) {
        slot = std::make_unique<std::vector<cplx>>(n);
        for (i64 k = 0; k < n; ++k) {
            const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(n);
            (*slot)[k] = cplx(std::cos(t), std::sin(t));
        }
    }
    return *slot;
}

cplx root_of_unity(i64 k, i64 n)
{
    return roots_table(n)[ff::mod(k, n)];
}

cplx MultChar::operator()(Elem x) const
{
    if (x == ff::ZERO) throw std::domain_error("mult_char: evaluation at zero");
    const i64 n = field->units();
    return roots_table(n)[static_cast<i64>(x) * a % n];
}

MultChar MultChar::inverse() const
{
    return {field, ff::mod(-a, modulus())};
}

MultChar MultChar::pow(i64 k) const
{
    const i64 n = modulus();
    return {field, ff::mod(a * ff::mod(k, n), n)};
}

MultChar MultChar::operator*(const MultChar& o) const
{
    if (field != o.field) throw std::invalid_argument("mult_char: product of characters on different fields");
    return {field, (a + o.a) % modulus()};
}

MultChar make_mult_char(const Field& F, i64 a)
{
    return {&F, ff::mod(a, F.units())};
}

cplx AddChar::operator()(const Field& F, Elem x) const
{
    if (F.p() != p) throw std::invalid_argument("add_char: characteristic mismatch");
    return roots_table(p)[static_cast<i64>(c) * F.trace_prime(x) % p];
}

AddChar make_add_char(int p, i64 c)
{
    const i64 r = ff::mod(c, p);
    if (r == 0) throw std::invalid_argument("add_char: scale must be nonzero mod p");
    return {p, static_cast<int>(r)};
}

cplx NormOneChar::operator()(Elem x) const
{
    const i64 step = ff::ipow(base.q(), m) - 1;
    if (x == ff::ZERO || x % step != 0) throw std::domain_error("norm_one_char: argument outside N_{2m}");
    const i64 ord = order();
    return roots_table(ord)[ff::mod(b, ord) * (x / step) % ord];
}

NormOneChar make_norm_one_char(const ff::Base& base, int m, i64 b)
{
    NormOneChar t{base, m, 0};
    t.b = ff::mod(b, t.order());
    return t;
}

MultChar lift_norm(const MultChar& chi, const Field& big)
{
    const auto& em = ff::embedding(*chi.field, big);
    const i64 small_n = chi.field->units();
    return {&big, chi.a * em.uinv % small_n * em.index % big.units()};
}

MultChar restrict_to(const MultChar& alpha, const Field& small)
{
    const auto& em = ff::embedding(small, *alpha.field);
    return {&small, alpha.a * em.u % small.units()};
}

cplx eval_in(const MultChar& chi, const Field& big, Elem y)
{
    return chi(ff::pull(ff::embedding(*chi.field, big), y));
}

MultChar frob(const MultChar& chi, i64 power)
{
    const i64 n = chi.modulus();
    return {chi.field, chi.a * ff::mod(power, n) % n};
}

MultChar sigma(const MultChar& chi, const ff::Base& b, int ef)
{
    if (ef == 1) return chi;
    if (ef != 2 || chi.field->e() % (2 * b.f) != 0 || chi.field->p() != b.p)
        throw std::invalid_argument("sigma: character field does not carry the quadratic base");
    return frob(chi, b.q());
}

MultChar bar(const MultChar& chi, const ff::Base& b, int ef)
{
    return sigma(chi, b, ef).inverse();
}

MultChar one_plus_sigma(const MultChar& chi, const ff::Base& b, int ef)
{
    return chi * sigma(chi, b, ef);
}

bool is_conjugate_dual(const MultChar& chi, const ff::Base& b, int ef)
{
    return one_plus_sigma(chi, b, ef).trivial();
}

i64 orbit_min(const MultChar& alpha, i64 qE)
{
    const i64 n = alpha.modulus();
    i64 best = alpha.a, x = alpha.a;
    for (;;) {
        x = x * (qE % n) % n;
        if (x == alpha.a) break;
        best = std::min(best, x);
    }
    return best;
}

bool is_regular(const MultChar& alpha, const Field& E)
{
    if (alpha.field->e() % E.e() != 0) throw std::invalid_argument("is_regular: field is not an extension of E");
    const int k = alpha.field->e() / E.e();
    const i64 n = alpha.modulus();
    i64 x = alpha.a;
    for (int j = 1; j < k; ++j) {
        x = x * (E.size() % n) % n;
        if (x == alpha.a) return false;
    }
    return true;
}

MultChar transfer_theta(const NormOneChar& theta)
{
    const Field& F = theta.field();
    const i64 step = ff::ipow(theta.base.q(), theta.m) - 1;
    return make_mult_char(F, -theta.b * step);
}

HatChar transfer_torus_char(const TorusChar& t, const ff::Base& b, int ef)
{
    HatChar h;
    for (const auto& alpha : t.split) {
        h.comps.push_back(alpha);
        // alpha^{-1} when E = F, alpha^{-q} when E = F_{q^2}
        h.comps.push_back(ef == 1 ? alpha.inverse() : frob(alpha, b.q()).inverse());
    }
    for (const auto& th : t.elliptic) h.comps.push_back(transfer_theta(th));
    return h;
}

HatChar canonical(const HatChar& h, const Field& E)
{
    HatChar c;
    for (const auto& x : h.comps) c.comps.push_back({x.field, orbit_min(x, E.size())});
    std::sort(c.comps.begin(), c.comps.end(), [](const MultChar& l, const MultChar& r) {
        if (l.field->size() != r.field->size()) return l.field->size() < r.field->size();
        return l.a < r.a;
    });
    return c;
}

}  // namespace charforge::chars
