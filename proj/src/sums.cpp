#include "sums.hpp"

#include "errors.hpp"

#include <cmath>
#include <stdexcept>

namespace charforge::sums {

namespace {

void require_psi(const AddChar& psi, const Field& K)
{
    if (psi.c % psi.p == 0) throw std::invalid_argument("gauss: additive character is trivial");
    if (psi.p != K.p()) throw std::invalid_argument("gauss: characteristic mismatch");
}

// N_{K/E}(x) as a product of Frobenius conjugates.
Elem norm_by_conjugates(const Field& K, const Field& E, Elem x)
{
    Elem y = K.one();
    for (int j = 0; j < K.e() / E.e(); ++j) y = K.mul(y, K.frobenius(x, E.e() * j));
    return y;
}

}  // namespace

cplx gauss(const MultChar& alpha, const AddChar& psi)
{
    const Field& K = *alpha.field;
    require_psi(psi, K);
    const i64 n = K.units();
    const auto& roots = chars::roots_table(n);
    const auto& proots = chars::roots_table(psi.p);
    const i64 step = ff::mod(-alpha.a, n);
    cplx s = 0;
    i64 e = 0;
    for (i64 x = 0; x < n; ++x) {
        s += roots[e] * proots[static_cast<i64>(psi.c) * K.trace_prime(static_cast<Elem>(x)) % psi.p];
        e += step;
        if (e >= n) e -= n;
    }
    return -s / std::sqrt(static_cast<double>(K.size()));
}

cplx gauss_twisted_direct(const MultChar& alpha, const MultChar& chi, const AddChar& psi)
{
    const Field& K = *alpha.field;
    const Field& E = *chi.field;
    require_psi(psi, K);
    if (K.p() != E.p() || K.e() % E.e() != 0) throw std::invalid_argument("gauss_twisted: chi is not on a subfield");
    const auto& em = ff::embedding(E, K);
    cplx s = 0;
    for (i64 x = 0; x < K.units(); ++x) {
        const Elem xe = static_cast<Elem>(x);
        const Elem nx = norm_by_conjugates(K, E, xe);
        s += std::conj(alpha(xe)) * std::conj(chi(ff::pull(em, nx))) * psi(K, xe);
    }
    return -s / std::sqrt(static_cast<double>(K.size()));
}

cplx gauss_twisted(const MultChar& alpha, const MultChar& chi, const AddChar& psi)
{
    return gauss(alpha * chars::lift_norm(chi, *alpha.field), psi);
}

cplx gauss_torus_direct(const std::vector<MultChar>& comps, const MultChar& chi, const AddChar& psi)
{
    if (comps.empty()) throw std::invalid_argument("gauss_torus: empty torus");
    const Field& E = *chi.field;
    i64 total = 1;
    int k = 0;
    std::vector<const ff::Embedding*> ems;
    for (const auto& c : comps) {
        if (c.field->p() != E.p() || c.field->e() % E.e() != 0)
            throw std::invalid_argument("gauss_torus: component field does not contain E");
        require_psi(psi, *c.field);
        total *= c.field->units();
        if (total > 50'000'000) throw LimitError("gauss_torus: torus too large for direct summation");
        k += c.field->e() / E.e();
        ems.push_back(&ff::embedding(E, *c.field));
    }
    const size_t l = comps.size();
    std::vector<i64> t(l, 0);
    cplx s = 0;
    for (i64 it = 0; it < total; ++it) {
        cplx a = 1;
        Elem det = E.one();
        int tr = 0;
        for (size_t j = 0; j < l; ++j) {
            const Field& K = *comps[j].field;
            const Elem x = static_cast<Elem>(t[j]);
            a *= std::conj(comps[j](x));
            det = E.mul(det, ff::pull(*ems[j], norm_by_conjugates(K, E, x)));
            tr += K.trace_prime(x);
        }
        s += a * std::conj(chi(det)) * chars::root_of_unity(static_cast<i64>(psi.c) * tr, psi.p);
        for (size_t j = 0; j < l; ++j) {
            if (++t[j] < comps[j].field->units()) break;
            t[j] = 0;
        }
    }
    const double sign = (l % 2) ? -1.0 : 1.0;
    return sign * s / std::pow(static_cast<double>(E.size()), k / 2.0);
}

cplx gauss_torus(const std::vector<MultChar>& comps, const MultChar& chi, const AddChar& psi)
{
    cplx r = 1;
    for (const auto& c : comps) r *= gauss_twisted(c, chi, psi);
    return r;
}

cplx jacobi_kernel_gl(const Field& E, const ff::Mat& g, const MultChar& chi, const AddChar& psi)
{
    if (chi.field != &E) throw std::invalid_argument("jacobi_kernel_gl: chi must live on the matrix field");
    const int k = g.n;
    if (k < 1 || k > 4) throw std::invalid_argument("jacobi_kernel_gl: k must be in [1, 4]");
    if (ff::det(E, g) == ff::ZERO) throw std::invalid_argument("jacobi_kernel_gl: g is not invertible");
    const ff::Mat ig = ff::mat_add(E, ff::identity(E, k), g);
    if (!chi.trivial()) {
        const Elem d = ff::det(E, ig);
        return d == ff::ZERO ? cplx(0) : chi(d);
    }
    if (k > 2 || E.size() > 9) throw LimitError("jacobi_kernel_gl: trivial chi is only summed for k <= 2, |E| <= 9");
    require_psi(psi, E);
    const auto& gl = ff::general_linear(E, k);
    // Scalar of the trivial representation: |E|^{-k^2/2} sum_h psi(tr h^{-1}) = |E|^{-k^2/2} sum_h psi(tr h).
    cplx g1 = 0, s = 0;
    for (const auto& h : gl) {
        g1 += psi(E, ff::trace(E, h));
        s += psi(E, ff::trace(E, ff::mat_mul(E, h, ig)));
    }
    const double norm = std::pow(static_cast<double>(E.size()), -k * k / 2.0);
    g1 *= norm;
    return norm * g1 * s;
}

double kernel_li_hu(const Field& E, const ff::Mat& g)
{
    const int k = g.n;
    const int r = ff::rank(E, ff::mat_add(E, ff::identity(E, k), g));
    const double Q = static_cast<double>(E.size());
    double v = ((k + r) % 2) ? -1.0 : 1.0;
    v /= std::pow(Q, k);
    for (int i = 1; i <= k - r; ++i) v *= std::pow(Q, i) - 1.0;
    return v;
}

cplx c_normalization(const ff::Base& b, int ef, int dim_F, int eps_G, const MultChar& chi, const AddChar& psi)
{
    if (ef == 1) {
        if (chi.field != &b.field()) throw std::invalid_argument("c_normalization: chi must live on F");
        const cplx t = gauss(chi.pow(-2), psi);
        if (dim_F % 2 == 0) return static_cast<double>(eps_G) * std::pow(t, dim_F / 2);
        return static_cast<double>(eps_G) * chi(chi.field->from_int(2)) * std::pow(t, (dim_F - 1) / 2);
    }
    if (ef != 2) throw std::invalid_argument("c_normalization: [E:F] must be 1 or 2");
    if (chi.field != &b.ext(2)) throw std::invalid_argument("c_normalization: chi must live on E");
    if (dim_F % 2 != 0) throw std::invalid_argument("c_normalization: hermitian space has even F-dimension");
    const int dim_E = dim_F / 2;
    const MultChar res = chars::restrict_to(chi.inverse(), b.field());
    const cplx s = chi(chi.field->minus_one()) * gauss(res, psi);
    return static_cast<double>(eps_G) * std::pow(s, dim_E);
}

int support_rank(const std::vector<MultChar>& support, const Field& E)
{
    int k = 0;
    for (const auto& a : support) {
        if (a.field->p() != E.p() || a.field->e() % E.e() != 0)
            throw std::invalid_argument("kondo_product: support character not over E");
        k += a.field->e() / E.e();
    }
    return k;
}

KondoValue kondo_product(const std::vector<MultChar>& support, const MultChar& chi, const AddChar& psi)
{
    const Field& E = *chi.field;
    KondoValue kv{1.0, false};
    const int k = support_rank(support, E);
    for (const auto& a : support) {
        if (a.field->e() != E.e() && !chars::is_regular(a, E)) kv.nonregular = true;
        kv.value *= gauss_twisted(a, chi, psi);
    }
    if (k % 2) kv.value = -kv.value;
    return kv;
}

std::vector<MultChar> dual_support(const std::vector<MultChar>& support)
{
    std::vector<MultChar> d;
    for (const auto& a : support) d.push_back(a.inverse());
    return d;
}

cplx gamma_dbl_gl(const std::vector<MultChar>& support, const MultChar& chi, const AddChar& psi,
                  const ff::Base& b, int ef)
{
    const MultChar chis = chars::sigma(chi, b, ef);
    return kondo_product(dual_support(support), chis, psi).value * kondo_product(support, chi, psi).value;
}

cplx jacobi_scalar_gl_formula(const std::vector<MultChar>& support, const MultChar& chi, const AddChar& psi)
{
    const Field& E = *chi.field;
    const int k = support_rank(support, E);
    const MultChar one = chars::make_mult_char(E, 0);
    const cplx pref = std::pow(chi(E.minus_one()) * -gauss(chi.inverse(), psi), k);
    return pref * kondo_product(dual_support(support), one, psi).value * kondo_product(support, chi, psi).value;
}

}  // namespace charforge::sums
