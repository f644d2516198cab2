#pragma once

#include <string>
#include <vector>

#include "chars.hpp"
#include "matrix.hpp"

namespace charforge::sums {

using chars::AddChar;
using chars::cplx;
using chars::HatChar;
using chars::MultChar;
using ff::Elem;
using ff::Field;
using ff::i64;

// tau(alpha, psi) = -|K|^{-1/2} sum_{x in K^x} alpha^{-1}(x) psi(x), K = alpha.field.
cplx gauss(const MultChar& alpha, const AddChar& psi);

// G(alpha, chi, psi_K) with chi on a subfield E of K, evaluated through chi o N_{K/E}
// computed element by element.
cplx gauss_twisted_direct(const MultChar& alpha, const MultChar& chi, const AddChar& psi);
// Same value via the single character alpha * (chi o N).
cplx gauss_twisted(const MultChar& alpha, const MultChar& chi, const AddChar& psi);

// Torus Gauss sum over prod_j K_j^x with K_j = comps[j].field, all containing chi.field:
// (-1)^l |E|^{-k/2} sum_t alpha^{-1}(t) chi^{-1}(det t) psi_E(Tr t).
cplx gauss_torus_direct(const std::vector<MultChar>& comps, const MultChar& chi, const AddChar& psi);
// Product of the twisted factors.
cplx gauss_torus(const std::vector<MultChar>& comps, const MultChar& chi, const AddChar& psi);
inline cplx gauss_hat(const HatChar& h, const MultChar& chi, const AddChar& psi)
{
    return gauss_torus(h.comps, chi, psi);
}

// J_chi(g) for g in GL_k(E). chi != 1: chi(det(1+g)) or 0. chi = 1: Fourier-transform
// definition summed over GL_k(E), allowed for k <= 2 and |E| <= 9.
cplx jacobi_kernel_gl(const Field& E, const ff::Mat& g, const MultChar& chi, const AddChar& psi);
// Closed form for the chi = 1 kernel.
double kernel_li_hu(const Field& E, const ff::Mat& g);

// c_V(chi, psi). ef = [E:F]; dim_F = dim of V over F; eps_G = (-1)^{rel.rank G}.
// chi lives on E; for ef = 2 the base F is b.field().
cplx c_normalization(const ff::Base& b, int ef, int dim_F, int eps_G, const MultChar& chi, const AddChar& psi);

struct KondoValue {
    cplx value;
    bool nonregular = false;
};

// Support alpha_j on E_{k_j}^x, each field an extension of chi.field = E.
KondoValue kondo_product(const std::vector<MultChar>& support, const MultChar& chi, const AddChar& psi);
std::vector<MultChar> dual_support(const std::vector<MultChar>& support);
int support_rank(const std::vector<MultChar>& support, const Field& E);

// G(tau^vee x chi^sigma) G(tau x chi).
cplx gamma_dbl_gl(const std::vector<MultChar>& support, const MultChar& chi, const AddChar& psi,
                  const ff::Base& b, int ef);
// chi(-1)^k (-tau(chi^{-1}, psi_E))^k G(tau^vee) G(tau x chi).
cplx jacobi_scalar_gl_formula(const std::vector<MultChar>& support, const MultChar& chi, const AddChar& psi);

}  // namespace charforge::sums
