#pragma once

#include "report.hpp"
#include "sums.hpp"

namespace charforge::sums {

// Each verifier computes its left side by direct summation and its right side from the
// closed form, then packages both into a Report. Preconditions are checked and violations
// throw std::invalid_argument.

Report verify_gauss_core(const MultChar& alpha, const AddChar& psi, double scale = kDefaultTolScale);
Report verify_hasse_davenport(const ff::Base& b, int m, i64 beta, const AddChar& psi,
                              double scale = kDefaultTolScale);
Report verify_reflection(const MultChar& chi, const AddChar& psi, double scale = kDefaultTolScale);
Report verify_conjugation(const MultChar& alpha, const AddChar& psi, double scale = kDefaultTolScale);
Report verify_frobenius_invariance(const ff::Base& b, int ef, int k, i64 alpha, i64 chi, const AddChar& psi,
                                   double scale = kDefaultTolScale);
Report verify_twisted_definition(const MultChar& alpha, const MultChar& chi, const AddChar& psi,
                                 double scale = kDefaultTolScale);
Report verify_torus_product(const std::vector<MultChar>& comps, const MultChar& chi, const AddChar& psi,
                            double scale = kDefaultTolScale);

// Torus sums. ef = [E:F]; alpha lives on E_k, chi on E.
Report verify_split_I(const ff::Base& b, int ef, int k, i64 alpha, i64 chi, const AddChar& psi,
                      double scale = kDefaultTolScale);
Report verify_split_II(const ff::Base& b, int ef, int k, i64 alpha, i64 chi, const AddChar& psi,
                       double scale = kDefaultTolScale);
Report verify_elliptic_EF(const ff::Base& b, int m, i64 theta, i64 chi, const AddChar& psi,
                          double scale = kDefaultTolScale);
Report verify_elliptic_E2F(const ff::Base& b, int m, i64 theta, i64 chi, const AddChar& psi,
                           double scale = kDefaultTolScale);

// Auxiliary sums over the base K = F_{q^m}: chi on K (A1), chi on K_2 (A2).
Report verify_appendix_A1(const ff::Base& b, int m, i64 chi, const AddChar& psi, double scale = kDefaultTolScale);
Report verify_appendix_A2(const ff::Base& b, int m, i64 theta, i64 chi, const AddChar& psi,
                          double scale = kDefaultTolScale);

// Conjugate-dual chi (chi^{1+sigma} = 1).
Report verify_appendix_C_split(const ff::Base& b, int ef, int k, i64 alpha, i64 chi, const AddChar& psi,
                               double scale = kDefaultTolScale);
Report verify_appendix_C_elliptic_EF(const ff::Base& b, int m, i64 theta, i64 chi, const AddChar& psi,
                                     double scale = kDefaultTolScale);
Report verify_appendix_C_elliptic_E2F(const ff::Base& b, int m, i64 theta, i64 chi, const AddChar& psi,
                                      double scale = kDefaultTolScale);

// Closed-form chi = 1 kernel against the Fourier-transform sum at g in GL_k(E).
Report verify_li_hu(const Field& E, const ff::Mat& g, const AddChar& psi, double scale = kDefaultTolScale);

// Left sides of the torus sums, shared with the group-level code.
cplx split_sum(const ff::Base& b, int ef, const MultChar& alpha, const MultChar& chi);
cplx elliptic_sum(const ff::Base& b, const chars::NormOneChar& theta, const MultChar& chi);

}  // namespace charforge::sums
