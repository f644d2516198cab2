#pragma once

#include <string>
#include <vector>

#include "chars.hpp"
#include "matrix.hpp"
#include "report.hpp"

// Explicit character theory of GL_2(F_q), q in {3, 5, 7}: the brute-force oracle for the
// GL-side Gauss and Jacobi sums.
namespace charforge::gl2 {

using chars::AddChar;
using chars::cplx;
using chars::MultChar;
using ff::Elem;
using ff::Field;
using ff::i64;
using ff::Mat;

enum class ClassFamily { Central, NonSemisimple, Split, Elliptic };
enum class RowFamily { OneDim, Steinberg, PrincipalSeries, Cuspidal };

std::string family_name(ClassFamily f);
std::string family_name(RowFamily f);

// Parameters are logs: a (central, non-semisimple), a < b (split), the least log of {z, z^q}
// in F_{q^2} (elliptic).
struct Gl2Class {
    Mat rep;
    i64 size = 0;
    ClassFamily family = ClassFamily::Central;
    std::vector<Elem> params;
};

// Parameters are character exponents: alpha (one-dimensional, Steinberg twist), alpha1 < alpha2
// (principal series), beta on F_{q^2}^x, least in its Frobenius orbit (cuspidal).
struct Gl2IrrepRow {
    RowFamily family = RowFamily::OneDim;
    std::vector<i64> params;
    i64 dim = 1;
    std::vector<cplx> values;       // indexed like Gl2Table::classes
    std::vector<MultChar> support;  // cuspidal support on GL_1 or GL_2 blocks
    std::string name() const;
};

struct Gl2Table {
    int q = 3;
    std::vector<Gl2Class> classes;
    std::vector<Gl2IrrepRow> rows;
    std::vector<int> class_of;  // for each element of ff::general_linear(F, 2)

    const Field& F() const;
    const Field& K() const;  // F_{q^2}
    const std::vector<Mat>& elements() const;
    int classify(const Mat& g) const;
    i64 order() const;
};

const Gl2Table& gl2_char_table(int q);

// Inner product (1/|G|) sum_C |C| a(C) conj(b(C)).
cplx inner(const Gl2Table& t, const std::vector<cplx>& a, const std::vector<cplx>& b);

// (1/dim) q^{-2} sum_g psi(tr g^{-1}) chi(det g) trace rho(g)
cplx kondo_brute(const Gl2Table& t, const Gl2IrrepRow& row, const MultChar& chi, const AddChar& psi);
// (1/dim) q^{-2} sum_g J_chi(g) trace rho(g). For chi = 1 the kernel is the Fourier sum when
// q = 3 and the closed form otherwise.
cplx jacobi_brute(const Gl2Table& t, const Gl2IrrepRow& row, const MultChar& chi, const AddChar& psi);
bool trivial_in_support(const Gl2IrrepRow& row);

Report verify_kondo(const Gl2Table& t, const Gl2IrrepRow& row, const MultChar& chi, const AddChar& psi);
// Thm-level GL Jacobi formula; chi = 1 rows must avoid the trivial character in the support.
Report verify_jacobi(const Gl2Table& t, const Gl2IrrepRow& row, const MultChar& chi, const AddChar& psi);
// sum_h chi(det h) psi(tr(X h)) over GL_2 for singular X and chi != 1.
Report verify_singular_vanishing(int q, const Mat& X, const MultChar& chi, const AddChar& psi);
std::vector<Mat> singular_representatives(int q);

enum class TorusKind { Split, Elliptic };
enum class TestFunction { Jacobi, ChiDet };
// <R_{T,theta}, f>_G against <theta, f|_T>_T. Split theta = (a1, a2) on F^x x F^x;
// elliptic theta = (b) on F_{q^2}^x, regular. f must depend only on semisimple parts, so the
// Jacobi kernel is rejected for chi = 1.
Report dl_pairing_check_gl2(int q, TorusKind kind, const std::vector<i64>& theta, TestFunction f,
                            const MultChar& chi, const AddChar& psi);
// Schur consistency: sum_g w(g) chi_rho(g h) = c chi_rho(h) for every class h with chi_rho(h) != 0,
// w(g) = psi(tr g^{-1}) chi(det g).
Report verify_kondo_scalar(const Gl2Table& t, const Gl2IrrepRow& row, const MultChar& chi, const AddChar& psi);

// One record per invariant: {"invariant", "checks", "failures", "max_abs_err", "pass"}.
json selftest(int q, std::vector<Report>* details = nullptr);

}  // namespace charforge::gl2
