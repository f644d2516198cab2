#pragma once

#include <optional>
#include <string>
#include <vector>

#include "chars.hpp"
#include "matrix.hpp"
#include "report.hpp"

namespace charforge::groups {

using chars::AddChar;
using chars::cplx;
using chars::MultChar;
using ff::Elem;
using ff::Field;
using ff::i64;
using ff::Mat;

enum class GroupType { GL, U, Sp, SO_odd, SO_plus, SO_minus, GSp, GSO_plus, GSO_minus };

// n is the rank parameter: GL_n and U_n are n x n, Sp/SO+-/GSp/GSO+- are 2n x 2n,
// SO_odd is (2n+1) x (2n+1). U_n has entries in E = F_{q^2}.
struct GroupSpec {
    GroupType type = GroupType::Sp;
    int n = 1;
    ff::Base base;
};

std::string type_name(GroupType t);
// Accepts GL, U, Sp, SO (odd), SO+, SO-, GSp, GSO+, GSO- and the spelled-out enum names.
GroupType parse_type(const std::string& s);
std::string spec_name(const GroupSpec& g);

void validate(const GroupSpec& g);
bool is_similitude(const GroupSpec& g);
bool is_unitary(const GroupSpec& g);
// The classical group underlying a similitude group (identity on classical types).
GroupSpec classical_part(const GroupSpec& g);
int matrix_size(const GroupSpec& g);
int degree_EF(const GroupSpec& g);
const Field& matrix_field(const GroupSpec& g);
int dim_F_V(const GroupSpec& g);
int rel_rank(const GroupSpec& g);
inline int sign_of(int r) { return r % 2 == 0 ? 1 : -1; }

// Gram matrix of the defining form. Unitary: conj(g)^T w g = w. GL has no form.
Mat form_matrix(const GroupSpec& g);
// +1 symmetric or hermitian, -1 alternating.
int form_sign(const GroupSpec& g);

// Throw LimitError when a value leaves the 64-bit range.
i64 group_order(const GroupSpec& g);
i64 p_part(const GroupSpec& g);
// |H|_p^2 q^{floor(dim_F V / 2)}
i64 lie_algebra_size(const GroupSpec& g);

// Membership test against the defining form; multiplier() returns the similitude
// factor (one for classical elements) or ZERO when g is not in the group.
Elem multiplier(const GroupSpec& g, const Mat& x);
bool in_group(const GroupSpec& g, const Mat& x);

struct EnumeratedGroup {
    GroupSpec spec;
    std::vector<Mat> elements;  // sorted
    bool contains(const Mat& x) const;
};

inline constexpr i64 kEnumerationLimit = 200'000;
// verify_torus_embedding tests membership against the enumerated group up to this order.
inline constexpr i64 kEmbeddingCheckLimit = 20'000;

// Breadth-first closure of generators(). Order above kEnumerationLimit throws LimitError;
// a closure whose size differs from group_order throws std::logic_error.
const EnumeratedGroup& enumerate_group(const GroupSpec& g);
std::vector<Mat> generators(const GroupSpec& g);
// Every matrix of the right size passing in_group; only for |field|^{N^2} <= 2e6.
std::vector<Mat> filter_group(const GroupSpec& g);

struct TorusDatum {
    GroupSpec group;
    std::vector<int> lambda_plus, lambda_minus;
    i64 order = 0;
    int rel_rank = 0;
    int epsilon = 1;
};

// All (lambda+, lambda-) with |lambda+| + |lambda-| = n under the per-type constraints.
// GL_n is listed by partitions of n in lambda_plus.
std::vector<TorusDatum> torus_catalog(const GroupSpec& g);
TorusDatum make_torus(const GroupSpec& g, std::vector<int> lambda_plus, std::vector<int> lambda_minus);
json to_json(const TorusDatum& t);

// A rational point of T_H. Split parts x_j lie in F_{q^{lambda_j^+}}; elliptic parts y_i lie
// in F_{q^{2 lambda_i^-}} (in N_{2 lambda_i^-} for classical groups); z is the similitude
// coordinate, one for classical groups.
struct TorusPoint {
    std::vector<Elem> x, y;
    Elem z = 0;
};

// Calls f on every point of T_H (for similitude groups, every triple with N(y_i) = z).
template <class Fn>
void for_each_point(const TorusDatum& td, Fn&& f);
i64 count_points(const TorusDatum& td);

// Character of T_H. The split part and, for classical groups, theta.elliptic describe it.
// For similitude groups beta_i acts on y_i in F_{q^{2m}}^x and nu on z; theta.elliptic is
// then the restriction of beta_i to the norm-one group.
struct TorusTheta {
    chars::TorusChar theta;
    std::vector<MultChar> beta;
    std::optional<MultChar> nu;
};

TorusTheta classical_theta(const TorusDatum& td, const std::vector<i64>& alpha, const std::vector<i64>& theta);
TorusTheta similitude_theta(const TorusDatum& td, const std::vector<i64>& alpha, const std::vector<i64>& beta,
                            i64 nu);
// Every character of T_H, in a fixed order. Similitude groups with elliptic parts fold nu
// into beta, so only nu = 0 is listed there.
std::vector<TorusTheta> all_thetas(const TorusDatum& td);
cplx eval_theta(const TorusDatum& td, const TorusTheta& th, const TorusPoint& t);
json theta_params(const TorusTheta& th);

// chi lives on E (F for the classical types, F_{q^2} for U).
MultChar make_chi(const GroupSpec& g, i64 chi);
bool chi_conjugate_dual(const GroupSpec& g, const MultChar& chi);

// Phi(t) = prod chi(N(1+x_j)) chi(N(1+xbar_j)) prod chi(N(1+y_i)) [chi(2) for odd SO],
// zero when a factor vanishes or z != 1.
cplx kernel_on_torus(const TorusDatum& td, const TorusPoint& t, const MultChar& chi);

// Explicit embedding T_H -> H: block matrices preserving a torus-adapted form, moved into
// the defining form by an isometry found with a greedy Witt extension.
struct TorusEmbedding {
    TorusDatum td;
    Mat form;        // block form the torus preserves
    Mat P, Pinv;     // conj(P)^T B P = form
    Elem middle = 0; // value of the fixed line for odd SO
};
const TorusEmbedding& torus_embedding(const TorusDatum& td);
Mat embed_point(const TorusEmbedding& em, const TorusPoint& t);
// Checks membership (against the enumerated group up to kEmbeddingCheckLimit, by the form
// above it) and that kernel_on_torus equals chi(det(1 + g)) on the z = 1 fiber.
Report verify_torus_embedding(const TorusDatum& td, const MultChar& chi);

chars::HatChar transfer(const TorusDatum& td, const TorusTheta& th);

struct DlGamma {
    cplx gamma;  // tau_That(theta-hat x chi)
    cplx c_V;
    double R1 = 0;
    cplx lhs, rhs;
    long long terms = 0;
};

// |H:T_H| / sqrt|g| * sum_t theta_H(t) Phi(t).
cplx dl_pairing_lhs(const TorusDatum& td, const TorusTheta& th, const MultChar& chi, const AddChar& psi,
                    long long* terms = nullptr);
// R(1) c_V gamma with R(1) = eps_H eps_T |H:T_H| / |H|_p. Rejects conjugate-dual chi.
DlGamma dl_gamma_rhs(const TorusDatum& td, const TorusTheta& th, const MultChar& chi, const AddChar& psi);

struct DlOptions {
    bool drop_chi2 = false;  // negative control: omit the odd-orthogonal chi(2) factor
    double scale = kDefaultTolScale;
};

Report verify_dl(const TorusDatum& td, const TorusTheta& th, const MultChar& chi, const AddChar& psi,
                 const DlOptions& opt = {});
// gamma of a torus equals the product of the gammas of its one-part tori.
Report verify_dl_multiplicativity(const TorusDatum& td, const TorusTheta& th, const MultChar& chi,
                                  const AddChar& psi, double scale = kDefaultTolScale);
// Inside Sp_4: (N_2 x N_2, theta x theta) against (F_{q^2}^x, theta(x^{1-q})). Exact.
Report verify_geometric_conjugacy(const ff::Base& b, i64 theta, const AddChar& psi);
// Conjugate-dual chi: pairing = eps_G q^{-floor(d/2)/2} R(1) gamma^{-1} [chi(2)].
// Throws when the hypotheses on the split and elliptic parts fail.
Report verify_appendix_C_dl(const TorusDatum& td, const TorusTheta& th, const MultChar& chi, const AddChar& psi,
                            double scale = kDefaultTolScale);
bool appendix_C_dl_applies(const TorusDatum& td, const TorusTheta& th, const MultChar& chi);

// ---- implementation of the point iterator ----

// The y in F_{q^{2m}}^x with N(y) = z down to F_{q^m}, m = lambda_minus[i]; z is a log in F.
std::vector<Elem> elliptic_fiber(const TorusDatum& td, int i, Elem z);

template <class Fn>
void for_each_point(const TorusDatum& td, Fn&& f)
{
    const ff::Base& b = td.group.base;
    const bool sim = is_similitude(td.group);
    std::vector<const Field*> xf;
    for (int l : td.lambda_plus) xf.push_back(&b.ext(l));
    const Field& F = b.field();
    const i64 zcount = sim ? F.units() : 1;
    for (i64 zi = 0; zi < zcount; ++zi) {
        const Elem z = static_cast<Elem>(zi);
        std::vector<std::vector<Elem>> ys;
        for (size_t i = 0; i < td.lambda_minus.size(); ++i) ys.push_back(elliptic_fiber(td, static_cast<int>(i), z));
        TorusPoint t;
        t.z = z;
        t.x.assign(xf.size(), 0);
        t.y.assign(ys.size(), 0);
        std::vector<size_t> ix(xf.size(), 0), iy(ys.size(), 0);
        for (;;) {
            for (size_t j = 0; j < xf.size(); ++j) t.x[j] = static_cast<Elem>(ix[j]);
            for (size_t i = 0; i < ys.size(); ++i) t.y[i] = ys[i][iy[i]];
            f(static_cast<const TorusPoint&>(t));
            size_t d = 0;
            for (; d < xf.size(); ++d) {
                if (++ix[d] < static_cast<size_t>(xf[d]->units())) break;
                ix[d] = 0;
            }
            if (d < xf.size()) continue;
            size_t e = 0;
            for (; e < ys.size(); ++e) {
                if (++iy[e] < ys[e].size()) break;
                iy[e] = 0;
            }
            if (e == ys.size()) break;
        }
    }
}

}  // namespace charforge::groups
