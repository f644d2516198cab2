#pragma once

#include <complex>
#include <vector>

#include "ff_tower.hpp"

namespace charforge::chars {

using cplx = std::complex<double>;
using ff::Elem;
using ff::Field;
using ff::i64;

// exp(2 pi i k / n) from a cached table.
cplx root_of_unity(i64 k, i64 n);
const std::vector<cplx>& roots_table(i64 n);

// chi(gen^j) = exp(2 pi i a j / (|F| - 1)).
struct MultChar {
    const Field* field = nullptr;
    i64 a = 0;

    cplx operator()(Elem x) const;
    i64 modulus() const { return field->units(); }
    bool trivial() const { return a == 0; }
    MultChar inverse() const;
    MultChar pow(i64 k) const;
    MultChar operator*(const MultChar& o) const;
    bool operator==(const MultChar& o) const { return field == o.field && a == o.a; }
};

MultChar make_mult_char(const Field& F, i64 a);

// psi(x) = exp(2 pi i c Tr_{F/F_p}(x) / p); the same scale serves every field in a tower.
struct AddChar {
    int p = 3;
    int c = 1;
    cplx operator()(const Field& F, Elem x) const;
};

AddChar make_add_char(int p, i64 c);

// Character of N_{2m} inside F_{q^{2m}}, exponent b on the generator gen^{q^m - 1}.
struct NormOneChar {
    ff::Base base;
    int m = 1;
    i64 b = 0;

    const Field& field() const { return base.ext(2 * m); }
    i64 order() const { return ff::ipow(base.q(), m) + 1; }
    cplx operator()(Elem x) const;
};

NormOneChar make_norm_one_char(const ff::Base& base, int m, i64 b);

// chi o N_{big/chi.field}, as a character of big.
MultChar lift_norm(const MultChar& chi, const Field& big);
// alpha restricted to the copy of small inside alpha.field.
MultChar restrict_to(const MultChar& alpha, const Field& small);
// chi evaluated at y, where y lies in the copy of chi.field inside big.
cplx eval_in(const MultChar& chi, const Field& big, Elem y);

// E/F setting: E = F_{q^ef}, sigma the generator of Gal(E/F).
MultChar frob(const MultChar& chi, i64 power);
MultChar sigma(const MultChar& chi, const ff::Base& b, int ef);
MultChar bar(const MultChar& chi, const ff::Base& b, int ef);  // chi^{-sigma}
MultChar one_plus_sigma(const MultChar& chi, const ff::Base& b, int ef);
bool is_conjugate_dual(const MultChar& chi, const ff::Base& b, int ef);
// Frobenius orbit under x -> x^{qE} has full size [field : E].
bool is_regular(const MultChar& alpha, const Field& E);
i64 orbit_min(const MultChar& alpha, i64 qE);

// theta_hat(t) = theta(t^{1 - q^m}) on F_{q^{2m}}^x.
MultChar transfer_theta(const NormOneChar& theta);

struct TorusChar {
    std::vector<MultChar> split;         // alpha_j on F_{lambda_j^+}^x
    std::vector<NormOneChar> elliptic;   // theta_i on N_{2 lambda_i^-}
};

// Characters of the transferred torus (a product of multiplicative groups over E).
struct HatChar {
    std::vector<MultChar> comps;
    bool operator==(const HatChar& o) const { return comps == o.comps; }
};

HatChar transfer_torus_char(const TorusChar& t, const ff::Base& b, int ef);
// Each component replaced by the least exponent of its orbit under x -> x^{|E|}, then sorted.
HatChar canonical(const HatChar& h, const Field& E);

}  // namespace charforge::chars
