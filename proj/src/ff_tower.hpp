#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace charforge::ff {

using i64 = std::int64_t;
using Elem = std::int32_t;

// Elements are discrete logs to the field generator; ZERO is the sentinel for 0.
inline constexpr Elem ZERO = -1;

i64 ipow(i64 b, int e);
i64 mod(i64 a, i64 n);
i64 inv_mod(i64 a, i64 n);
bool is_prime(i64 n);
std::vector<i64> prime_factors(i64 n);

class Field {
public:
    // Cached and deterministic: repeated calls return the same object.
    static const Field& get(int p, int e);

    int p() const { return p_; }
    int e() const { return e_; }
    i64 size() const { return size_; }
    i64 units() const { return size_ - 1; }

    // Coefficients low to high; modulus is monic of degree e.
    const std::vector<int>& modulus() const { return modulus_; }
    const std::vector<int>& gen_poly() const { return gen_; }
    std::string modulus_string() const;
    std::string gen_string() const;
    std::string name() const;

    Elem one() const { return 0; }
    Elem minus_one() const { return static_cast<Elem>(units() / 2); }
    Elem gen() const { return units() > 1 ? 1 : 0; }

    Elem add(Elem a, Elem b) const;
    Elem neg(Elem a) const;
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const;
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, i64 k) const;
    Elem from_log(i64 j) const { return static_cast<Elem>(mod(j, units())); }

    // Prime-field constant c mod p.
    Elem from_int(i64 c) const;
    // Base-p code sum c_i p^i of the polynomial representative; 0 is zero.
    Elem from_code(i64 code) const;
    i64 code(Elem a) const;
    std::vector<int> coeffs(Elem a) const;
    // Inverse of from_int on the prime subfield.
    int to_int(Elem a) const;

    // x^{p^j}
    Elem frobenius(Elem a, int j) const;
    // Tr_{F/F_p}(a) as an integer in [0, p).
    int trace_prime(Elem a) const { return a == ZERO ? 0 : trp_[a]; }

    // Subfields of p-degree d | e live inside as the subgroup of index
    // (p^e - 1)/(p^d - 1), plus zero.
    i64 subfield_index(int d) const;
    bool in_subfield(Elem a, int d) const;
    Elem norm_to(Elem a, int d) const;
    Elem trace_to(Elem a, int d) const;

    const std::vector<Elem>& zech() const { return zech_; }

private:
    Field(int p, int e);

    int p_, e_;
    i64 size_;
    std::vector<int> modulus_, gen_;
    std::vector<std::int32_t> exp_;  // log -> code
    std::vector<Elem> log_;          // code -> log
    std::vector<Elem> zech_;         // log(1 + g^n)
    std::vector<std::uint8_t> trp_;
};

// Fixed embedding of a standalone field K = F_{p^d} into F = F_{p^e}, d | e.
// K.gen maps to F.gen^(index * u).
struct Embedding {
    const Field* small;
    const Field* big;
    i64 index;
    i64 u;
    i64 uinv;  // inverse of u mod |K| - 1
};

const Embedding& embedding(const Field& small, const Field& big);
Elem embed(const Embedding& em, Elem x);
// Inverse of embed; the argument must lie in the subfield.
Elem pull(const Embedding& em, Elem y);

// The base field F_q with q = p^f, and its extensions F_{q^k} = F_{p^{fk}}.
struct Base {
    int p = 3;
    int f = 1;
    i64 q() const { return ipow(p, f); }
    const Field& field() const { return Field::get(p, f); }
    const Field& ext(int k) const { return Field::get(p, f * k); }
    bool operator==(const Base&) const = default;
};

// q-relative norm and trace inside F_{q^k}: the result lies in the copy of F_{q^{k'}}.
Elem norm(const Base& b, const Field& F, Elem x, int to_degree);
Elem trace(const Base& b, const Field& F, Elem x, int to_degree);

// N_{2m} in F_{q^{2m}}: elements (gen^{q^m-1})^s for s = 0..q^m.
struct NormOneGroup {
    const Field* field;
    int m;
    i64 order;
    i64 step;  // q^m - 1
    std::vector<Elem> elements;
};

NormOneGroup norm_one_subgroup(const Base& b, int m);

struct EtaleAlgebra {
    Base base;
    int scale = 1;
    std::vector<int> lambda;
    std::vector<const Field*> parts;
    i64 unit_order() const;
};

EtaleAlgebra etale_algebra(const Base& b, const std::vector<int>& lambda, int scale);

}  // namespace charforge::ff
