#include "ff_tower.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace charforge::ff {

i64 ipow(i64 b, int e)
{
    i64 r = 1;
    for (int i = 0; i < e; ++i) r *= b;
    return r;
}

i64 mod(i64 a, i64 n)
{
    i64 r = a % n;
    return r < 0 ? r + n : r;
}

i64 inv_mod(i64 a, i64 n)
{
    i64 t = 0, nt = 1, r = n, nr = mod(a, n);
    while (nr != 0) {
        i64 qt = r / nr;
        i64 tmp = t - qt * nt;
        t = nt;
        nt = tmp;
        tmp = r - qt * nr;
        r = nr;
        nr = tmp;
    }
    if (r != 1) throw std::invalid_argument("inv_mod: not invertible");
    return mod(t, n);
}

bool is_prime(i64 n)
{
    if (n < 2) return false;
    for (i64 d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<i64> prime_factors(i64 n)
{
    std::vector<i64> out;
    for (i64 d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

using Poly = std::vector<int>;  // low to high

void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, int p)
{
    const int e = static_cast<int>(f.size()) - 1;
    std::vector<i64> r(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += static_cast<i64>(a[i]) * b[j];
    }
    for (auto& c : r) c %= p;
    for (int d = static_cast<int>(r.size()) - 1; d >= e; --d) {
        i64 c = r[d];
        if (!c) continue;
        for (int k = 0; k <= e; ++k) r[d - e + k] = mod(r[d - e + k] - c * f[k], p);
    }
    Poly out(e, 0);
    for (int i = 0; i < e && i < static_cast<int>(r.size()); ++i) out[i] = static_cast<int>(r[i]);
    return out;
}

Poly poly_powmod(Poly a, i64 k, const Poly& f, int p)
{
    const int e = static_cast<int>(f.size()) - 1;
    Poly r(e, 0);
    r[0] = 1;
    while (k > 0) {
        if (k & 1) r = poly_mulmod(r, a, f, p);
        a = poly_mulmod(a, a, f, p);
        k >>= 1;
    }
    return r;
}

Poly poly_mod(Poly a, const Poly& f, int p)
{
    trim(a);
    Poly b = f;
    trim(b);
    const int db = static_cast<int>(b.size()) - 1;
    const i64 lead_inv = inv_mod(b.back(), p);
    while (static_cast<int>(a.size()) - 1 >= db && !a.empty()) {
        const int shift = static_cast<int>(a.size()) - 1 - db;
        const i64 c = a.back() * lead_inv % p;
        for (int k = 0; k <= db; ++k) a[shift + k] = static_cast<int>(mod(a[shift + k] - c * b[k], p));
        trim(a);
    }
    return a;
}

Poly poly_gcd(Poly a, Poly b, int p)
{
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

// Rabin's test: f | x^{p^e} - x and gcd(x^{p^{e/r}} - x, f) = 1 for primes r | e.
bool irreducible(const Poly& f, int p)
{
    const int e = static_cast<int>(f.size()) - 1;
    if (e == 1) return true;
    Poly x(e, 0);
    x[1 % e] = 1;
    auto frob_pow = [&](int k) {
        Poly y = x;
        for (int i = 0; i < k; ++i) y = poly_powmod(y, p, f, p);
        return y;
    };
    Poly full = frob_pow(e);
    if (full != x) return false;
    for (i64 r : prime_factors(e)) {
        Poly y = frob_pow(e / static_cast<int>(r));
        y[1] = static_cast<int>(mod(y[1] - 1, p));
        if (poly_gcd(f, y, p).size() > 1) return false;
    }
    return true;
}

Poly from_code_poly(i64 code, int p, int e)
{
    Poly a(e, 0);
    for (int i = 0; i < e; ++i) {
        a[i] = static_cast<int>(code % p);
        code /= p;
    }
    return a;
}

i64 to_code(const Poly& a, int p)
{
    i64 c = 0;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) c = c * p + a[i];
    return c;
}

std::string poly_string(const Poly& a)
{
    std::string s;
    for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i) {
        if (!a[i]) continue;
        if (!s.empty()) s += "+";
        if (i == 0 || a[i] != 1) s += std::to_string(a[i]);
        if (i >= 1) s += "x";
        if (i >= 2) s += "^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
}

}  // namespace

Field::Field(int p, int e) : p_(p), e_(e), size_(ipow(p, e))
{
    const i64 n = size_ - 1;
    for (i64 code = 0; code < size_; ++code) {
        Poly f = from_code_poly(code, p, e);
        f.push_back(1);
        if (irreducible(f, p)) {
            modulus_ = f;
            break;
        }
    }
    const auto factors = prime_factors(n);
    for (i64 code = 1; code < size_; ++code) {
        Poly g = from_code_poly(code, p, e);
        bool full = true;
        for (i64 r : factors) {
            Poly y = poly_powmod(g, n / r, modulus_, p);
            if (to_code(y, p) == 1) {
                full = false;
                break;
            }
        }
        if (full) {
            gen_ = g;
            break;
        }
    }
    if (gen_.empty()) throw std::logic_error("build_field: no generator found");

    exp_.assign(n, 0);
    log_.assign(size_, ZERO);
    Poly x(e, 0);
    x[0] = 1;
    for (i64 j = 0; j < n; ++j) {
        const i64 c = to_code(x, p);
        if (log_[c] != ZERO) throw std::logic_error("build_field: generator order mismatch");
        exp_[j] = static_cast<std::int32_t>(c);
        log_[c] = static_cast<Elem>(j);
        x = poly_mulmod(x, gen_, modulus_, p);
    }
    zech_.assign(n, ZERO);
    for (i64 j = 0; j < n; ++j) {
        i64 c = exp_[j];
        const i64 low = c % p;
        c = c - low + (low + 1) % p;
        zech_[j] = log_[c];
    }
    // Tr(x) = sum of digits times Tr(basis monomial)
    std::vector<int> basis_tr(e, 0);
    for (int i = 0; i < e; ++i) {
        Elem b = log_[ipow(p, i)];
        Elem s = ZERO;
        for (int j = 0; j < e; ++j) s = add(s, frobenius(b, j));
        const i64 sc = s == ZERO ? 0 : exp_[s];
        if (sc >= p) throw std::logic_error("build_field: trace left the prime field");
        basis_tr[i] = static_cast<int>(sc);
    }
    trp_.assign(n, 0);
    for (i64 j = 0; j < n; ++j) {
        i64 c = exp_[j];
        i64 t = 0;
        for (int i = 0; i < e; ++i) {
            t += (c % p) * basis_tr[i];
            c /= p;
        }
        trp_[j] = static_cast<std::uint8_t>(t % p);
    }
}

const Field& Field::get(int p, int e)
{
    if (p < 3 || !is_prime(p)) throw std::invalid_argument("build_field: p must be an odd prime");
    if (e < 1 || e > 12) throw std::invalid_argument("build_field: degree must lie in [1, 12]");
    if (ipow(p, e) > (i64{1} << 20)) throw std::invalid_argument("build_field: field size exceeds 2^20");
    static std::mutex mu;
    static std::map<std::pair<int, int>, std::unique_ptr<Field>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{p, e}];
    if (!slot) slot.reset(new Field(p, e));
    return *slot;
}

std::string Field::modulus_string() const { return poly_string(modulus_); }
std::string Field::gen_string() const { return poly_string(gen_); }
std::string Field::name() const { return "F_" + std::to_string(size_); }

Elem Field::add(Elem a, Elem b) const
{
    if (a == ZERO) return b;
    if (b == ZERO) return a;
    const i64 n = units();
    const Elem z = zech_[mod(static_cast<i64>(b) - a, n)];
    if (z == ZERO) return ZERO;
    return static_cast<Elem>((static_cast<i64>(a) + z) % n);
}

Elem Field::neg(Elem a) const
{
    if (a == ZERO) return ZERO;
    return static_cast<Elem>((a + units() / 2) % units());
}

Elem Field::mul(Elem a, Elem b) const
{
    if (a == ZERO || b == ZERO) return ZERO;
    return static_cast<Elem>((static_cast<i64>(a) + b) % units());
}

Elem Field::inv(Elem a) const
{
    if (a == ZERO) throw std::domain_error("field: inverse of zero");
    return static_cast<Elem>(mod(-static_cast<i64>(a), units()));
}

Elem Field::pow(Elem a, i64 k) const
{
    if (a == ZERO) {
        if (k <= 0) throw std::domain_error("field: non-positive power of zero");
        return ZERO;
    }
    const i64 n = units();
    return static_cast<Elem>(mod(static_cast<i64>(a) * mod(k, n), n));
}

Elem Field::from_int(i64 c) const
{
    return log_[mod(c, p_)];
}

Elem Field::from_code(i64 code) const
{
    if (code < 0 || code >= size_) throw std::out_of_range("field: element code out of range");
    return log_[code];
}

i64 Field::code(Elem a) const
{
    return a == ZERO ? 0 : exp_[a];
}

std::vector<int> Field::coeffs(Elem a) const
{
    return from_code_poly(code(a), p_, e_);
}

int Field::to_int(Elem a) const
{
    const i64 c = code(a);
    if (c >= p_) throw std::domain_error("field: element is not in the prime field");
    return static_cast<int>(c);
}

Elem Field::frobenius(Elem a, int j) const
{
    if (a == ZERO) return ZERO;
    const i64 n = units();
    i64 pj = 1;
    for (int i = 0; i < j; ++i) pj = pj * p_ % n;
    return static_cast<Elem>(static_cast<i64>(a) * pj % n);
}

i64 Field::subfield_index(int d) const
{
    if (d < 1 || e_ % d != 0) throw std::invalid_argument("field: subfield degree must divide the extension degree");
    return units() / (ipow(p_, d) - 1);
}

bool Field::in_subfield(Elem a, int d) const
{
    return a == ZERO || a % subfield_index(d) == 0;
}

Elem Field::norm_to(Elem a, int d) const
{
    const i64 m = subfield_index(d);
    if (a == ZERO) return ZERO;
    return static_cast<Elem>(static_cast<i64>(a) * m % units());
}

Elem Field::trace_to(Elem a, int d) const
{
    subfield_index(d);
    Elem s = ZERO;
    for (int j = 0; j < e_ / d; ++j) s = add(s, frobenius(a, d * j));
    return s;
}

const Embedding& embedding(const Field& small, const Field& big)
{
    if (small.p() != big.p() || big.e() % small.e() != 0)
        throw std::invalid_argument("embedding: not a subfield");
    static std::mutex mu;
    static std::map<std::pair<const Field*, const Field*>, Embedding> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({&small, &big});
    if (it != cache.end()) return it->second;

    const i64 m = big.subfield_index(small.e());
    auto eval = [&](const std::vector<int>& poly, Elem y) {
        Elem s = ZERO, yp = big.one();
        for (int c : poly) {
            if (c) s = big.add(s, big.mul(big.from_int(c), yp));
            yp = big.mul(yp, y);
        }
        return s;
    };
    // The root of least code; for small == big this is x itself, so the self-embedding is the identity.
    std::vector<Elem> candidates{ZERO};
    for (i64 j = 0; j < small.units(); ++j) candidates.push_back(static_cast<Elem>(j * m));
    Elem root = ZERO;
    i64 best = -1;
    for (Elem y : candidates) {
        if (eval(small.modulus(), y) != ZERO) continue;
        if (best < 0 || big.code(y) < best) {
            best = big.code(y);
            root = y;
        }
    }
    if (best < 0) throw std::logic_error("embedding: modulus has no root in the big field");
    const Elem img = eval(small.gen_poly(), root);
    if (img == ZERO || img % m != 0) throw std::logic_error("embedding: image outside the subfield");
    Embedding em{&small, &big, m, img / m, 0};
    em.uinv = inv_mod(em.u, small.units());
    return cache.emplace(std::make_pair(&small, &big), em).first->second;
}

Elem embed(const Embedding& em, Elem x)
{
    if (x == ZERO) return ZERO;
    const i64 t = static_cast<i64>(x) * em.u % em.small->units();
    return static_cast<Elem>(t * em.index % em.big->units());
}

Elem pull(const Embedding& em, Elem y)
{
    if (y == ZERO) return ZERO;
    if (y % em.index != 0) throw std::domain_error("embedding: element is not in the subfield");
    return static_cast<Elem>(static_cast<i64>(y / em.index) * em.uinv % em.small->units());
}

Elem norm(const Base& b, const Field& F, Elem x, int to_degree)
{
    if (F.p() != b.p || F.e() % (b.f * to_degree) != 0)
        throw std::invalid_argument("norm: target degree does not divide the field degree");
    return F.norm_to(x, b.f * to_degree);
}

Elem trace(const Base& b, const Field& F, Elem x, int to_degree)
{
    if (F.p() != b.p || F.e() % (b.f * to_degree) != 0)
        throw std::invalid_argument("trace: target degree does not divide the field degree");
    return F.trace_to(x, b.f * to_degree);
}

NormOneGroup norm_one_subgroup(const Base& b, int m)
{
    if (m < 1) throw std::invalid_argument("norm_one_subgroup: m must be positive");
    const Field& F = b.ext(2 * m);
    NormOneGroup g{&F, m, ipow(b.q(), m) + 1, ipow(b.q(), m) - 1, {}};
    g.elements.reserve(g.order);
    for (i64 s = 0; s < g.order; ++s) g.elements.push_back(static_cast<Elem>(s * g.step));
    return g;
}

i64 EtaleAlgebra::unit_order() const
{
    i64 r = 1;
    for (const Field* F : parts) r *= F->units();
    return r;
}

EtaleAlgebra etale_algebra(const Base& b, const std::vector<int>& lambda, int scale)
{
    if (lambda.empty()) throw std::invalid_argument("etale_algebra: empty partition");
    if (scale != 1 && scale != 2) throw std::invalid_argument("etale_algebra: scale must be 1 or 2");
    EtaleAlgebra a{b, scale, lambda, {}};
    for (int l : lambda) {
        if (l < 1) throw std::invalid_argument("etale_algebra: parts must be positive");
        a.parts.push_back(&b.ext(scale * l));
    }
    return a;
}

}  // namespace charforge::ff
