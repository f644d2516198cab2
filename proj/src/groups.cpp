#include "groups.hpp"

#include "errors.hpp"
#include "sums.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <tuple>
#include <unordered_set>

namespace charforge::groups {

using chars::make_mult_char;
using chars::NormOneChar;

namespace {

i64 checked_mul(i64 a, i64 b)
{
    i64 r;
    if (__builtin_mul_overflow(a, b, &r)) throw LimitError("group_order: value exceeds 64 bits");
    return r;
}

i64 checked_pow(i64 b, i64 e)
{
    i64 r = 1;
    for (i64 i = 0; i < e; ++i) r = checked_mul(r, b);
    return r;
}

using Key = std::tuple<int, int, int, int>;
Key key_of(const GroupSpec& g) { return {static_cast<int>(g.type), g.n, g.base.p, g.base.f}; }

// sigma on matrix entries: x -> x^q for U, identity otherwise.
Mat conj(const GroupSpec& g, const Mat& x)
{
    if (!is_unitary(g)) return x;
    return ff::frobenius(matrix_field(g), x, g.base.f);
}

Mat antidiag(const Field& L, int n)
{
    Mat w(n);
    for (int i = 0; i < n; ++i) w(i, n - 1 - i) = L.one();
    return w;
}

// conj(x)^T B y
Mat gram(const GroupSpec& g, const Mat& B, const Mat& x, const Mat& y)
{
    const Field& L = matrix_field(g);
    return ff::mat_mul(L, ff::mat_mul(L, ff::transpose(conj(g, x)), B), y);
}

std::vector<std::vector<int>> partitions(int n)
{
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int rest, int maxp) -> void {
        if (rest == 0) {
            out.push_back(cur);
            return;
        }
        for (int p = std::min(rest, maxp); p >= 1; --p) {
            cur.push_back(p);
            self(self, rest - p, p);
            cur.pop_back();
        }
    };
    rec(rec, n, n);
    return out;
}

int sum_of(const std::vector<int>& v)
{
    int s = 0;
    for (int x : v) s += x;
    return s;
}

// ---- vector helpers over L ----

using Vec = std::vector<Elem>;

std::vector<Vec> all_vectors(const Field& L, int N)
{
    i64 total = 1;
    for (int i = 0; i < N; ++i) total = checked_mul(total, L.size());
    if (total > 2'000'000) throw LimitError("all_vectors: space too large");
    std::vector<Vec> out;
    out.reserve(static_cast<size_t>(total));
    std::vector<i64> d(N, 0);
    for (i64 c = 0; c < total; ++c) {
        Vec v(N);
        for (int i = 0; i < N; ++i) v[i] = L.from_code(d[i]);
        out.push_back(std::move(v));
        for (int i = N - 1; i >= 0; --i) {
            if (++d[i] < L.size()) break;
            d[i] = 0;
        }
    }
    return out;
}

// First nonzero coordinate equal to one.
bool projective_rep(const Field& L, const Vec& v)
{
    for (Elem e : v)
        if (e != ff::ZERO) return e == L.one();
    return false;
}

// conj(u)^T B v
Elem pairing(const GroupSpec& g, const Mat& B, const Vec& u, const Vec& v)
{
    const Field& L = matrix_field(g);
    const bool uni = is_unitary(g);
    Elem s = ff::ZERO;
    for (int i = 0; i < B.n; ++i) {
        if (u[i] == ff::ZERO) continue;
        const Elem ui = uni ? L.frobenius(u[i], g.base.f) : u[i];
        for (int j = 0; j < B.n; ++j) s = L.add(s, L.mul(ui, L.mul(B(i, j), v[j])));
    }
    return s;
}

Mat outer(const Field& L, Elem c, const Vec& u, const Vec& w)
{
    Mat m(static_cast<int>(u.size()));
    for (int i = 0; i < m.n; ++i)
        for (int j = 0; j < m.n; ++j) m(i, j) = L.mul(c, L.mul(u[i], w[j]));
    return m;
}

// Row vector conj(v)^T B.
Vec covector(const GroupSpec& g, const Mat& B, const Vec& v)
{
    const Field& L = matrix_field(g);
    Vec w(B.n, ff::ZERO);
    for (int i = 0; i < B.n; ++i) {
        const Elem vi = is_unitary(g) ? L.frobenius(v[i], g.base.f) : v[i];
        for (int j = 0; j < B.n; ++j) w[j] = L.add(w[j], L.mul(vi, B(i, j)));
    }
    return w;
}

// ---- linear structure of an extension K over L ----

struct Linear {
    const Field* K;
    const Field* L;
    int dim;
    Mat ginv;  // inverse trace Gram matrix over L

    Elem tr(Elem u) const { return ff::pull(ff::embedding(*L, *K), K->trace_to(u, L->e())); }

    Vec coords(Elem u) const
    {
        Vec r(dim), c(dim, ff::ZERO);
        for (int i = 0; i < dim; ++i) r[i] = tr(K->mul(u, static_cast<Elem>(i)));
        for (int i = 0; i < dim; ++i)
            for (int k = 0; k < dim; ++k) c[i] = L->add(c[i], L->mul(ginv(i, k), r[k]));
        return c;
    }

    // Multiplication by x in the basis 1, g, ..., g^{dim-1}.
    Mat mult(Elem x) const
    {
        Mat m(dim);
        for (int j = 0; j < dim; ++j) {
            const Vec c = coords(K->mul(x, static_cast<Elem>(j)));
            for (int i = 0; i < dim; ++i) m(i, j) = c[i];
        }
        return m;
    }
};

Linear make_linear(const Field& K, const Field& L)
{
    Linear s{&K, &L, K.e() / L.e(), {}};
    Mat G(s.dim);
    for (int i = 0; i < s.dim; ++i)
        for (int j = 0; j < s.dim; ++j) G(i, j) = s.tr(static_cast<Elem>(i + j));
    s.ginv = ff::inverse(L, G);
    return s;
}

void put_block(Mat& dst, const Mat& src, int off)
{
    for (int i = 0; i < src.n; ++i)
        for (int j = 0; j < src.n; ++j) dst(off + i, off + j) = src(i, j);
}

}  // namespace

// ---- specs ----

std::string type_name(GroupType t)
{
    switch (t) {
    case GroupType::GL: return "GL";
    case GroupType::U: return "U";
    case GroupType::Sp: return "Sp";
    case GroupType::SO_odd: return "SO";
    case GroupType::SO_plus: return "SO+";
    case GroupType::SO_minus: return "SO-";
    case GroupType::GSp: return "GSp";
    case GroupType::GSO_plus: return "GSO+";
    case GroupType::GSO_minus: return "GSO-";
    }
    return "?";
}

GroupType parse_type(const std::string& s)
{
    static const std::map<std::string, GroupType> names = {
        {"GL", GroupType::GL},           {"U", GroupType::U},
        {"Sp", GroupType::Sp},           {"SO", GroupType::SO_odd},
        {"SO_odd", GroupType::SO_odd},   {"SO+", GroupType::SO_plus},
        {"SO_plus", GroupType::SO_plus}, {"SO-", GroupType::SO_minus},
        {"SO_minus", GroupType::SO_minus}, {"GSp", GroupType::GSp},
        {"GSO+", GroupType::GSO_plus},   {"GSO_plus", GroupType::GSO_plus},
        {"GSO-", GroupType::GSO_minus},  {"GSO_minus", GroupType::GSO_minus},
    };
    auto it = names.find(s);
    if (it == names.end()) throw UnsupportedError("group: unknown type '" + s + "'");
    return it->second;
}

std::string spec_name(const GroupSpec& g)
{
    const int N = matrix_size(g);
    return type_name(g.type) + "_" + std::to_string(N) + "(F_" + std::to_string(g.base.q()) + ")";
}

void validate(const GroupSpec& g)
{
    if (g.n < 1 || g.n > 6) throw std::invalid_argument("group: n must be in [1, 6]");
    if (g.base.f < 1) throw std::invalid_argument("group: base degree must be positive");
    matrix_field(g);
}

bool is_similitude(const GroupSpec& g)
{
    return g.type == GroupType::GSp || g.type == GroupType::GSO_plus || g.type == GroupType::GSO_minus;
}

bool is_unitary(const GroupSpec& g) { return g.type == GroupType::U; }

GroupSpec classical_part(const GroupSpec& g)
{
    GroupSpec c = g;
    if (g.type == GroupType::GSp) c.type = GroupType::Sp;
    if (g.type == GroupType::GSO_plus) c.type = GroupType::SO_plus;
    if (g.type == GroupType::GSO_minus) c.type = GroupType::SO_minus;
    return c;
}

int matrix_size(const GroupSpec& g)
{
    switch (g.type) {
    case GroupType::GL:
    case GroupType::U: return g.n;
    case GroupType::SO_odd: return 2 * g.n + 1;
    default: return 2 * g.n;
    }
}

int degree_EF(const GroupSpec& g) { return is_unitary(g) ? 2 : 1; }

const Field& matrix_field(const GroupSpec& g) { return g.base.ext(degree_EF(g)); }

int dim_F_V(const GroupSpec& g)
{
    if (g.type == GroupType::GL) return g.n;
    return matrix_size(g) * degree_EF(g);
}

int rel_rank(const GroupSpec& g)
{
    switch (g.type) {
    case GroupType::GL: return g.n;
    case GroupType::U: return g.n / 2;
    case GroupType::SO_minus: return g.n - 1;
    case GroupType::GSO_minus: return g.n;
    case GroupType::GSp:
    case GroupType::GSO_plus: return g.n + 1;
    default: return g.n;
    }
}

Mat form_matrix(const GroupSpec& g)
{
    const Field& L = matrix_field(g);
    const int n = g.n;
    switch (g.type) {
    case GroupType::GL: throw UnsupportedError("form_matrix: GL has no form");
    case GroupType::U: return antidiag(L, n);
    case GroupType::Sp:
    case GroupType::GSp: {
        Mat J(2 * n);
        for (int i = 0; i < n; ++i) {
            J(i, 2 * n - 1 - i) = L.one();
            J(n + i, n - 1 - i) = L.minus_one();
        }
        return J;
    }
    case GroupType::SO_odd: return antidiag(L, 2 * n + 1);
    case GroupType::SO_plus:
    case GroupType::GSO_plus: return antidiag(L, 2 * n);
    case GroupType::SO_minus:
    case GroupType::GSO_minus: {
        // diag(I, [[0,1],[-d,0]], I) w_{2n} with d = gen, a non-square.
        Mat B = antidiag(L, 2 * n);
        B(n - 1, n) = ff::ZERO;
        B(n, n - 1) = ff::ZERO;
        B(n - 1, n - 1) = L.one();
        B(n, n) = L.neg(L.gen());
        return B;
    }
    }
    throw std::logic_error("form_matrix: bad type");
}

int form_sign(const GroupSpec& g)
{
    return (g.type == GroupType::Sp || g.type == GroupType::GSp) ? -1 : 1;
}

i64 p_part(const GroupSpec& g)
{
    validate(g);
    const i64 q = g.base.q();
    const i64 n = g.n;
    switch (g.type) {
    case GroupType::GL:
    case GroupType::U: return checked_pow(q, n * (n - 1) / 2);
    case GroupType::Sp:
    case GroupType::GSp:
    case GroupType::SO_odd: return checked_pow(q, n * n);
    default: return checked_pow(q, n * (n - 1));
    }
}

i64 group_order(const GroupSpec& g)
{
    validate(g);
    const i64 q = g.base.q();
    const int n = g.n;
    i64 r = p_part(g);
    switch (g.type) {
    case GroupType::GL:
        for (int i = 1; i <= n; ++i) r = checked_mul(r, checked_pow(q, i) - 1);
        return r;
    case GroupType::U:
        for (int i = 1; i <= n; ++i) r = checked_mul(r, checked_pow(q, i) - (i % 2 ? -1 : 1));
        return r;
    case GroupType::Sp:
    case GroupType::SO_odd:
    case GroupType::GSp:
        for (int i = 1; i <= n; ++i) r = checked_mul(r, checked_pow(q, 2 * i) - 1);
        break;
    case GroupType::SO_plus:
    case GroupType::GSO_plus:
        r = checked_mul(r, checked_pow(q, n) - 1);
        for (int i = 1; i < n; ++i) r = checked_mul(r, checked_pow(q, 2 * i) - 1);
        break;
    case GroupType::SO_minus:
    case GroupType::GSO_minus:
        r = checked_mul(r, checked_pow(q, n) + 1);
        for (int i = 1; i < n; ++i) r = checked_mul(r, checked_pow(q, 2 * i) - 1);
        break;
    }
    if (is_similitude(g)) r = checked_mul(r, q - 1);
    return r;
}

i64 lie_algebra_size(const GroupSpec& g)
{
    const i64 q = g.base.q();
    if (g.type == GroupType::GL) return checked_pow(q, static_cast<i64>(g.n) * g.n);
    const i64 pp = p_part(g);
    return checked_mul(checked_mul(pp, pp), checked_pow(q, dim_F_V(g) / 2));
}

Elem multiplier(const GroupSpec& g, const Mat& x)
{
    const Field& L = matrix_field(g);
    if (x.n != matrix_size(g)) throw std::invalid_argument("multiplier: wrong matrix size");
    const Elem d = ff::det(L, x);
    if (d == ff::ZERO) return ff::ZERO;
    if (g.type == GroupType::GL) return L.one();
    const Mat B = form_matrix(g);
    const Mat M = gram(g, B, x, x);
    Elem lam = ff::ZERO;
    for (size_t i = 0; i < B.a.size() && lam == ff::ZERO; ++i)
        if (B.a[i] != ff::ZERO) lam = L.div(M.a[i], B.a[i]);
    if (lam == ff::ZERO || M != ff::mat_scale(L, B, lam)) return ff::ZERO;
    if (!is_similitude(g)) {
        if (lam != L.one()) return ff::ZERO;
        if (g.type != GroupType::U && g.type != GroupType::Sp && d != L.one()) return ff::ZERO;
        return lam;
    }
    if (g.type != GroupType::GSp && d != L.pow(lam, g.n)) return ff::ZERO;
    return lam;
}

bool in_group(const GroupSpec& g, const Mat& x) { return multiplier(g, x) != ff::ZERO; }

// ---- enumeration ----

bool EnumeratedGroup::contains(const Mat& x) const
{
    return std::binary_search(elements.begin(), elements.end(), x);
}

std::vector<Mat> generators(const GroupSpec& g)
{
    validate(g);
    const Field& L = matrix_field(g);
    const int N = matrix_size(g);
    std::vector<Mat> gens;
    if (g.type == GroupType::GL) {
        // Elementary matrices I + a E_ij (a = 1, gen) and diag(gen, 1, ..., 1).
        for (int i = 0; i < N; ++i)
            for (int j = 0; j < N; ++j) {
                if (i == j) continue;
                for (Elem a : {L.one(), L.gen()}) {
                    Mat m = ff::identity(L, N);
                    m(i, j) = a;
                    gens.push_back(m);
                }
            }
        Mat d = ff::identity(L, N);
        d(0, 0) = L.gen();
        gens.push_back(d);
        return gens;
    }
    const Mat B = form_matrix(g);
    const auto vecs = all_vectors(L, N);
    const Mat I = ff::identity(L, N);
    switch (classical_part(g).type) {
    case GroupType::Sp:
        // Symplectic transvections x -> x + a <x, v> v, a in {1, gen}.
        for (const auto& v : vecs) {
            if (!projective_rep(L, v)) continue;
            Vec w(N, ff::ZERO);  // w_j = (B v)_j, so <x, v> = sum_j x_j w_j
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) w[i] = L.add(w[i], L.mul(B(i, j), v[j]));
            for (Elem a : {L.one(), L.gen()}) gens.push_back(ff::mat_add(L, I, outer(L, a, v, w)));
        }
        break;
    case GroupType::SO_odd:
    case GroupType::SO_plus:
    case GroupType::SO_minus: {
        // Products r_{v0} r_v of reflections in anisotropic vectors.
        std::vector<Mat> refl;
        for (const auto& v : vecs) {
            if (!projective_rep(L, v)) continue;
            const Elem qv = pairing(g, B, v, v);
            if (qv == ff::ZERO) continue;
            const Elem c = L.neg(L.div(L.from_int(2), qv));
            refl.push_back(ff::mat_add(L, I, outer(L, c, v, covector(g, B, v))));
        }
        for (size_t i = 1; i < refl.size(); ++i) gens.push_back(ff::mat_mul(L, refl[0], refl[i]));
        break;
    }
    case GroupType::U: {
        // Unitary reflections x -> x + (zeta - 1) h(v, x) / h(v, v) v, zeta generating N_2.
        const Elem zeta = static_cast<Elem>(g.base.q() - 1);
        for (const auto& v : vecs) {
            if (!projective_rep(L, v)) continue;
            const Elem hv = pairing(g, B, v, v);
            if (hv == ff::ZERO) continue;
            const Elem c = L.div(L.sub(zeta, L.one()), hv);
            gens.push_back(ff::mat_add(L, I, outer(L, c, v, covector(g, B, v))));
        }
        break;
    }
    default: throw std::logic_error("generators: bad type");
    }
    if (is_similitude(g)) {
        // One element of multiplier gen and determinant gen^n.
        const int n = g.n;
        const Elem a = L.gen();
        Mat m = ff::identity(L, N);
        for (int i = 0; i < n; ++i) m(i, i) = a;
        if (g.type == GroupType::GSO_minus) {
            // diag(a I_{n-1}, h, I_{n-1}) with h^T diag(1, -d) h = a diag(1, -d), det h = a
            Mat Bm(2);
            Bm(0, 0) = B(n - 1, n - 1);
            Bm(1, 1) = B(n, n);
            bool found = false;
            for (i64 c = 0; c < L.size() * L.size() * L.size() * L.size() && !found; ++c) {
                Mat h(2);
                i64 r = c;
                for (int k = 0; k < 4; ++k, r /= L.size()) h.a[k] = L.from_code(r % L.size());
                if (ff::det(L, h) != a) continue;
                if (ff::mat_mul(L, ff::mat_mul(L, ff::transpose(h), Bm), h) != ff::mat_scale(L, Bm, a)) continue;
                m(n - 1, n - 1) = h(0, 0);
                m(n - 1, n) = h(0, 1);
                m(n, n - 1) = h(1, 0);
                m(n, n) = h(1, 1);
                found = true;
            }
            if (!found) throw std::logic_error("generators: no similitude block for GSO-");
        }
        gens.push_back(m);
    }
    return gens;
}

const EnumeratedGroup& enumerate_group(const GroupSpec& g)
{
    const i64 order = group_order(g);
    if (order > kEnumerationLimit) throw LimitError("enumerate_group: order " + std::to_string(order) + " exceeds the enumeration bound");
    static std::mutex mu;
    static std::map<Key, std::unique_ptr<EnumeratedGroup>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[key_of(g)];
    if (slot) return *slot;

    const Field& L = matrix_field(g);
    const auto gens = generators(g);
    for (const auto& x : gens)
        if (!in_group(g, x)) throw std::logic_error("enumerate_group: generator outside " + spec_name(g));
    std::unordered_set<Mat, ff::MatHash> seen;
    std::vector<Mat> queue{ff::identity(L, matrix_size(g))};
    seen.insert(queue[0]);
    for (size_t head = 0; head < queue.size(); ++head) {
        for (const auto& s : gens) {
            Mat y = ff::mat_mul(L, queue[head], s);
            if (seen.insert(y).second) {
                queue.push_back(std::move(y));
                if (static_cast<i64>(queue.size()) > order)
                    throw std::logic_error("enumerate_group: closure of " + spec_name(g) + " exceeds the order formula");
            }
        }
    }
    if (static_cast<i64>(queue.size()) != order)
        throw std::logic_error("enumerate_group: closure of " + spec_name(g) + " has " + std::to_string(queue.size()) +
                               " elements, order formula gives " + std::to_string(order));
    auto eg = std::make_unique<EnumeratedGroup>();
    eg->spec = g;
    eg->elements = std::move(queue);
    std::sort(eg->elements.begin(), eg->elements.end());
    slot = std::move(eg);
    return *slot;
}

std::vector<Mat> filter_group(const GroupSpec& g)
{
    validate(g);
    const Field& L = matrix_field(g);
    const int N = matrix_size(g);
    i64 total = 1;
    for (int i = 0; i < N * N; ++i) {
        total = checked_mul(total, L.size());
        if (total > 2'000'000) throw LimitError("filter_group: matrix space too large");
    }
    std::vector<Mat> out;
    Mat m(N);
    std::vector<i64> d(static_cast<size_t>(N) * N, 0);
    for (i64 c = 0; c < total; ++c) {
        for (size_t i = 0; i < d.size(); ++i) m.a[i] = L.from_code(d[i]);
        if (in_group(g, m)) out.push_back(m);
        for (size_t i = 0; i < d.size(); ++i) {
            if (++d[i] < L.size()) break;
            d[i] = 0;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ---- tori ----

TorusDatum make_torus(const GroupSpec& g, std::vector<int> lp, std::vector<int> lm)
{
    validate(g);
    std::sort(lp.rbegin(), lp.rend());
    std::sort(lm.rbegin(), lm.rend());
    for (int x : lp)
        if (x < 1) throw std::invalid_argument("torus: partition parts must be positive");
    for (int x : lm)
        if (x < 1) throw std::invalid_argument("torus: partition parts must be positive");
    if (sum_of(lp) + sum_of(lm) != g.n) throw std::invalid_argument("torus: |lambda+| + |lambda-| must equal n");
    if (g.type == GroupType::GL && !lm.empty()) throw std::invalid_argument("torus: GL tori use lambda_plus only");
    if (is_unitary(g)) {
        for (int x : lp)
            if (x % 2) throw std::invalid_argument("torus: unitary lambda+ must have even parts");
        for (int x : lm)
            if (x % 2 == 0) throw std::invalid_argument("torus: unitary lambda- must have odd parts");
    }
    const GroupType ct = classical_part(g).type;
    if (ct == GroupType::SO_plus && lm.size() % 2) throw std::invalid_argument("torus: SO+ needs an even number of elliptic parts");
    if (ct == GroupType::SO_minus && lm.size() % 2 == 0) throw std::invalid_argument("torus: SO- needs an odd number of elliptic parts");

    TorusDatum t;
    t.group = g;
    t.lambda_plus = lp;
    t.lambda_minus = lm;
    const i64 q = g.base.q();
    i64 order = is_similitude(g) ? q - 1 : 1;
    for (int x : lp) order = checked_mul(order, checked_pow(q, x) - 1);
    for (int x : lm) order = checked_mul(order, checked_pow(q, x) + 1);
    t.order = order;
    t.rel_rank = static_cast<int>(lp.size()) + (is_similitude(g) ? 1 : 0);
    t.epsilon = sign_of(t.rel_rank);
    return t;
}

std::vector<TorusDatum> torus_catalog(const GroupSpec& g)
{
    validate(g);
    std::vector<TorusDatum> out;
    for (int a = g.n; a >= 0; --a) {
        for (const auto& lp : partitions(a)) {
            for (const auto& lm : partitions(g.n - a)) {
                try {
                    out.push_back(make_torus(g, lp, lm));
                } catch (const std::invalid_argument&) {
                }
            }
        }
    }
    return out;
}

json to_json(const TorusDatum& t)
{
    json j;
    j["group"] = spec_name(t.group);
    j["lambda_plus"] = t.lambda_plus;
    j["lambda_minus"] = t.lambda_minus;
    j["torus_order"] = t.order;
    j["rel_rank"] = t.rel_rank;
    j["epsilon"] = t.epsilon;
    return j;
}

i64 count_points(const TorusDatum& td) { return td.order; }

std::vector<Elem> elliptic_fiber(const TorusDatum& td, int i, Elem z)
{
    const ff::Base& b = td.group.base;
    const int m = td.lambda_minus.at(static_cast<size_t>(i));
    const Field& K = b.ext(2 * m);
    const Elem zk = ff::embed(ff::embedding(b.field(), K), z);
    std::vector<Elem> out;
    for (i64 y = 0; y < K.units(); ++y)
        if (K.norm_to(static_cast<Elem>(y), b.f * m) == zk) out.push_back(static_cast<Elem>(y));
    return out;
}

TorusTheta classical_theta(const TorusDatum& td, const std::vector<i64>& alpha, const std::vector<i64>& theta)
{
    if (is_similitude(td.group)) throw std::invalid_argument("classical_theta: similitude torus");
    if (alpha.size() != td.lambda_plus.size() || theta.size() != td.lambda_minus.size())
        throw std::invalid_argument("classical_theta: one exponent per part is required");
    const ff::Base& b = td.group.base;
    TorusTheta th;
    for (size_t j = 0; j < alpha.size(); ++j) th.theta.split.push_back(make_mult_char(b.ext(td.lambda_plus[j]), alpha[j]));
    for (size_t i = 0; i < theta.size(); ++i)
        th.theta.elliptic.push_back(chars::make_norm_one_char(b, td.lambda_minus[i], theta[i]));
    return th;
}

TorusTheta similitude_theta(const TorusDatum& td, const std::vector<i64>& alpha, const std::vector<i64>& beta, i64 nu)
{
    if (!is_similitude(td.group)) throw std::invalid_argument("similitude_theta: classical torus");
    if (alpha.size() != td.lambda_plus.size() || beta.size() != td.lambda_minus.size())
        throw std::invalid_argument("similitude_theta: one exponent per part is required");
    const ff::Base& b = td.group.base;
    TorusTheta th;
    for (size_t j = 0; j < alpha.size(); ++j) th.theta.split.push_back(make_mult_char(b.ext(td.lambda_plus[j]), alpha[j]));
    for (size_t i = 0; i < beta.size(); ++i) {
        const int m = td.lambda_minus[i];
        th.beta.push_back(make_mult_char(b.ext(2 * m), beta[i]));
        // beta(gen^{(q^m - 1) s}) = exp(2 pi i beta s / (q^m + 1))
        th.theta.elliptic.push_back(chars::make_norm_one_char(b, m, th.beta.back().a));
    }
    th.nu = make_mult_char(b.field(), nu);
    return th;
}

std::vector<TorusTheta> all_thetas(const TorusDatum& td)
{
    const ff::Base& b = td.group.base;
    const bool sim = is_similitude(td.group);
    std::vector<i64> mods;
    for (int l : td.lambda_plus) mods.push_back(b.ext(l).units());
    for (int m : td.lambda_minus) mods.push_back(sim ? b.ext(2 * m).units() : ff::ipow(b.q(), m) + 1);
    if (sim && td.lambda_minus.empty()) mods.push_back(b.field().units());
    std::vector<TorusTheta> out;
    std::vector<i64> e(mods.size(), 0);
    const size_t np = td.lambda_plus.size(), nm = td.lambda_minus.size();
    for (;;) {
        std::vector<i64> a(e.begin(), e.begin() + static_cast<long>(np));
        std::vector<i64> t(e.begin() + static_cast<long>(np), e.begin() + static_cast<long>(np + nm));
        if (sim)
            out.push_back(similitude_theta(td, a, t, e.size() > np + nm ? e.back() : 0));
        else
            out.push_back(classical_theta(td, a, t));
        size_t d = 0;
        for (; d < e.size(); ++d) {
            if (++e[d] < mods[d]) break;
            e[d] = 0;
        }
        if (d == e.size()) break;
    }
    return out;
}

cplx eval_theta(const TorusDatum& td, const TorusTheta& th, const TorusPoint& t)
{
    cplx v = 1;
    for (size_t j = 0; j < t.x.size(); ++j) v *= th.theta.split[j](t.x[j]);
    if (is_similitude(td.group)) {
        for (size_t i = 0; i < t.y.size(); ++i) v *= th.beta[i](t.y[i]);
        if (th.nu) v *= (*th.nu)(t.z);
    } else {
        for (size_t i = 0; i < t.y.size(); ++i) v *= th.theta.elliptic[i](t.y[i]);
    }
    return v;
}

json theta_params(const TorusTheta& th)
{
    json j;
    std::vector<i64> a, t, bt;
    for (const auto& x : th.theta.split) a.push_back(x.a);
    for (const auto& x : th.theta.elliptic) t.push_back(x.b);
    for (const auto& x : th.beta) bt.push_back(x.a);
    j["alpha"] = a;
    j["theta"] = t;
    if (th.nu) {
        j["beta"] = bt;
        j["nu"] = th.nu->a;
    }
    return j;
}

MultChar make_chi(const GroupSpec& g, i64 chi) { return make_mult_char(matrix_field(g), chi); }

bool chi_conjugate_dual(const GroupSpec& g, const MultChar& chi)
{
    return chars::is_conjugate_dual(chi, g.base, degree_EF(g));
}

namespace {

cplx chi_norm(const MultChar& chi, const Field& K, Elem y)
{
    if (y == ff::ZERO) return 0;
    return chars::eval_in(chi, K, K.norm_to(y, chi.field->e()));
}

void check_chi(const GroupSpec& g, const MultChar& chi)
{
    if (chi.field != &matrix_field(g)) throw std::invalid_argument("dl: chi must live on E");
}

}  // namespace

cplx kernel_on_torus(const TorusDatum& td, const TorusPoint& t, const MultChar& chi)
{
    const GroupSpec& g = td.group;
    check_chi(g, chi);
    if (is_similitude(g) && t.z != 0) return 0;
    const ff::Base& b = g.base;
    const bool uni = is_unitary(g);
    cplx v = 1;
    for (size_t j = 0; j < t.x.size(); ++j) {
        const Field& K = b.ext(td.lambda_plus[j]);
        const Elem x = t.x[j];
        v *= chi_norm(chi, K, K.add(K.one(), x));
        if (g.type == GroupType::GL) continue;
        const Elem xb = uni ? K.inv(K.frobenius(x, b.f)) : K.inv(x);
        v *= chi_norm(chi, K, K.add(K.one(), xb));
    }
    for (size_t i = 0; i < t.y.size(); ++i) {
        const Field& K = b.ext(2 * td.lambda_minus[i]);
        v *= chi_norm(chi, K, K.add(K.one(), t.y[i]));
    }
    if (g.type == GroupType::SO_odd) v *= chi(chi.field->from_int(2));
    return v;
}

// ---- explicit embeddings ----

namespace {

struct Blocks {
    Mat form;
    std::vector<Linear> split, ell;
};

Blocks torus_blocks(const TorusDatum& td, Elem middle)
{
    const GroupSpec& g = td.group;
    const ff::Base& b = g.base;
    const Field& L = matrix_field(g);
    const int N = matrix_size(g);
    const int s = g.type == GroupType::GL ? 1 : form_sign(g);
    Blocks bl;
    bl.form = Mat(N);
    int off = 0;
    for (int l : td.lambda_plus) {
        bl.split.push_back(make_linear(b.ext(l), L));
        const int d = bl.split.back().dim;
        if (g.type == GroupType::GL) {
            off += d;
            continue;
        }
        for (int i = 0; i < d; ++i) {
            bl.form(off + i, off + d + i) = L.one();
            bl.form(off + d + i, off + i) = s == 1 ? L.one() : L.minus_one();
        }
        off += 2 * d;
    }
    for (int m : td.lambda_minus) {
        const Field& K = b.ext(2 * m);
        bl.ell.push_back(make_linear(K, L));
        const Linear& lin = bl.ell.back();
        // Tr(delta u^tau v), tau the q^m power; delta^tau = -delta in the alternating case.
        const Elem delta = s == 1 ? K.one() : static_cast<Elem>((ff::ipow(b.q(), m) + 1) / 2);
        for (int i = 0; i < lin.dim; ++i)
            for (int j = 0; j < lin.dim; ++j) {
                const Elem bi = K.frobenius(static_cast<Elem>(i), b.f * m);
                bl.form(off + i, off + j) = lin.tr(K.mul(delta, K.mul(bi, static_cast<Elem>(j))));
            }
        off += lin.dim;
    }
    if (g.type == GroupType::SO_odd) bl.form(off, off) = middle;
    return bl;
}

// Greedy Witt extension: columns v_i of P with conj(v_i)^T B v_j = Q_ij.
std::optional<Mat> find_isometry(const GroupSpec& g, const Mat& B, const Mat& Q)
{
    const Field& L = matrix_field(g);
    const int N = B.n;
    const auto vecs = all_vectors(L, N);
    std::vector<Vec> chosen;
    std::vector<Vec> echelon;  // reduced rows with pivots
    std::vector<int> pivots;
    for (int i = 0; i < N; ++i) {
        bool ok = false;
        for (const auto& v : vecs) {
            // linear independence from the chosen vectors
            Vec r = v;
            for (size_t k = 0; k < echelon.size(); ++k) {
                const Elem c = r[pivots[k]];
                if (c == ff::ZERO) continue;
                for (int j = 0; j < N; ++j) r[j] = L.sub(r[j], L.mul(c, echelon[k][j]));
            }
            int pv = -1;
            for (int j = 0; j < N && pv < 0; ++j)
                if (r[j] != ff::ZERO) pv = j;
            if (pv < 0) continue;
            if (pairing(g, B, v, v) != Q(i, i)) continue;
            bool match = true;
            for (int k = 0; k < i && match; ++k)
                match = pairing(g, B, chosen[k], v) == Q(k, i) && pairing(g, B, v, chosen[k]) == Q(i, k);
            if (!match) continue;
            const Elem inv = L.inv(r[pv]);
            for (auto& e : r) e = L.mul(e, inv);
            for (auto& row : echelon) {
                const Elem c = row[pv];
                if (c == ff::ZERO) continue;
                for (int j = 0; j < N; ++j) row[j] = L.sub(row[j], L.mul(c, r[j]));
            }
            echelon.push_back(r);
            pivots.push_back(pv);
            chosen.push_back(v);
            ok = true;
            break;
        }
        if (!ok) return std::nullopt;
    }
    Mat P(N);
    for (int i = 0; i < N; ++i)
        for (int j = 0; j < N; ++j) P(j, i) = chosen[i][j];
    return P;
}

Mat torus_matrix(const TorusDatum& td, const Blocks& bl, const TorusPoint& t)
{
    const GroupSpec& g = td.group;
    const Field& L = matrix_field(g);
    const int N = matrix_size(g);
    const Elem zL = ff::embed(ff::embedding(g.base.field(), L), t.z);
    Mat m(N);
    int off = 0;
    for (size_t j = 0; j < bl.split.size(); ++j) {
        const Mat A = bl.split[j].mult(t.x[j]);
        const int d = A.n;
        if (g.type == GroupType::GL) {
            put_block(m, A, off);
            off += d;
            continue;
        }
        put_block(m, ff::mat_scale(L, A, zL), off);
        put_block(m, ff::inverse(L, ff::transpose(conj(g, A))), off + d);
        off += 2 * d;
    }
    for (size_t i = 0; i < bl.ell.size(); ++i) {
        const Mat A = bl.ell[i].mult(t.y[i]);
        put_block(m, A, off);
        off += A.n;
    }
    if (g.type == GroupType::SO_odd) m(off, off) = L.one();
    return m;
}

}  // namespace

const TorusEmbedding& torus_embedding(const TorusDatum& td)
{
    static std::mutex mu;
    static std::map<std::tuple<Key, std::vector<int>, std::vector<int>>, std::unique_ptr<TorusEmbedding>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{key_of(td.group), td.lambda_plus, td.lambda_minus}];
    if (slot) return *slot;
    const GroupSpec& g = td.group;
    const Field& L = matrix_field(g);
    auto em = std::make_unique<TorusEmbedding>();
    em->td = td;
    if (g.type == GroupType::GL) {
        em->form = Mat(matrix_size(g));
        em->P = em->Pinv = ff::identity(L, matrix_size(g));
    } else {
        const Mat B = form_matrix(classical_part(g));
        std::vector<Elem> middles{L.one()};
        if (g.type == GroupType::SO_odd) middles.push_back(L.gen());
        bool found = false;
        for (Elem c : middles) {
            const Blocks bl = torus_blocks(td, c);
            if (auto P = find_isometry(g, B, bl.form)) {
                em->form = bl.form;
                em->P = *P;
                em->Pinv = ff::inverse(L, *P);
                em->middle = c;
                found = true;
                break;
            }
        }
        if (!found) throw std::logic_error("torus_embedding: torus form is not isometric to the form of " + spec_name(g));
    }
    slot = std::move(em);
    return *slot;
}

Mat embed_point(const TorusEmbedding& em, const TorusPoint& t)
{
    const Field& L = matrix_field(em.td.group);
    const Blocks bl = torus_blocks(em.td, em.middle);
    return ff::mat_mul(L, ff::mat_mul(L, em.P, torus_matrix(em.td, bl, t)), em.Pinv);
}

Report verify_torus_embedding(const TorusDatum& td, const MultChar& chi)
{
    const GroupSpec& g = td.group;
    check_chi(g, chi);
    const Field& L = matrix_field(g);
    const TorusEmbedding& em = torus_embedding(td);
    const Blocks bl = torus_blocks(td, em.middle);
    const EnumeratedGroup* eg = nullptr;
    if (group_order(g) <= kEmbeddingCheckLimit) eg = &enumerate_group(g);
    cplx lhs = 0, rhs = 0;
    double worst = 0;
    bool members = true;
    long long count = 0;
    for_each_point(td, [&](const TorusPoint& t) {
        const Mat x = ff::mat_mul(L, ff::mat_mul(L, em.P, torus_matrix(td, bl, t)), em.Pinv);
        ++count;
        const Elem mu = multiplier(g, x);
        const Elem zL = ff::embed(ff::embedding(g.base.field(), L), t.z);
        if (mu != zL || (eg && !eg->contains(x))) members = false;
        if (t.z != 0) return;
        const Elem d = ff::det(L, ff::mat_add(L, ff::identity(L, x.n), x));
        const cplx direct = d == ff::ZERO ? cplx(0) : chi(d);
        const cplx formula = kernel_on_torus(td, t, chi);
        lhs += formula;
        rhs += direct;
        worst = std::max(worst, std::abs(formula - direct));
    });
    json p;
    p["group"] = spec_name(g);
    p["lambda_plus"] = td.lambda_plus;
    p["lambda_minus"] = td.lambda_minus;
    p["chi"] = chi.a;
    p["enumerated"] = eg != nullptr;
    Report r;
    r.identity = "torus_embedding";
    r.params = p;
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = members ? worst : std::max(worst, 1.0);
    r.tol = kDefaultTolScale * (1.0 + static_cast<double>(count));
    r.pass = members && r.abs_err <= r.tol;
    return r;
}

// ---- the doubling identity on tori ----

chars::HatChar transfer(const TorusDatum& td, const TorusTheta& th)
{
    return chars::transfer_torus_char(th.theta, td.group.base, degree_EF(td.group));
}

namespace {

double index_of(const TorusDatum& td)
{
    const i64 h = group_order(td.group);
    if (h % td.order != 0) throw std::logic_error("dl: torus order does not divide the group order");
    return static_cast<double>(h / td.order);
}

void require_dl_group(const GroupSpec& g)
{
    if (g.type == GroupType::GL) throw UnsupportedError("dl: GL is handled by the GL Jacobi sums");
}

json dl_params(const TorusDatum& td, const TorusTheta& th, const MultChar& chi, const AddChar& psi)
{
    json p;
    p["group"] = spec_name(td.group);
    p["q"] = td.group.base.q();
    p["psi_scale"] = psi.c;
    p["lambda_plus"] = td.lambda_plus;
    p["lambda_minus"] = td.lambda_minus;
    p["theta"] = theta_params(th);
    p["chi"] = chi.a;
    return p;
}

long long rhs_terms(const chars::HatChar& h)
{
    long long s = 0;
    for (const auto& c : h.comps) s += c.field->units();
    return s;
}

}  // namespace

cplx dl_pairing_lhs(const TorusDatum& td, const TorusTheta& th, const MultChar& chi, const AddChar& psi,
                    long long* terms)
{
    (void)psi;
    require_dl_group(td.group);
    check_chi(td.group, chi);
    cplx s = 0;
    long long n = 0;
    for_each_point(td, [&](const TorusPoint& t) {
        ++n;
        const cplx phi = kernel_on_torus(td, t, chi);
        if (phi != cplx(0)) s += eval_theta(td, th, t) * phi;
    });
    if (terms) *terms = n;
    return index_of(td) / std::sqrt(static_cast<double>(lie_algebra_size(td.group))) * s;
}

DlGamma dl_gamma_rhs(const TorusDatum& td, const TorusTheta& th, const MultChar& chi, const AddChar& psi)
{
    const GroupSpec& g = td.group;
    require_dl_group(g);
    check_chi(g, chi);
    if (chi_conjugate_dual(g, chi))
        throw std::invalid_argument("dl_gamma: chi is conjugate-dual; use the appendix_C_dl verifier");
    const auto hat = transfer(td, th);
    DlGamma r;
    r.gamma = sums::gauss_hat(hat, chi, psi);
    const int eps_G = sign_of(rel_rank(classical_part(g)));
    r.c_V = sums::c_normalization(g.base, degree_EF(g), dim_F_V(g), eps_G, chi, psi);
    r.R1 = sign_of(rel_rank(g)) * td.epsilon * index_of(td) / static_cast<double>(p_part(g));
    r.rhs = r.R1 * r.c_V * r.gamma;
    long long n = 0;
    r.lhs = dl_pairing_lhs(td, th, chi, psi, &n);
    r.terms = n + rhs_terms(hat);
    return r;
}

Report verify_dl(const TorusDatum& td, const TorusTheta& th, const MultChar& chi, const AddChar& psi,
                 const DlOptions& opt)
{
    const DlGamma d = dl_gamma_rhs(td, th, chi, psi);
    cplx rhs = d.rhs;
    json p = dl_params(td, th, chi, psi);
    std::string name = "dl_main";
    if (opt.drop_chi2 && td.group.type == GroupType::SO_odd) {
        rhs /= chi(chi.field->from_int(2));
        name = "dl_main_without_chi2";
    }
    return make_report(name, p, d.lhs, rhs, d.terms, opt.scale);
}

Report verify_dl_multiplicativity(const TorusDatum& td, const TorusTheta& th, const MultChar& chi,
                                  const AddChar& psi, double scale)
{
    require_dl_group(td.group);
    const auto hat = transfer(td, th);
    // Whole torus by direct summation over the transferred torus, parts by their own transfers.
    const cplx whole = sums::gauss_torus_direct(hat.comps, chi, psi);
    cplx parts = 1;
    const GroupSpec base = classical_part(td.group);
    long long terms = 1;
    for (const auto& c : hat.comps) terms *= c.field->units();
    for (size_t j = 0; j < td.lambda_plus.size(); ++j) {
        GroupSpec gj = base;
        gj.n = td.lambda_plus[j];
        if (gj.type == GroupType::SO_minus) gj.type = GroupType::SO_plus;
        const TorusDatum tj = make_torus(gj, {td.lambda_plus[j]}, {});
        TorusTheta sj;
        sj.theta.split = {th.theta.split[j]};
        parts *= sums::gauss_hat(transfer(tj, sj), chi, psi);
    }
    for (size_t i = 0; i < td.lambda_minus.size(); ++i) {
        GroupSpec gi = base;
        gi.n = td.lambda_minus[i];
        if (gi.type == GroupType::SO_plus) gi.type = GroupType::SO_minus;
        const TorusDatum ti = make_torus(gi, {}, {td.lambda_minus[i]});
        TorusTheta si;
        si.theta.elliptic = {th.theta.elliptic[i]};
        parts *= sums::gauss_hat(transfer(ti, si), chi, psi);
    }
    return make_report("dl_multiplicativity", dl_params(td, th, chi, psi), whole, parts, terms + rhs_terms(hat),
                       scale);
}

Report verify_geometric_conjugacy(const ff::Base& b, i64 theta, const AddChar& psi)
{
    const GroupSpec g{GroupType::Sp, 2, b};
    const TorusDatum t1 = make_torus(g, {}, {1, 1});
    const TorusDatum t2 = make_torus(g, {2}, {});
    const TorusTheta th1 = classical_theta(t1, {}, {theta, theta});
    const NormOneChar base_theta = chars::make_norm_one_char(b, 1, theta);
    const TorusTheta th2 = classical_theta(t2, {chars::transfer_theta(base_theta).a}, {});
    const auto h1 = transfer(t1, th1), h2 = transfer(t2, th2);
    const Field& F = b.field();
    const bool equal = chars::canonical(h1, F) == chars::canonical(h2, F);
    // Equality is decided on exponents; the gamma values are reported for reference.
    const MultChar chi = make_mult_char(F, 1);
    json p;
    p["q"] = b.q();
    p["psi_scale"] = psi.c;
    p["theta"] = base_theta.b;
    std::vector<i64> e1, e2;
    for (const auto& c : chars::canonical(h1, F).comps) e1.push_back(c.a);
    for (const auto& c : chars::canonical(h2, F).comps) e2.push_back(c.a);
    p["hat_elliptic"] = e1;
    p["hat_split"] = e2;
    return make_exact_report("geometric_conjugacy", p, equal, sums::gauss_hat(h1, chi, psi),
                             sums::gauss_hat(h2, chi, psi));
}

bool appendix_C_dl_applies(const TorusDatum& td, const TorusTheta& th, const MultChar& chi)
{
    const GroupSpec& g = td.group;
    if (!chi_conjugate_dual(g, chi)) return false;
    for (const auto& a : th.theta.split)
        if (a == chars::lift_norm(chi, *a.field).inverse()) return false;
    if (degree_EF(g) == 1) {
        for (const auto& e : th.theta.elliptic) {
            const MultChar h = chars::transfer_theta(e);
            if (h == chars::lift_norm(chi, *h.field)) return false;
        }
    }
    return true;
}

Report verify_appendix_C_dl(const TorusDatum& td, const TorusTheta& th, const MultChar& chi, const AddChar& psi,
                            double scale)
{
    const GroupSpec& g = td.group;
    require_dl_group(g);
    check_chi(g, chi);
    if (!chi_conjugate_dual(g, chi)) throw std::invalid_argument("appendix_C_dl: chi must be conjugate-dual");
    if (!appendix_C_dl_applies(td, th, chi))
        throw std::invalid_argument("appendix_C_dl: a split or elliptic part meets the excluded character");
    const auto hat = transfer(td, th);
    const cplx gamma = sums::gauss_hat(hat, chi, psi);
    long long n = 0;
    const cplx lhs = dl_pairing_lhs(td, th, chi, psi, &n);
    const int eps_G = sign_of(rel_rank(classical_part(g)));
    const double R1 = sign_of(rel_rank(g)) * td.epsilon * index_of(td) / static_cast<double>(p_part(g));
    cplx rhs = static_cast<double>(eps_G) * std::pow(static_cast<double>(g.base.q()), -(dim_F_V(g) / 2) / 2.0) * R1 /
               gamma;
    if (g.type == GroupType::SO_odd) rhs *= chi(chi.field->from_int(2));
    return make_report("appendix_C_dl", dl_params(td, th, chi, psi), lhs, rhs, n + rhs_terms(hat), scale);
}

}  // namespace charforge::groups
