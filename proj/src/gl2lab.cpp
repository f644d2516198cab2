#include "gl2lab.hpp"

#include "errors.hpp"
#include "sums.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace charforge::gl2 {

using chars::make_mult_char;

std::string family_name(ClassFamily f)
{
    switch (f) {
    case ClassFamily::Central: return "central";
    case ClassFamily::NonSemisimple: return "non-semisimple";
    case ClassFamily::Split: return "split";
    case ClassFamily::Elliptic: return "elliptic";
    }
    return "?";
}

std::string family_name(RowFamily f)
{
    switch (f) {
    case RowFamily::OneDim: return "one-dimensional";
    case RowFamily::Steinberg: return "steinberg";
    case RowFamily::PrincipalSeries: return "principal-series";
    case RowFamily::Cuspidal: return "cuspidal";
    }
    return "?";
}

std::string Gl2IrrepRow::name() const
{
    std::string s = family_name(family) + "(";
    for (size_t i = 0; i < params.size(); ++i) s += (i ? "," : "") + std::to_string(params[i]);
    return s + ")";
}

const Field& Gl2Table::F() const { return Field::get(q, 1); }
const Field& Gl2Table::K() const { return Field::get(q, 2); }
const std::vector<Mat>& Gl2Table::elements() const { return ff::general_linear(F(), 2); }
i64 Gl2Table::order() const { return static_cast<i64>(elements().size()); }

namespace {

Elem embed_FK(const Field& F, const Field& K, Elem a) { return ff::embed(ff::embedding(F, K), a); }

// Family and parameters of the class of g.
std::pair<ClassFamily, std::vector<Elem>> invariants(const Field& F, const Field& K, const Mat& g)
{
    if (g(0, 1) == ff::ZERO && g(1, 0) == ff::ZERO && g(0, 0) == g(1, 1)) return {ClassFamily::Central, {g(0, 0)}};
    const Elem s = ff::trace(F, g);
    const Elem d = ff::det(F, g);
    const Elem two = F.from_int(2);
    const Elem disc = F.sub(F.mul(s, s), F.mul(F.from_int(4), d));
    if (disc == ff::ZERO) return {ClassFamily::NonSemisimple, {F.div(s, two)}};
    if (disc % 2 == 0) {
        const Elem r = static_cast<Elem>(disc / 2);
        Elem a = F.div(F.add(s, r), two), b = F.div(F.sub(s, r), two);
        if (a > b) std::swap(a, b);
        return {ClassFamily::Split, {a, b}};
    }
    const Elem dk = embed_FK(F, K, disc);
    const Elem r = static_cast<Elem>(dk / 2);
    const Elem z = K.div(K.add(embed_FK(F, K, s), r), embed_FK(F, K, two));
    return {ClassFamily::Elliptic, {std::min(z, K.frobenius(z, 1))}};
}

cplx on_F(const MultChar& beta, const Field& F, Elem a)
{
    return beta(embed_FK(F, *beta.field, a));
}

}  // namespace

int Gl2Table::classify(const Mat& g) const
{
    const auto inv = invariants(F(), K(), g);
    for (size_t i = 0; i < classes.size(); ++i)
        if (classes[i].family == inv.first && classes[i].params == inv.second) return static_cast<int>(i);
    throw std::logic_error("gl2: element outside every class");
}

namespace {

std::unique_ptr<Gl2Table> build_table(int q)
{
    auto t = std::make_unique<Gl2Table>();
    t->q = q;
    const Field& F = t->F();
    const Field& K = t->K();
    const i64 n = F.units();
    const i64 nk = K.units();
    auto& cl = t->classes;

    for (i64 a = 0; a < n; ++a) cl.push_back({ff::scalar(F, 2, static_cast<Elem>(a)), 1, ClassFamily::Central, {static_cast<Elem>(a)}});
    for (i64 a = 0; a < n; ++a) {
        Mat m = ff::scalar(F, 2, static_cast<Elem>(a));
        m(0, 1) = static_cast<Elem>(a);
        cl.push_back({m, q * q - 1, ClassFamily::NonSemisimple, {static_cast<Elem>(a)}});
    }
    for (i64 a = 0; a < n; ++a)
        for (i64 b = a + 1; b < n; ++b) {
            Mat m(2);
            m(0, 0) = static_cast<Elem>(a);
            m(1, 1) = static_cast<Elem>(b);
            cl.push_back({m, static_cast<i64>(q) * (q + 1), ClassFamily::Split, {static_cast<Elem>(a), static_cast<Elem>(b)}});
        }
    for (i64 z = 0; z < nk; ++z) {
        const Elem ze = static_cast<Elem>(z);
        if (K.in_subfield(ze, 1) || K.frobenius(ze, 1) < ze) continue;
        // companion matrix of t^2 - Tr(z) t + N(z)
        const auto& em = ff::embedding(F, K);
        Mat m(2);
        m(0, 1) = F.neg(ff::pull(em, K.norm_to(ze, 1)));
        m(1, 0) = F.one();
        m(1, 1) = ff::pull(em, K.trace_to(ze, 1));
        cl.push_back({m, static_cast<i64>(q) * (q - 1), ClassFamily::Elliptic, {ze}});
    }

    const auto& els = t->elements();
    t->class_of.reserve(els.size());
    for (const auto& g : els) t->class_of.push_back(t->classify(g));

    const double dq = q;
    auto add_row = [&](RowFamily fam, std::vector<i64> params, i64 dim, auto value, std::vector<MultChar> support) {
        Gl2IrrepRow r;
        r.family = fam;
        r.params = std::move(params);
        r.dim = dim;
        r.support = std::move(support);
        for (const auto& c : cl) r.values.push_back(value(c));
        t->rows.push_back(std::move(r));
    };
    for (i64 e = 0; e < n; ++e) {
        const MultChar al = make_mult_char(F, e);
        const MultChar alK = chars::lift_norm(al, K);
        add_row(RowFamily::OneDim, {e}, 1, [&](const Gl2Class& c) -> cplx {
            switch (c.family) {
            case ClassFamily::Central:
            case ClassFamily::NonSemisimple: return al(c.params[0]) * al(c.params[0]);
            case ClassFamily::Split: return al(c.params[0]) * al(c.params[1]);
            case ClassFamily::Elliptic: return alK(c.params[0]);
            }
            return 0;
        }, {al, al});
    }
    for (i64 e = 0; e < n; ++e) {
        const MultChar al = make_mult_char(F, e);
        const MultChar alK = chars::lift_norm(al, K);
        add_row(RowFamily::Steinberg, {e}, q, [&](const Gl2Class& c) -> cplx {
            switch (c.family) {
            case ClassFamily::Central: return dq * al(c.params[0]) * al(c.params[0]);
            case ClassFamily::NonSemisimple: return 0;
            case ClassFamily::Split: return al(c.params[0]) * al(c.params[1]);
            case ClassFamily::Elliptic: return -alK(c.params[0]);
            }
            return 0;
        }, {al, al});
    }
    for (i64 e1 = 0; e1 < n; ++e1)
        for (i64 e2 = e1 + 1; e2 < n; ++e2) {
            const MultChar a1 = make_mult_char(F, e1), a2 = make_mult_char(F, e2);
            add_row(RowFamily::PrincipalSeries, {e1, e2}, q + 1, [&](const Gl2Class& c) -> cplx {
                switch (c.family) {
                case ClassFamily::Central: return (dq + 1) * a1(c.params[0]) * a2(c.params[0]);
                case ClassFamily::NonSemisimple: return a1(c.params[0]) * a2(c.params[0]);
                case ClassFamily::Split:
                    return a1(c.params[0]) * a2(c.params[1]) + a1(c.params[1]) * a2(c.params[0]);
                case ClassFamily::Elliptic: return 0;
                }
                return 0;
            }, {a1, a2});
        }
    for (i64 b = 0; b < nk; ++b) {
        const MultChar be = make_mult_char(K, b);
        if (!chars::is_regular(be, F) || chars::orbit_min(be, q) != b) continue;
        add_row(RowFamily::Cuspidal, {b}, q - 1, [&](const Gl2Class& c) -> cplx {
            switch (c.family) {
            case ClassFamily::Central: return (dq - 1) * on_F(be, F, c.params[0]);
            case ClassFamily::NonSemisimple: return -on_F(be, F, c.params[0]);
            case ClassFamily::Split: return 0;
            case ClassFamily::Elliptic: return -(be(c.params[0]) + be(K.frobenius(c.params[0], 1)));
            }
            return 0;
        }, {be});
    }
    return t;
}

}  // namespace

const Gl2Table& gl2_char_table(int q)
{
    if (q != 3 && q != 5 && q != 7) throw UnsupportedError("gl2: q must be 3, 5 or 7");
    static std::mutex mu;
    static std::map<int, std::unique_ptr<Gl2Table>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[q];
    if (!slot) slot = build_table(q);
    return *slot;
}

cplx inner(const Gl2Table& t, const std::vector<cplx>& a, const std::vector<cplx>& b)
{
    cplx s = 0;
    for (size_t i = 0; i < t.classes.size(); ++i) s += static_cast<double>(t.classes[i].size) * a[i] * std::conj(b[i]);
    return s / static_cast<double>(t.order());
}

namespace {

void check_chi(const Gl2Table& t, const MultChar& chi)
{
    if (chi.field != &t.F()) throw std::invalid_argument("gl2: chi must be a character of F_q^x");
}

Elem trace_inverse(const Field& F, const Mat& g) { return F.div(ff::trace(F, g), ff::det(F, g)); }

cplx kernel(const Gl2Table& t, const Mat& g, const MultChar& chi, const AddChar& psi)
{
    if (!chi.trivial() || t.q == 3) return sums::jacobi_kernel_gl(t.F(), g, chi, psi);
    return sums::kernel_li_hu(t.F(), g);
}

json row_params(const Gl2Table& t, const Gl2IrrepRow& row, const MultChar& chi, const AddChar& psi)
{
    json p;
    p["q"] = t.q;
    p["psi_scale"] = psi.c;
    p["row"] = row.name();
    p["chi"] = chi.a;
    return p;
}

}  // namespace

cplx kondo_brute(const Gl2Table& t, const Gl2IrrepRow& row, const MultChar& chi, const AddChar& psi)
{
    check_chi(t, chi);
    const Field& F = t.F();
    const auto& els = t.elements();
    cplx s = 0;
    for (size_t i = 0; i < els.size(); ++i)
        s += psi(F, trace_inverse(F, els[i])) * chi(ff::det(F, els[i])) * row.values[t.class_of[i]];
    return s / (static_cast<double>(t.q) * t.q * static_cast<double>(row.dim));
}

cplx jacobi_brute(const Gl2Table& t, const Gl2IrrepRow& row, const MultChar& chi, const AddChar& psi)
{
    check_chi(t, chi);
    const auto& els = t.elements();
    cplx s = 0;
    for (size_t i = 0; i < els.size(); ++i) s += kernel(t, els[i], chi, psi) * row.values[t.class_of[i]];
    return s / (static_cast<double>(t.q) * t.q * static_cast<double>(row.dim));
}

bool trivial_in_support(const Gl2IrrepRow& row)
{
    for (const auto& a : row.support)
        if (a.trivial()) return true;
    return false;
}

Report verify_kondo(const Gl2Table& t, const Gl2IrrepRow& row, const MultChar& chi, const AddChar& psi)
{
    const cplx lhs = kondo_brute(t, row, chi, psi);
    const auto kv = sums::kondo_product(row.support, chi, psi);
    json p = row_params(t, row, chi, psi);
    p["nonregular"] = kv.nonregular;
    return make_report("kondo", p, lhs, kv.value, t.order(), 1e-7 / (1.0 + static_cast<double>(t.order())));
}

Report verify_jacobi(const Gl2Table& t, const Gl2IrrepRow& row, const MultChar& chi, const AddChar& psi)
{
    if (chi.trivial() && trivial_in_support(row))
        throw std::invalid_argument("gl2 jacobi: trivial chi needs a support without the trivial character");
    const cplx lhs = jacobi_brute(t, row, chi, psi);
    const cplx rhs = sums::jacobi_scalar_gl_formula(row.support, chi, psi);
    json p = row_params(t, row, chi, psi);
    if (chi.trivial()) p["kernel"] = t.q == 3 ? "fourier_sum" : "closed_form";
    return make_report(chi.trivial() ? "appendix_C_gl_trivial_chi" : "gl_jacobi", p, lhs, rhs, t.order(),
                       1e-7 / (1.0 + static_cast<double>(t.order())));
}

std::vector<Mat> singular_representatives(int q)
{
    const Field& F = Field::get(q, 1);
    std::vector<Mat> out;
    out.push_back(Mat(2));
    Mat n(2);
    n(0, 1) = F.one();
    out.push_back(n);
    for (i64 a = 0; a < F.units(); ++a) {
        Mat d(2);
        d(0, 0) = static_cast<Elem>(a);
        out.push_back(d);
    }
    return out;
}

Report verify_singular_vanishing(int q, const Mat& X, const MultChar& chi, const AddChar& psi)
{
    const Field& F = Field::get(q, 1);
    if (chi.field != &F) throw std::invalid_argument("singular: chi must be a character of F_q^x");
    if (chi.trivial()) throw std::invalid_argument("singular: chi must be nontrivial");
    if (X.n != 2 || ff::det(F, X) != ff::ZERO) throw std::invalid_argument("singular: X must be a singular 2x2 matrix");
    const auto& els = ff::general_linear(F, 2);
    cplx s = 0;
    for (const auto& h : els) s += chi(ff::det(F, h)) * psi(F, ff::trace(F, ff::mat_mul(F, X, h)));
    json p;
    p["q"] = q;
    p["psi_scale"] = psi.c;
    p["X"] = ff::to_string(F, X);
    p["chi"] = chi.a;
    return make_report("singular_vanishing", p, s, 0, static_cast<long long>(els.size()),
                       1e-7 / (1.0 + static_cast<double>(els.size())));
}

Report dl_pairing_check_gl2(int q, TorusKind kind, const std::vector<i64>& theta, TestFunction f, const MultChar& chi,
                            const AddChar& psi)
{
    const Gl2Table& t = gl2_char_table(q);
    const Field& F = t.F();
    const Field& K = t.K();
    check_chi(t, chi);
    if (f == TestFunction::Jacobi && chi.trivial())
        throw std::invalid_argument("gl2 pairing: the chi = 1 kernel is not a function of the semisimple part");
    auto fval = [&](const Mat& g) -> cplx {
        if (f == TestFunction::ChiDet) return chi(ff::det(F, g));
        return kernel(t, g, chi, psi);
    };
    std::vector<cplx> R(t.classes.size());
    cplx rhs = 0;
    i64 tsize = 0;
    if (kind == TorusKind::Split) {
        if (theta.size() != 2) throw std::invalid_argument("gl2 pairing: split theta needs two exponents");
        const MultChar a1 = make_mult_char(F, theta[0]), a2 = make_mult_char(F, theta[1]);
        // R_{T,theta} = Ind_B^G(a1 x a2)
        for (size_t i = 0; i < t.classes.size(); ++i) {
            const auto& c = t.classes[i];
            switch (c.family) {
            case ClassFamily::Central: R[i] = (q + 1.0) * a1(c.params[0]) * a2(c.params[0]); break;
            case ClassFamily::NonSemisimple: R[i] = a1(c.params[0]) * a2(c.params[0]); break;
            case ClassFamily::Split: R[i] = a1(c.params[0]) * a2(c.params[1]) + a1(c.params[1]) * a2(c.params[0]); break;
            case ClassFamily::Elliptic: R[i] = 0; break;
            }
        }
        for (i64 x = 0; x < F.units(); ++x)
            for (i64 y = 0; y < F.units(); ++y) {
                Mat d(2);
                d(0, 0) = static_cast<Elem>(x);
                d(1, 1) = static_cast<Elem>(y);
                rhs += a1(d(0, 0)) * a2(d(1, 1)) * std::conj(fval(d));
                ++tsize;
            }
    } else {
        if (theta.size() != 1) throw std::invalid_argument("gl2 pairing: elliptic theta needs one exponent");
        const MultChar be = make_mult_char(K, theta[0]);
        if (!chars::is_regular(be, F)) throw std::invalid_argument("gl2 pairing: elliptic theta must be regular");
        // R_{T,theta} = -(cuspidal character of theta)
        for (size_t i = 0; i < t.classes.size(); ++i) {
            const auto& c = t.classes[i];
            switch (c.family) {
            case ClassFamily::Central: R[i] = -(q - 1.0) * on_F(be, F, c.params[0]); break;
            case ClassFamily::NonSemisimple: R[i] = on_F(be, F, c.params[0]); break;
            case ClassFamily::Split: R[i] = 0; break;
            case ClassFamily::Elliptic: R[i] = be(c.params[0]) + be(K.frobenius(c.params[0], 1)); break;
            }
        }
        // F_{q^2}^x acting on F_{q^2} = F + F x by multiplication.
        const auto& em = ff::embedding(F, K);
        const Elem x = K.gen();
        for (i64 zi = 0; zi < K.units(); ++zi) {
            const Elem z = static_cast<Elem>(zi);
            // coordinates of w = a + b x over F
            auto coords = [&](Elem w) {
                const Elem w1 = K.frobenius(w, 1), x1 = K.frobenius(x, 1);
                const Elem b = K.div(K.sub(w, w1), K.sub(x, x1));
                const Elem a = K.sub(w, K.mul(b, x));
                return std::pair<Elem, Elem>{ff::pull(em, a), ff::pull(em, b)};
            };
            const auto c0 = coords(z);
            const auto c1 = coords(K.mul(z, x));
            Mat m(2);
            m(0, 0) = c0.first;
            m(1, 0) = c0.second;
            m(0, 1) = c1.first;
            m(1, 1) = c1.second;
            rhs += be(z) * std::conj(fval(m));
            ++tsize;
        }
    }
    const auto& els = t.elements();
    // <R, f>_G by direct summation over the group.
    cplx lhs = 0;
    for (size_t i = 0; i < els.size(); ++i) lhs += R[t.class_of[i]] * std::conj(fval(els[i]));
    lhs /= static_cast<double>(els.size());
    rhs /= static_cast<double>(tsize);
    json p;
    p["q"] = q;
    p["psi_scale"] = psi.c;
    p["torus"] = kind == TorusKind::Split ? "split" : "elliptic";
    p["theta"] = theta;
    p["f"] = f == TestFunction::Jacobi ? "jacobi" : "chi_det";
    p["chi"] = chi.a;
    return make_report("gl2_dl_pairing", p, lhs, rhs, static_cast<long long>(els.size()) + tsize);
}

Report verify_kondo_scalar(const Gl2Table& t, const Gl2IrrepRow& row, const MultChar& chi, const AddChar& psi)
{
    check_chi(t, chi);
    const Field& F = t.F();
    const auto& els = t.elements();
    std::vector<cplx> w(els.size());
    for (size_t i = 0; i < els.size(); ++i) w[i] = psi(F, trace_inverse(F, els[i])) * chi(ff::det(F, els[i]));
    const cplx c = kondo_brute(t, row, chi, psi) * static_cast<double>(t.q) * static_cast<double>(t.q);
    double worst = 0;
    cplx last = c;
    for (const auto& cls : t.classes) {
        const cplx vh = row.values[&cls - t.classes.data()];
        if (std::abs(vh) < 1e-9) continue;
        cplx s = 0;
        for (size_t i = 0; i < els.size(); ++i) s += w[i] * row.values[t.classify(ff::mat_mul(F, els[i], cls.rep))];
        last = s / vh;
        worst = std::max(worst, std::abs(last - c));
    }
    Report r = make_report("kondo_scalar", row_params(t, row, chi, psi), last, c,
                           static_cast<long long>(els.size()) * static_cast<long long>(t.classes.size()));
    r.abs_err = worst;
    r.pass = worst <= r.tol;
    return r;
}

namespace {

struct Tally {
    std::string name;
    long long checks = 0, failures = 0;
    double worst = 0;
    void add(const Report& r)
    {
        ++checks;
        if (!r.pass) ++failures;
        worst = std::max(worst, r.abs_err);
    }
    json to_json() const
    {
        json j;
        j["invariant"] = name;
        j["checks"] = checks;
        j["failures"] = failures;
        j["max_abs_err"] = worst;
        j["pass"] = failures == 0 && checks > 0;
        return j;
    }
};

}  // namespace

json selftest(int q, std::vector<Report>* details)
{
    const Gl2Table& t = gl2_char_table(q);
    const Field& F = t.F();
    const AddChar psi{q, 1};
    auto keep = [&](Tally& tl, Report r) {
        tl.add(r);
        if (details) details->push_back(std::move(r));
    };

    Tally classes{"class_sizes"}, rows{"row_orthogonality"}, cols{"column_orthogonality"}, squares{"sum_of_squares"};
    {
        i64 total = 0;
        for (const auto& c : t.classes) total += c.size;
        json p;
        p["q"] = q;
        p["classes"] = t.classes.size();
        keep(classes, make_exact_report("class_sizes", p,
                                        total == t.order() && static_cast<i64>(t.classes.size()) == i64{q} * q - 1,
                                        static_cast<double>(total), static_cast<double>(t.order())));
        // every element lands in a class of the recorded size
        std::vector<i64> seen(t.classes.size(), 0);
        for (int c : t.class_of) ++seen[c];
        bool ok = true;
        for (size_t i = 0; i < seen.size(); ++i) ok = ok && seen[i] == t.classes[i].size;
        keep(classes, make_exact_report("class_membership", p, ok));
    }
    for (size_t i = 0; i < t.rows.size(); ++i)
        for (size_t j = i; j < t.rows.size(); ++j) {
            json p;
            p["q"] = q;
            p["rows"] = {t.rows[i].name(), t.rows[j].name()};
            keep(rows, make_report("row_orthogonality", p, inner(t, t.rows[i].values, t.rows[j].values), i == j ? 1.0 : 0.0,
                                   static_cast<long long>(t.classes.size())));
        }
    for (size_t a = 0; a < t.classes.size(); ++a)
        for (size_t b = a; b < t.classes.size(); ++b) {
            cplx s = 0;
            for (const auto& r : t.rows) s += r.values[a] * std::conj(r.values[b]);
            const double expect = a == b ? static_cast<double>(t.order()) / static_cast<double>(t.classes[a].size) : 0.0;
            json p;
            p["q"] = q;
            p["classes"] = {a, b};
            keep(cols, make_report("column_orthogonality", p, s, expect, static_cast<long long>(t.rows.size()) * 10));
        }
    {
        double s = 0;
        for (const auto& r : t.rows) s += static_cast<double>(r.dim * r.dim);
        json p;
        p["q"] = q;
        p["rows"] = t.rows.size();
        keep(squares, make_report("sum_of_squares", p, s, static_cast<double>(t.order()), 1));
    }

    Tally kondo{"kondo"}, jac{"gl_jacobi"}, jac1{"appendix_C_gl_trivial_chi"}, scal{"kondo_scalar"};
    for (i64 c = 0; c < F.units(); ++c) {
        const MultChar chi = make_mult_char(F, c);
        for (const auto& r : t.rows) {
            keep(kondo, verify_kondo(t, r, chi, psi));
            if (!chi.trivial())
                keep(jac, verify_jacobi(t, r, chi, psi));
            else if (!trivial_in_support(r))
                keep(jac1, verify_jacobi(t, r, chi, psi));
        }
    }
    for (size_t i = 0; i < t.rows.size(); i += std::max<size_t>(1, t.rows.size() / 10))
        keep(scal, verify_kondo_scalar(t, t.rows[i], make_mult_char(F, 1), psi));

    Tally sing{"singular_vanishing"};
    for (const auto& X : singular_representatives(q))
        for (i64 c = 1; c < F.units(); ++c) keep(sing, verify_singular_vanishing(q, X, make_mult_char(F, c), psi));

    Tally pair{"gl2_dl_pairing"};
    for (i64 c = 0; c < F.units(); ++c) {
        const MultChar chi = make_mult_char(F, c);
        for (auto fn : {TestFunction::ChiDet, TestFunction::Jacobi}) {
            if (fn == TestFunction::Jacobi && chi.trivial()) continue;
            for (i64 a1 = 0; a1 < F.units(); ++a1)
                for (i64 a2 = 0; a2 < F.units(); ++a2) keep(pair, dl_pairing_check_gl2(q, TorusKind::Split, {a1, a2}, fn, chi, psi));
            for (const auto& r : t.rows)
                if (r.family == RowFamily::Cuspidal)
                    keep(pair, dl_pairing_check_gl2(q, TorusKind::Elliptic, {r.params[0]}, fn, chi, psi));
        }
    }

    json out = json::array();
    for (const Tally* tl : {&classes, &rows, &cols, &squares, &kondo, &jac, &jac1, &scal, &sing, &pair})
        out.push_back(tl->to_json());
    return out;
}

}  // namespace charforge::gl2
