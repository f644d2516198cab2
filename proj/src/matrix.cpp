#include "matrix.hpp"

#include "errors.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

namespace charforge::ff {

Mat identity(const Field& F, int n)
{
    return scalar(F, n, F.one());
}

Mat scalar(const Field&, int n, Elem c)
{
    Mat m(n);
    for (int i = 0; i < n; ++i) m(i, i) = c;
    return m;
}

Mat mat_mul(const Field& F, const Mat& x, const Mat& y)
{
    if (x.n != y.n) throw std::invalid_argument("mat_mul: size mismatch");
    const int n = x.n;
    Mat r(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Elem s = ZERO;
            for (int k = 0; k < n; ++k) s = F.add(s, F.mul(x(i, k), y(k, j)));
            r(i, j) = s;
        }
    return r;
}

Mat mat_add(const Field& F, const Mat& x, const Mat& y)
{
    if (x.n != y.n) throw std::invalid_argument("mat_add: size mismatch");
    Mat r(x.n);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.add(x.a[i], y.a[i]);
    return r;
}

Mat mat_scale(const Field& F, const Mat& x, Elem c)
{
    Mat r(x.n);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.mul(x.a[i], c);
    return r;
}

Mat transpose(const Mat& x)
{
    Mat r(x.n);
    for (int i = 0; i < x.n; ++i)
        for (int j = 0; j < x.n; ++j) r(i, j) = x(j, i);
    return r;
}

Mat frobenius(const Field& F, const Mat& x, int j)
{
    Mat r(x.n);
    for (size_t i = 0; i < r.a.size(); ++i) r.a[i] = F.frobenius(x.a[i], j);
    return r;
}

namespace {

// Row reduction; returns rank and accumulates the determinant.
int eliminate(const Field& F, Mat m, Elem* det_out)
{
    const int n = m.n;
    Elem d = F.one();
    int r = 0;
    for (int c = 0; c < n && r < n; ++c) {
        int piv = -1;
        for (int i = r; i < n; ++i)
            if (m(i, c) != ZERO) {
                piv = i;
                break;
            }
        if (piv < 0) {
            d = ZERO;
            continue;
        }
        if (piv != r) {
            for (int j = 0; j < n; ++j) std::swap(m(piv, j), m(r, j));
            d = F.neg(d);
        }
        d = F.mul(d, m(r, c));
        const Elem pinv = F.inv(m(r, c));
        for (int i = r + 1; i < n; ++i) {
            if (m(i, c) == ZERO) continue;
            const Elem f = F.neg(F.mul(m(i, c), pinv));
            for (int j = c; j < n; ++j) m(i, j) = F.add(m(i, j), F.mul(f, m(r, j)));
        }
        ++r;
    }
    if (r < n) d = ZERO;
    if (det_out) *det_out = d;
    return r;
}

}  // namespace

Elem det(const Field& F, const Mat& x)
{
    Elem d;
    eliminate(F, x, &d);
    return d;
}

int rank(const Field& F, const Mat& x)
{
    return eliminate(F, x, nullptr);
}

Elem trace(const Field& F, const Mat& x)
{
    Elem s = ZERO;
    for (int i = 0; i < x.n; ++i) s = F.add(s, x(i, i));
    return s;
}

Mat inverse(const Field& F, const Mat& x)
{
    const int n = x.n;
    Mat m = x, r = identity(F, n);
    for (int c = 0; c < n; ++c) {
        int piv = -1;
        for (int i = c; i < n; ++i)
            if (m(i, c) != ZERO) {
                piv = i;
                break;
            }
        if (piv < 0) throw std::domain_error("inverse: singular matrix");
        for (int j = 0; j < n; ++j) {
            std::swap(m(piv, j), m(c, j));
            std::swap(r(piv, j), r(c, j));
        }
        const Elem pinv = F.inv(m(c, c));
        for (int j = 0; j < n; ++j) {
            m(c, j) = F.mul(m(c, j), pinv);
            r(c, j) = F.mul(r(c, j), pinv);
        }
        for (int i = 0; i < n; ++i) {
            if (i == c || m(i, c) == ZERO) continue;
            const Elem f = F.neg(m(i, c));
            for (int j = 0; j < n; ++j) {
                m(i, j) = F.add(m(i, j), F.mul(f, m(c, j)));
                r(i, j) = F.add(r(i, j), F.mul(f, r(c, j)));
            }
        }
    }
    return r;
}

Mat from_codes(const Field& F, int n, const std::vector<long long>& codes)
{
    if (static_cast<int>(codes.size()) != n * n) throw std::invalid_argument("from_codes: expected n*n entries");
    Mat m(n);
    for (size_t i = 0; i < codes.size(); ++i) m.a[i] = F.from_code(codes[i]);
    return m;
}

std::string to_string(const Field& F, const Mat& x)
{
    std::string s = "[";
    for (int i = 0; i < x.n; ++i) {
        s += i ? ",[" : "[";
        for (int j = 0; j < x.n; ++j) {
            if (j) s += ",";
            s += std::to_string(F.code(x(i, j)));
        }
        s += "]";
    }
    return s + "]";
}

const std::vector<Mat>& general_linear(const Field& F, int k)
{
    static std::mutex mu;
    static std::map<std::pair<const Field*, int>, std::unique_ptr<std::vector<Mat>>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[{&F, k}];
    if (slot) return *slot;
    i64 total = 1;
    for (int i = 0; i < k * k; ++i) {
        total *= F.size();
        if (total > 50'000'000) throw charforge::LimitError("general_linear: group too large to list");
    }
    slot = std::make_unique<std::vector<Mat>>();
    Mat m(k);
    std::vector<i64> digits(static_cast<size_t>(k) * k, 0);
    for (i64 c = 0; c < total; ++c) {
        for (size_t i = 0; i < digits.size(); ++i) m.a[i] = F.from_code(digits[i]);
        if (det(F, m) != ZERO) slot->push_back(m);
        for (size_t i = 0; i < digits.size(); ++i) {
            if (++digits[i] < F.size()) break;
            digits[i] = 0;
        }
    }
    return *slot;
}

size_t MatHash::operator()(const Mat& m) const noexcept
{
    size_t h = 1469598103934665603ull;
    for (Elem e : m.a) {
        h ^= static_cast<size_t>(e + 1);
        h *= 1099511628211ull;
    }
    return h;
}

}  // namespace charforge::ff
