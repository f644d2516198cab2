#pragma once

#include <string>
#include <vector>

#include "ff_tower.hpp"

namespace charforge::ff {

// Dense square matrix over a Field, row-major, entries as log-indices.
struct Mat {
    int n = 0;
    std::vector<Elem> a;

    Mat() = default;
    explicit Mat(int n_) : n(n_), a(static_cast<size_t>(n_) * n_, ZERO) {}

    Elem& operator()(int i, int j) { return a[static_cast<size_t>(i) * n + j]; }
    Elem operator()(int i, int j) const { return a[static_cast<size_t>(i) * n + j]; }
    bool operator==(const Mat& o) const = default;
    auto operator<=>(const Mat& o) const = default;
};

Mat identity(const Field& F, int n);
Mat scalar(const Field& F, int n, Elem c);
Mat mat_mul(const Field& F, const Mat& x, const Mat& y);
Mat mat_add(const Field& F, const Mat& x, const Mat& y);
Mat mat_scale(const Field& F, const Mat& x, Elem c);
Mat transpose(const Mat& x);
// Entrywise x -> x^{p^j}.
Mat frobenius(const Field& F, const Mat& x, int j);
Elem det(const Field& F, const Mat& x);
int rank(const Field& F, const Mat& x);
Elem trace(const Field& F, const Mat& x);
Mat inverse(const Field& F, const Mat& x);
// Entries given as field codes (base-p polynomial encodings).
Mat from_codes(const Field& F, int n, const std::vector<long long>& codes);
std::string to_string(const Field& F, const Mat& x);

// All of GL_k(F); intended for |GL_k(F)| up to a few thousand.
const std::vector<Mat>& general_linear(const Field& F, int k);

struct MatHash {
    size_t operator()(const Mat& m) const noexcept;
};

}  // namespace charforge::ff
