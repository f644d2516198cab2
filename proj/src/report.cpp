#include "report.hpp"

#include <algorithm>
#include <cmath>

namespace charforge {

Report make_report(std::string identity, json params, std::complex<double> lhs, std::complex<double> rhs,
                   long long terms, double scale)
{
    Report r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = std::abs(lhs - rhs);
    r.tol = scale * (1.0 + static_cast<double>(terms));
    r.pass = std::isfinite(r.abs_err) && r.abs_err <= r.tol;
    return r;
}

Report make_exact_report(std::string identity, json params, bool equal, std::complex<double> lhs,
                         std::complex<double> rhs)
{
    Report r;
    r.identity = std::move(identity);
    r.params = std::move(params);
    r.lhs = lhs;
    r.rhs = rhs;
    r.abs_err = equal ? 0.0 : std::max(std::abs(lhs - rhs), 1.0);
    r.tol = 0;
    r.pass = equal;
    return r;
}

namespace {

double clean(double x)
{
    // Flush rounding noise to zero so that -0 never reaches the output.
    if (std::abs(x) < 1e-15) return 0.0;
    return x;
}

}  // namespace

json to_json(const Report& r)
{
    json j;
    j["identity"] = r.identity;
    j["params"] = r.params;
    j["lhs"] = {clean(r.lhs.real()), clean(r.lhs.imag())};
    j["rhs"] = {clean(r.rhs.real()), clean(r.rhs.imag())};
    j["abs_err"] = r.abs_err;
    j["tol"] = r.tol;
    j["pass"] = r.pass;
    return j;
}

void sort_reports(std::vector<Report>& rs)
{
    std::stable_sort(rs.begin(), rs.end(), [](const Report& a, const Report& b) {
        if (a.identity != b.identity) return a.identity < b.identity;
        return a.params.dump() < b.params.dump();
    });
}

}  // namespace charforge
