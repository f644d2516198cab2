#pragma once

#include <complex>
#include <string>
#include <vector>

#include <json.hpp>

namespace charforge {

using json = nlohmann::ordered_json;

inline constexpr double kDefaultTolScale = 1e-8;

struct Report {
    std::string identity;
    json params = json::object();
    std::complex<double> lhs, rhs;
    double abs_err = 0;
    double tol = 0;
    bool pass = false;
};

// tol = scale * (1 + terms); terms counts summands on both sides.
Report make_report(std::string identity, json params, std::complex<double> lhs, std::complex<double> rhs,
                   long long terms, double scale = kDefaultTolScale);
// Exact verdicts (exponent-level comparisons): tol is zero.
Report make_exact_report(std::string identity, json params, bool equal, std::complex<double> lhs = 0,
                         std::complex<double> rhs = 0);

json to_json(const Report& r);
void sort_reports(std::vector<Report>& rs);

}  // namespace charforge
