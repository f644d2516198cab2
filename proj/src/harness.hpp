#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "groups.hpp"
#include "report.hpp"

namespace charforge::harness {

// Unknown suite, malformed grid, or a named suite with no admissible grid point.
struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct GroupChoice {
    groups::GroupType type;
    int n;
};

struct RunConfig {
    std::vector<std::string> suites{"all"};
    std::vector<long long> q{3, 5};
    std::vector<int> k{1, 2};
    std::vector<int> m{1, 2};
    // Empty means every exponent.
    std::vector<long long> chi, theta, alpha;
    std::vector<int> psi_scale{1};
    std::vector<GroupChoice> groups;  // empty means the default list
    std::optional<double> tol;        // absolute tolerance override
    long long sample = 0;             // per-suite cap on grid points, 0 = all
    std::uint64_t seed = 0;
    int workers = 1;
};

struct SuiteSummary {
    std::string suite;
    long long checks = 0, failures = 0, void_points = 0;
    double max_abs_err = 0;
};

struct RunResult {
    std::vector<Report> reports;  // canonical order
    std::vector<SuiteSummary> summary;
    bool all_pass = true;
};

// Every suite name accepted by run(); "all" expands to this list.
const std::vector<std::string>& suite_names();
// Largest field |E_k| used by suites that sweep pairs of characters.
inline constexpr long long kMaxPairField = 729;

ff::Base parse_base(long long q);
std::vector<GroupChoice> default_groups();

RunResult run(const RunConfig& cfg);

json summary_json(const SuiteSummary& s);
// {"header": {...}, "reports": [...], "summary": [...]}; the header lists the modulus and
// generator polynomial of every field the grid touches.
json report_document(const RunConfig& cfg, const RunResult& r);
std::string report_csv(const RunConfig& cfg, const RunResult& r);

}  // namespace charforge::harness
