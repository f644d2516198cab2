#include "charforge/charforge.h"

#include <cmath>
#include <complex>
#include <exception>
#include <string>

#include "errors.hpp"
#include "gl2lab.hpp"
#include "groups.hpp"
#include "harness.hpp"
#include "sums.hpp"

using charforge::json;
namespace cf = charforge;

struct cf_session {
    std::string error;
};

struct cf_result {
    std::string text;
};

namespace {

template <class Fn>
cf_status guarded(cf_session* s, Fn&& fn)
{
    if (!s) return CF_EINVAL;
    try {
        fn();
        s->error.clear();
        return CF_OK;
    } catch (const cf::LimitError& e) {
        s->error = e.what();
        return CF_ELIMIT;
    } catch (const cf::UnsupportedError& e) {
        s->error = e.what();
        return CF_EUNSUPPORTED;
    } catch (const json::exception& e) {
        s->error = std::string("request: ") + e.what();
        return CF_EINVAL;
    } catch (const std::invalid_argument& e) {
        s->error = e.what();
        return CF_EINVAL;
    } catch (const std::domain_error& e) {
        s->error = e.what();
        return CF_EINVAL;
    } catch (const std::exception& e) {
        s->error = e.what();
        return CF_EINTERNAL;
    } catch (...) {
        s->error = "unknown failure";
        return CF_EINTERNAL;
    }
}

void require(bool ok, const char* msg)
{
    if (!ok) throw std::invalid_argument(msg);
}

cf_result* make_result(std::string text)
{
    return new cf_result{std::move(text)};
}

cf::groups::GroupSpec group_spec(const char* type, int n, int64_t q)
{
    require(type != nullptr, "group: type is null");
    cf::groups::GroupSpec g{cf::groups::parse_type(type), n, cf::harness::parse_base(q)};
    cf::groups::validate(g);
    return g;
}

json complex_json(std::complex<double> z)
{
    auto snap = [](double x) {
        const double r = std::round(x * 1e12) / 1e12;
        return r == 0 ? 0.0 : r;
    };
    return json{{"re", snap(z.real())}, {"im", snap(z.imag())}};
}

template <class T>
std::vector<T> list_or_empty(const json& j, const char* key)
{
    if (!j.contains(key)) return {};
    return j.at(key).get<std::vector<T>>();
}

cf::harness::RunConfig parse_config(const json& j)
{
    cf::harness::RunConfig c;
    if (j.contains("suites")) c.suites = j.at("suites").get<std::vector<std::string>>();
    if (j.contains("q")) c.q = j.at("q").get<std::vector<long long>>();
    if (j.contains("k")) c.k = j.at("k").get<std::vector<int>>();
    if (j.contains("m")) c.m = j.at("m").get<std::vector<int>>();
    c.chi = list_or_empty<long long>(j, "chi");
    c.theta = list_or_empty<long long>(j, "theta");
    c.alpha = list_or_empty<long long>(j, "alpha");
    if (j.contains("psi_scale")) c.psi_scale = j.at("psi_scale").get<std::vector<int>>();
    for (const auto& g : list_or_empty<std::string>(j, "groups")) {
        const auto colon = g.find(':');
        require(colon != std::string::npos, "verify: groups entries look like Sp:1");
        c.groups.push_back({cf::groups::parse_type(g.substr(0, colon)), std::stoi(g.substr(colon + 1))});
    }
    if (j.contains("tol") && !j.at("tol").is_null()) c.tol = j.at("tol").get<double>();
    if (j.contains("sample")) c.sample = j.at("sample").get<long long>();
    if (j.contains("seed")) c.seed = j.at("seed").get<std::uint64_t>();
    if (j.contains("workers")) c.workers = j.at("workers").get<int>();
    return c;
}

}  // namespace

extern "C" {

const char* cf_version(void) { return "1.0.0"; }

const char* cf_status_string(cf_status s)
{
    switch (s) {
    case CF_OK: return "ok";
    case CF_EINVAL: return "invalid argument";
    case CF_EUNSUPPORTED: return "unsupported";
    case CF_ELIMIT: return "limit exceeded";
    case CF_EINTERNAL: return "internal error";
    }
    return "unknown status";
}

cf_session* cf_session_new(void) { return new (std::nothrow) cf_session(); }
void cf_session_free(cf_session* s) { delete s; }
const char* cf_session_error(const cf_session* s) { return s ? s->error.c_str() : "null session"; }

const char* cf_result_text(const cf_result* r) { return r ? r->text.c_str() : ""; }
void cf_result_free(cf_result* r) { delete r; }

cf_status cf_gauss(cf_session* s, int64_t q, int k, int64_t alpha, int psi_scale, double* re, double* im)
{
    return guarded(s, [&] {
        require(re && im, "gauss: null output");
        require(k >= 1 && k <= 6, "gauss: k must be in [1, 6]");
        const cf::ff::Base b = cf::harness::parse_base(q);
        require(psi_scale % b.p != 0, "gauss: psi scale must be prime to p");
        const auto& K = b.ext(k);
        const auto g = cf::sums::gauss(cf::chars::make_mult_char(K, alpha), cf::chars::make_add_char(b.p, psi_scale));
        *re = g.real();
        *im = g.imag();
    });
}

cf_status cf_jacobi_kernel(cf_session* s, int64_t q, int k, const int64_t* codes, int64_t chi, int psi_scale,
                           double* re, double* im)
{
    return guarded(s, [&] {
        require(re && im && codes, "jacobi_kernel: null argument");
        require(k >= 1 && k <= 3, "jacobi_kernel: k must be in [1, 3]");
        const cf::ff::Base b = cf::harness::parse_base(q);
        require(psi_scale % b.p != 0, "jacobi_kernel: psi scale must be prime to p");
        const auto& E = b.field();
        std::vector<long long> c(codes, codes + static_cast<size_t>(k) * k);
        for (long long v : c) require(v >= 0 && v < E.size(), "jacobi_kernel: entry code out of range");
        const auto g = cf::ff::from_codes(E, k, c);
        require(cf::ff::det(E, g) != cf::ff::ZERO, "jacobi_kernel: g must be invertible");
        const auto v = cf::sums::jacobi_kernel_gl(E, g, cf::chars::make_mult_char(E, chi),
                                                  cf::chars::make_add_char(b.p, psi_scale));
        *re = v.real();
        *im = v.imag();
    });
}

cf_status cf_group_order(cf_session* s, const char* type, int n, int64_t q, int64_t* order)
{
    return guarded(s, [&] {
        require(order != nullptr, "group_order: null output");
        *order = cf::groups::group_order(group_spec(type, n, q));
    });
}

cf_status cf_torus_catalog(cf_session* s, const char* type, int n, int64_t q, cf_result** out)
{
    return guarded(s, [&] {
        require(out != nullptr, "torus_catalog: null output");
        json arr = json::array();
        for (const auto& td : cf::groups::torus_catalog(group_spec(type, n, q))) arr.push_back(cf::groups::to_json(td));
        *out = make_result(arr.dump());
    });
}

cf_status cf_dl_gamma(cf_session* s, const char* request_json, cf_result** out)
{
    return guarded(s, [&] {
        require(request_json && out, "dl_gamma: null argument");
        const json j = json::parse(request_json);
        const auto g = group_spec(j.at("type").get<std::string>().c_str(), j.at("n").get<int>(), j.at("q").get<int64_t>());
        const auto td = cf::groups::make_torus(g, list_or_empty<int>(j, "lambda_plus"), list_or_empty<int>(j, "lambda_minus"));
        const auto alpha = list_or_empty<cf::ff::i64>(j, "alpha");
        cf::groups::TorusTheta th;
        if (cf::groups::is_similitude(g))
            th = cf::groups::similitude_theta(td, alpha, list_or_empty<cf::ff::i64>(j, "beta"), j.value("nu", cf::ff::i64{0}));
        else
            th = cf::groups::classical_theta(td, alpha, list_or_empty<cf::ff::i64>(j, "theta"));
        const int scale = j.value("psi_scale", 1);
        require(scale % g.base.p != 0, "dl_gamma: psi scale must be prime to p");
        const auto d = cf::groups::dl_gamma_rhs(td, th, cf::groups::make_chi(g, j.value("chi", 1LL)),
                                                cf::chars::make_add_char(g.base.p, scale));
        json r;
        r["group"] = cf::groups::spec_name(g);
        r["torus"] = cf::groups::to_json(td);
        r["gamma"] = complex_json(d.gamma);
        r["c_V"] = complex_json(d.c_V);
        r["R1"] = d.R1;
        r["lhs"] = complex_json(d.lhs);
        r["rhs"] = complex_json(d.rhs);
        r["terms"] = d.terms;
        *out = make_result(r.dump());
    });
}

cf_status cf_verify(cf_session* s, const char* config_json, cf_result** out, int* all_pass)
{
    return guarded(s, [&] {
        require(out != nullptr, "verify: null output");
        const json j = config_json && *config_json ? json::parse(config_json) : json::object();
        const auto cfg = parse_config(j);
        const std::string format = j.value("format", std::string("json"));
        require(format == "json" || format == "csv", "verify: format must be json or csv");
        const auto res = cf::harness::run(cfg);
        *out = make_result(format == "csv" ? cf::harness::report_csv(cfg, res)
                                           : cf::harness::report_document(cfg, res).dump(1));
        if (all_pass) *all_pass = res.all_pass ? 1 : 0;
    });
}

cf_status cf_gl2_selftest(cf_session* s, int q, cf_result** out, int* all_pass)
{
    return guarded(s, [&] {
        require(out != nullptr, "gl2_selftest: null output");
        const json j = cf::gl2::selftest(q);
        bool ok = true;
        for (const auto& rec : j) ok = ok && rec.at("pass").get<bool>();
        *out = make_result(j.dump(1));
        if (all_pass) *all_pass = ok ? 1 : 0;
    });
}

}  // extern "C"
