#include <cmath>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "charforge/charforge.h"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Session {
    cf_session* s = cf_session_new();
    ~Session() { cf_session_free(s); }
};

struct Result {
    cf_result* r = nullptr;
    ~Result() { cf_result_free(r); }
    std::string text() const { return cf_result_text(r); }
};

int report_error(const Session& S, cf_status st)
{
    std::cerr << "charforge: " << cf_status_string(st) << ": " << cf_session_error(S.s) << "\n";
    return kExitUsage;
}

double snap(double x)
{
    const double r = std::round(x * 1e12) / 1e12;
    return r == 0 ? 0.0 : r;
}

void print_complex(double re, double im)
{
    json j;
    j["re"] = snap(re);
    j["im"] = snap(im);
    std::cout << j.dump() << "\n";
}

std::uint64_t default_seed()
{
    const char* env = std::getenv("CHARFORGE_SEED");
    if (!env || !*env) return 0;
    try {
        return std::stoull(env);
    } catch (const std::exception&) {
        throw CLI::ValidationError("CHARFORGE_SEED", std::string("not an unsigned integer: ") + env);
    }
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"charforge: character sums over finite fields and their verification"};
    app.require_subcommand(1);
    Session S;
    int code = 0;

    // verify
    auto* verify = app.add_subcommand("verify", "Run verification suites over a parameter grid");
    std::vector<std::string> suites{"all"};
    std::vector<long long> qs{3, 5}, chis, thetas, alphas;
    std::vector<int> ks{1, 2}, ms{1, 2}, psis{1};
    std::vector<std::string> groups;
    double tol = -1;
    long long sample = 0;
    std::optional<std::uint64_t> seed;
    int workers = static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
    std::string out_path, format = "json";
    verify->add_option("--suite", suites, "Suite names or 'all'")->delimiter(',');
    verify->add_option("--q", qs, "Field sizes")->delimiter(',');
    verify->add_option("--k", ks, "Split degrees")->delimiter(',');
    verify->add_option("--m", ms, "Elliptic degrees")->delimiter(',');
    verify->add_option("--chi", chis, "Restrict chi exponents")->delimiter(',');
    verify->add_option("--theta", thetas, "Restrict theta or beta exponents")->delimiter(',');
    verify->add_option("--alpha", alphas, "Restrict alpha exponents")->delimiter(',');
    verify->add_option("--psi-scale", psis, "Additive character scales")->delimiter(',');
    verify->add_option("--groups", groups, "Groups for the torus suites, e.g. Sp:1,U:2")->delimiter(',');
    verify->add_option("--tol", tol, "Absolute tolerance override");
    verify->add_option("--sample", sample, "Per-suite cap on grid points (seeded)");
    verify->add_option("--seed", seed, "Sampling seed (default: CHARFORGE_SEED or 0)");
    verify->add_option("--workers", workers, "Worker threads");
    verify->add_option("--out", out_path, "Report file (default: stdout)");
    verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"json", "csv"}));
    verify->callback([&] {
        json cfg;
        cfg["suites"] = suites;
        cfg["q"] = qs;
        cfg["k"] = ks;
        cfg["m"] = ms;
        cfg["chi"] = chis;
        cfg["theta"] = thetas;
        cfg["alpha"] = alphas;
        cfg["psi_scale"] = psis;
        cfg["groups"] = groups;
        if (tol >= 0) cfg["tol"] = tol;
        cfg["sample"] = sample;
        cfg["seed"] = seed ? *seed : default_seed();
        cfg["workers"] = workers;
        cfg["format"] = format;
        Result R;
        int pass = 0;
        const cf_status st = cf_verify(S.s, cfg.dump().c_str(), &R.r, &pass);
        if (st != CF_OK) {
            code = report_error(S, st);
            return;
        }
        const std::string text = R.text();
        if (out_path.empty()) {
            std::cout << text << "\n";
        } else {
            std::ofstream f(out_path);
            if (!f) {
                std::cerr << "charforge: cannot write " << out_path << "\n";
                code = kExitUsage;
                return;
            }
            f << text << "\n";
        }
        // The summary goes to stderr so stdout stays machine-readable.
        if (format == "json") {
            const json doc = json::parse(text);
            for (const auto& s : doc["summary"])
                std::cerr << s["suite"].get<std::string>() << ": " << s["checks"] << " checks, " << s["failures"]
                          << " failures, " << s["void_points"] << " void points, max abs_err " << s["max_abs_err"]
                          << "\n";
        }
        code = pass ? 0 : kExitFail;
    });

    // gauss
    auto* gauss = app.add_subcommand("gauss", "Normalized Gauss sum of a character of F_{q^k}");
    long long gq = 0, galpha = 0;
    int gk = 1, gpsi = 1;
    gauss->add_option("--q", gq)->required();
    gauss->add_option("--k", gk);
    gauss->add_option("--alpha", galpha)->required();
    gauss->add_option("--psi-scale", gpsi);
    gauss->callback([&] {
        double re = 0, im = 0;
        const cf_status st = cf_gauss(S.s, gq, gk, galpha, gpsi, &re, &im);
        if (st != CF_OK) {
            code = report_error(S, st);
            return;
        }
        print_complex(re, im);
    });

    // jacobi-kernel
    auto* jk = app.add_subcommand("jacobi-kernel", "J_chi(g) for g in GL_k(F_q)");
    long long jq = 0, jchi = 0;
    int jkk = 1, jpsi = 1;
    std::vector<long long> jg;
    jk->add_option("--q", jq)->required();
    jk->add_option("--k", jkk);
    jk->add_option("--g", jg, "Entry codes, row-major")->delimiter(',')->required();
    jk->add_option("--chi", jchi);
    jk->add_option("--psi-scale", jpsi);
    jk->callback([&] {
        if (jg.size() != static_cast<size_t>(jkk) * jkk) {
            std::cerr << "charforge: --g needs k*k entries\n";
            code = kExitUsage;
            return;
        }
        std::vector<int64_t> codes(jg.begin(), jg.end());
        double re = 0, im = 0;
        const cf_status st = cf_jacobi_kernel(S.s, jq, jkk, codes.data(), jchi, jpsi, &re, &im);
        if (st != CF_OK) {
            code = report_error(S, st);
            return;
        }
        print_complex(re, im);
    });

    // dl-gamma
    auto* dl = app.add_subcommand("dl-gamma", "Torus Gauss sum and both sides of the pairing identity");
    std::string dtype;
    int dn = 1, dpsi = 1;
    long long dq = 0, dchi = 1, dnu = 0;
    std::vector<int> lplus, lminus;
    std::vector<long long> dalpha, dtheta, dbeta;
    dl->add_option("--type", dtype)->required();
    dl->add_option("--n", dn)->required();
    dl->add_option("--q", dq)->required();
    dl->add_option("--lambda-plus", lplus)->delimiter(',');
    dl->add_option("--lambda-minus", lminus)->delimiter(',');
    dl->add_option("--alpha", dalpha)->delimiter(',');
    dl->add_option("--theta", dtheta)->delimiter(',');
    dl->add_option("--beta", dbeta)->delimiter(',');
    dl->add_option("--nu", dnu);
    dl->add_option("--chi", dchi);
    dl->add_option("--psi-scale", dpsi);
    dl->callback([&] {
        json req;
        req["type"] = dtype;
        req["n"] = dn;
        req["q"] = dq;
        req["lambda_plus"] = lplus;
        req["lambda_minus"] = lminus;
        req["alpha"] = dalpha;
        req["theta"] = dtheta;
        req["beta"] = dbeta;
        req["nu"] = dnu;
        req["chi"] = dchi;
        req["psi_scale"] = dpsi;
        Result R;
        const cf_status st = cf_dl_gamma(S.s, req.dump().c_str(), &R.r);
        if (st != CF_OK) {
            code = report_error(S, st);
            return;
        }
        const json r = json::parse(R.text());
        json o;
        for (const char* key : {"gamma", "c_V", "R1", "lhs", "rhs"}) o[key] = r[key];
        std::cout << o.dump() << "\n";
    });

    // torus-catalog and group-order
    std::string ttype, otype;
    int tn = 1, on = 1;
    long long tq = 0, oq = 0;
    auto* cat = app.add_subcommand("torus-catalog", "Maximal rational tori of a group");
    cat->add_option("--type", ttype)->required();
    cat->add_option("--n", tn)->required();
    cat->add_option("--q", tq)->required();
    cat->callback([&] {
        Result R;
        const cf_status st = cf_torus_catalog(S.s, ttype.c_str(), tn, tq, &R.r);
        if (st != CF_OK) {
            code = report_error(S, st);
            return;
        }
        std::cout << json::parse(R.text()).dump(1) << "\n";
    });
    auto* ord = app.add_subcommand("group-order", "Order of a finite classical or similitude group");
    ord->add_option("--type", otype)->required();
    ord->add_option("--n", on)->required();
    ord->add_option("--q", oq)->required();
    ord->callback([&] {
        int64_t order = 0;
        const cf_status st = cf_group_order(S.s, otype.c_str(), on, oq, &order);
        if (st != CF_OK) {
            code = report_error(S, st);
            return;
        }
        std::cout << order << "\n";
    });

    // gl2 selftest
    auto* gl2 = app.add_subcommand("gl2", "GL_2(F_q) character-table lab");
    gl2->require_subcommand(1);
    auto* self = gl2->add_subcommand("selftest", "Check every character-table invariant");
    int sq = 5;
    self->add_option("--q", sq);
    self->callback([&] {
        Result R;
        int pass = 0;
        const cf_status st = cf_gl2_selftest(S.s, sq, &R.r, &pass);
        if (st != CF_OK) {
            code = report_error(S, st);
            return;
        }
        std::cout << R.text() << "\n";
        code = pass ? 0 : kExitFail;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }
    return code;
}
