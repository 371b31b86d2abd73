// Command-line front end: evaluate any exposed quantity, run the
// verification suites, emit deterministic JSON (stdout) or CSV (--out).
//
// Exit codes: 0 success, 2 flag/validation error, 3 numerical failure
// (a requested tolerance was not met).
#include <cmath>
#include <complex>
#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "dz/asym.hpp"
#include "dz/congruence.hpp"
#include "dz/double_zeta.hpp"
#include "dz/local_zeta.hpp"
#include "dz/selftest.hpp"

using namespace dz;

namespace {

// "re" or "re,im" -> complex
cplx parse_cplx(const std::string& s) {
    size_t comma = s.find(',');
    if (comma == std::string::npos) return cplx(std::stod(s), 0.0);
    return cplx(std::stod(s.substr(0, comma)), std::stod(s.substr(comma + 1)));
}

std::string fmt(double x) {
    char buf[48];
    std::snprintf(buf, sizeof buf, "%.15g", x);
    return buf;
}

std::string fmt(cplx z) { return fmt(z.real()) + "," + fmt(z.imag()); }

// deterministic JSON: insertion-ordered key/value pairs, 15 significant
// digits for every float
struct Json {
    std::vector<std::pair<std::string, std::string>> kv;
    void str(const std::string& k, const std::string& v) {
        kv.emplace_back(k, "\"" + v + "\"");
    }
    void num(const std::string& k, double v) { kv.emplace_back(k, fmt(v)); }
    void integer(const std::string& k, long long v) {
        kv.emplace_back(k, std::to_string(v));
    }
    void boolean(const std::string& k, bool v) {
        kv.emplace_back(k, v ? "true" : "false");
    }
    void print() const {
        std::string out = "{";
        for (size_t i = 0; i < kv.size(); ++i) {
            if (i) out += ",";
            out += "\"" + kv[i].first + "\":" + kv[i].second;
        }
        std::cout << out << "}\n";
    }
};

OmegaS omega_from_flags(std::vector<std::string> enc) {
    if (enc.empty()) enc = {"inf:+"};
    return parse_omega(enc);
}

std::map<Place, int> delta_from_omega_flags(const std::vector<std::string>&) {
    throw CLI::ValidationError("--delta not supported here");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Double zeta functions of binary quadratic forms over Q: congruence\n"
        "counts, quadratic-L-function explicit formula, functional equations,\n"
        "and the weighted central-value average."};
    app.set_config("--config", "", "key=value file of default flag values");
    app.require_subcommand(1);

    int threads = 1;
    app.add_option("--threads", threads,
                   "worker threads (outputs independent of the count)");

    // shared flag storage
    std::string s1_s = "3", s2_s = "3", s_s = "4", variant = "xi1star";
    std::vector<std::string> omega_enc;
    long long X = 400, cut = 1500, m_coh = 1, N_coh = 1, p_flag = 3, deg = 4;
    long long x_avg = 100000;
    double tol = 0;
    std::string out_path, in_path, chi_enc = "3:+ -";
    bool oracle = false;

    auto add_point = [&](CLI::App* c, bool both) {
        c->add_option("--s1", s1_s, "s1 as re[,im]");
        if (both) c->add_option("--s2", s2_s, "s2 as re[,im]");
    };
    auto add_omega = [&](CLI::App* c) {
        c->add_option("--omega", omega_enc,
                      "local character list, e.g. inf:+ and 2:+ - +; "
                      "default inf:+");
    };

    auto* cdir = app.add_subcommand("eval-xi-direct",
                                    "congruence-count series xi_i / xi_i*");
    cdir->add_option("--variant", variant, "xi1|xi2|xi1star|xi2star");
    add_point(cdir, true);
    cdir->add_option("--cut", cut, "truncation in both indices");

    auto* cexp = app.add_subcommand("eval-xi-explicit",
                                    "character-sum series xi~^S(s, omega)");
    add_point(cexp, true);
    add_omega(cexp);
    cexp->add_option("--X", X, "conductor cutoff");

    auto* cdm = app.add_subcommand("eval-Dm", "single-variable series D_m");
    cdm->add_option("--m", m_coh, "index m >= 1");
    cdm->add_option("--s", s_s, "s as re[,im]");
    add_omega(cdm);
    cdm->add_option("--X", X, "conductor cutoff");

    auto* clm = app.add_subcommand("eval-Lm", "single-variable series L_m");
    clm->add_option("--m", m_coh, "index m >= 1");
    clm->add_option("--s", s_s, "s as re[,im]");
    add_omega(clm);
    clm->add_option("--X", X, "conductor cutoff");

    auto* ccoh = app.add_subcommand("cohen", "generalized Cohen value H(m/2, N)");
    ccoh->add_option("--m", m_coh, "index m >= 1");
    ccoh->add_option("--N", N_coh, "coefficient index N >= 1");
    add_omega(ccoh);

    auto* cloc = app.add_subcommand("local-zeta",
                                    "local zeta closed form / oracle check");
    cloc->add_option("--p", p_flag, "prime");
    cloc->add_option("--chi", chi_enc, "local character, e.g. \"3:+ -\"");
    cloc->add_option("--degree", deg, "compared coefficient degree bound");
    cloc->add_flag("--oracle", oracle,
                   "compare brute-force integration against the closed form");
    add_point(cloc, true);

    auto* cve = app.add_subcommand(
        "verify-explicit", "explicit formula vs congruence counts at a point");
    add_point(cve, true);
    add_omega(cve);
    cve->add_option("--cut", cut, "direct-side truncation");
    cve->add_option("--X", X, "explicit-side conductor cutoff");

    auto* cf1 = app.add_subcommand("verify-fe1",
                                   "first functional equation residual");
    add_point(cf1, true);
    add_omega(cf1);
    cf1->add_option("--X", X, "conductor cutoff");
    cf1->add_option("--tol", tol, "fail (exit 3) if residual exceeds this");

    auto* cf2 = app.add_subcommand("verify-fe2",
                                   "second functional equation residual");
    add_point(cf2, true);
    add_omega(cf2);
    cf2->add_option("--X", X, "conductor cutoff");
    cf2->add_option("--tol", tol, "fail (exit 3) if residual exceeds this");

    auto* csh = app.add_subcommand("verify-shintani",
                                   "single-series functional equations");
    add_point(csh, true);
    csh->add_option("--X", X, "conductor cutoff");
    csh->add_option("--tol", tol, "fail (exit 3) if residual exceeds this");

    auto* cav = app.add_subcommand(
        "average", "partial sums of central values with fit and CSV output");
    cav->add_option("--x", x_avg, "summation bound");
    add_omega(cav);
    cav->add_option("--out", out_path, "CSV output path");

    auto* cfit = app.add_subcommand("fit",
                                    "fit A x log x + B x to a checkpoint CSV");
    cfit->add_option("--in", in_path, "CSV with x,sum columns")->required();

    app.add_subcommand("selftest", "run the full acceptance suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    EvalConfig cfg;
    cfg.threads = threads;

    try {
        if (cdir->parsed()) {
            XiVariant v = variant == "xi1"       ? XiVariant::xi1
                          : variant == "xi2"     ? XiVariant::xi2
                          : variant == "xi1star" ? XiVariant::xi1star
                          : variant == "xi2star"
                              ? XiVariant::xi2star
                              : throw CLI::ValidationError("--variant");
            ComplexPair s{parse_cplx(s1_s), parse_cplx(s2_s)};
            XiDirectResult r = xi_direct(v, s, SeriesTruncation{cut, cut}, threads);
            Json j;
            j.str("op", "eval-xi-direct");
            j.str("s1", fmt(s.s1));
            j.str("s2", fmt(s.s2));
            j.str("omega", variant);
            j.integer("X", cut);
            j.num("value_re", r.value.real());
            j.num("value_im", r.value.imag());
            j.num("tail", r.tail);
            j.boolean("certified", true);
            j.integer("terms", r.terms);
            j.print();
        } else if (cexp->parsed()) {
            ComplexPair s{parse_cplx(s1_s), parse_cplx(s2_s)};
            OmegaS w = omega_from_flags(omega_enc);
            ExplicitValue r = xi_tilde_explicit(s, w, X, cfg);
            Json j;
            j.str("op", "eval-xi-explicit");
            j.str("s1", fmt(s.s1));
            j.str("s2", fmt(s.s2));
            j.str("omega", format_omega(w));
            j.integer("X", X);
            j.num("value_re", r.value.real());
            j.num("value_im", r.value.imag());
            j.num("tail", r.tail);
            j.boolean("certified", r.certified);
            j.integer("terms", r.terms);
            j.print();
        } else if (cdm->parsed() || clm->parsed()) {
            cplx s = parse_cplx(s_s);
            OmegaS w = omega_from_flags(omega_enc);
            ExplicitValue r = cdm->parsed() ? D_m_value(s, (int)m_coh, w, X, cfg)
                                            : L_m_value(s, (int)m_coh, w, X, cfg);
            Json j;
            j.str("op", cdm->parsed() ? "eval-Dm" : "eval-Lm");
            j.str("s", fmt(s));
            j.integer("m", m_coh);
            j.str("omega", format_omega(w));
            j.integer("X", X);
            j.num("value_re", r.value.real());
            j.num("value_im", r.value.imag());
            j.num("tail", r.tail);
            j.boolean("certified", r.certified);
            j.integer("terms", r.terms);
            j.print();
        } else if (ccoh->parsed()) {
            OmegaS w = omega_from_flags(omega_enc);
            CohenValue r = cohen_H((int)m_coh, N_coh, w, cfg);
            Json j;
            j.str("op", "cohen");
            j.num("s", m_coh / 2.0);
            j.integer("m", m_coh);
            j.integer("N", r.N);
            j.integer("D", r.D);
            j.integer("f", r.f);
            j.str("omega", format_omega(w));
            j.num("value_re", r.value);
            j.num("value_im", 0.0);
            j.num("tail", 0.0);
            j.boolean("certified", true);
            j.integer("terms", 1);
            j.print();
        } else if (cloc->parsed()) {
            LocalQuadChar chi = parse_local_char(chi_enc);
            if (chi.v.p != p_flag) throw CLI::ValidationError("--chi vs --p");
            RationalFunction2 f = closed_form_char(p_flag, chi);
            Json j;
            j.str("op", "local-zeta");
            j.str("omega", format_local_char(chi));
            if (oracle) {
                int g = p_flag == 2 ? 3 : 1;
                PowerSeries2 got =
                    brute_force_series_char(p_flag, chi, (int)deg, g, threads);
                PowerSeries2 want = series_expand(f, (int)deg);
                bool match = true;
                for (int a = 0; a < deg; ++a)
                    for (int b = 0; a + b < deg; ++b)
                        if (got.c[a][b] != want.c[a][b]) match = false;
                j.integer("degree", deg);
                j.str("status", match ? "exact match" : "MISMATCH");
                j.print();
                return match ? 0 : 3;
            }
            ComplexPair s{parse_cplx(s1_s), parse_cplx(s2_s)};
            cplx t1 = std::pow(cplx((double)p_flag, 0), -s.s1);
            cplx t2 = std::pow(cplx((double)p_flag, 0), -s.s2);
            cplx v = f.eval(t1, t2);
            j.str("s1", fmt(s.s1));
            j.str("s2", fmt(s.s2));
            j.num("value_re", v.real());
            j.num("value_im", v.imag());
            j.print();
        } else if (cve->parsed()) {
            ComplexPair s{parse_cplx(s1_s), parse_cplx(s2_s)};
            OmegaS w = omega_from_flags(omega_enc);
            if (w.places().size() != 1)
                throw CLI::ValidationError(
                    "verify-explicit needs a real-place-only --omega");
            SeriesTruncation trunc{cut, cut};
            XiDirectResult d1 = xi_direct(XiVariant::xi1star, s, trunc, threads);
            XiDirectResult d2 = xi_direct(XiVariant::xi2star, s, trunc, threads);
            double sign = w.omega_inf_delta() == 0 ? 1.0 : -1.0;
            cplx scale = std::pow(cplx(2, 0), 2.0 * s.s2 - 1.0);
            cplx direct = scale * (d1.value + sign * d2.value);
            ExplicitValue ex = xi_tilde_explicit(s, w, X, cfg);
            double budget = ex.tail + std::abs(scale) * (d1.tail + d2.tail);
            Json j;
            j.str("op", "verify-explicit");
            j.str("s1", fmt(s.s1));
            j.str("s2", fmt(s.s2));
            j.str("omega", format_omega(w));
            j.integer("X", X);
            j.num("lhs_re", ex.value.real());
            j.num("lhs_im", ex.value.imag());
            j.num("rhs_re", direct.real());
            j.num("rhs_im", direct.imag());
            j.num("diff", std::abs(ex.value - direct));
            j.num("tail", budget);
            j.boolean("certified", ex.certified);
            j.integer("terms", ex.terms);
            j.print();
            return std::abs(ex.value - direct) <= budget + 1e-12 ? 0 : 3;
        } else if (cf1->parsed() || cf2->parsed()) {
            ComplexPair s{parse_cplx(s1_s), parse_cplx(s2_s)};
            OmegaS w = omega_from_flags(omega_enc);
            double r = cf1->parsed() ? verify_fe1(s, w, X, cfg)
                                     : verify_fe2(s, w, X, cfg);
            Json j;
            j.str("op", cf1->parsed() ? "verify-fe1" : "verify-fe2");
            j.str("s1", fmt(s.s1));
            j.str("s2", fmt(s.s2));
            j.str("omega", format_omega(w));
            j.integer("X", X);
            j.num("value_re", r);
            j.num("value_im", 0.0);
            j.num("tail", 0.0);
            j.boolean("certified", false);
            j.integer("terms", 0);
            j.print();
            return (tol > 0 && r > tol) ? 3 : 0;
        } else if (csh->parsed()) {
            ComplexPair s{parse_cplx(s1_s), parse_cplx(s2_s)};
            ShintaniResiduals r = verify_shintani_fe(s, cfg, X);
            Json j;
            j.str("op", "verify-shintani");
            j.str("s1", fmt(s.s1));
            j.str("s2", fmt(s.s2));
            j.integer("X", X);
            j.num("residual_classic", r.classic);
            j.num("residual_star", r.star);
            j.print();
            return (tol > 0 && std::max(r.classic, r.star) > tol) ? 3 : 0;
        } else if (cav->parsed()) {
            OmegaS w = omega_from_flags(omega_enc);
            SumSeries series = partial_sum_H(x_avg, w, cfg);
            FitResult fit = fit_asymptotic(series);
            if (!out_path.empty()) emit_csv(series, fit, out_path);
            Json j;
            j.str("op", "average");
            j.str("omega", format_omega(w));
            j.integer("X", x_avg);
            j.num("A", fit.A);
            j.num("B", fit.B);
            j.num("exponent", fit.exponent_estimate);
            j.num("value_re", series.checkpoints.back().second);
            j.num("value_im", 0.0);
            j.num("tail", series.numeric_error);
            j.boolean("certified", false);
            j.integer("terms", series.terms);
            j.print();
        } else if (cfit->parsed()) {
            std::FILE* fp = std::fopen(in_path.c_str(), "r");
            if (!fp) throw CLI::ValidationError("--in: cannot open " + in_path);
            SumSeries series;
            char line[256];
            while (std::fgets(line, sizeof line, fp)) {
                double x, v;
                if (std::sscanf(line, "%lf,%lf", &x, &v) == 2)
                    series.checkpoints.emplace_back(x, v);
            }
            std::fclose(fp);
            FitResult fit = fit_asymptotic(series);
            Json j;
            j.str("op", "fit");
            j.integer("X", (long long)series.checkpoints.size());
            j.num("A", fit.A);
            j.num("B", fit.B);
            j.num("exponent", fit.exponent_estimate);
            j.print();
        } else {  // selftest
            return run_acceptance(std::cout) == 0 ? 0 : 3;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "validation error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    }
    return 0;
}
