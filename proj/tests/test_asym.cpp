// Central-value averages: the fast L(1/2, chi_D) evaluator against the slow
// Hurwitz-zeta path, partial sums of H(1/2, N, omega_S), the x log x fit,
// and the CSV artifact.
#include "doctest.h"

#include <cmath>
#include <cstdio>
#include <stdexcept>
#include <string>
#include <vector>

#include "dz/asym.hpp"
#include "dz/double_zeta.hpp"

using namespace dz;

namespace {

const EvalConfig kCfg{};

OmegaS omega_inf(int delta) {
    OmegaS w;
    w.comp[real_place()] = all_local_chars(real_place())[delta];
    return w;
}

OmegaS omega_inf2(int delta, int dyadic_idx) {
    OmegaS w = omega_inf(delta);
    w.comp[finite_place(2)] = all_local_chars(finite_place(2))[dyadic_idx];
    return w;
}

}  // namespace

TEST_CASE("central_L_quadratic against the Hurwitz-zeta path") {
    CHECK(std::abs(central_L_quadratic(1) - std::riemann_zeta(0.5)) < 1e-12);
    for (i64 D : enumerate_discriminants(300)) {
        if (D == 1) continue;
        QuadraticCharacter chi{D};
        double slow = L_value_real(0.5, chi, kCfg);
        CAPTURE(D);
        CHECK(std::abs(central_L_quadratic(D) - slow) < 1e-9);
    }
}

TEST_CASE("partial_sum_H: small supports by hand") {
    // support of omega_inf = sgn starts at N = 3
    SumSeries empty = partial_sum_H(2, omega_inf(1), kCfg);
    CHECK(empty.terms == 0);
    for (auto& [x, s] : empty.checkpoints) CHECK(s == 0.0);
    // x = 5, trivial omega: N in {1, 4, 5}
    SumSeries s5 = partial_sum_H(5, omega_inf(0), kCfg);
    CHECK(s5.terms == 3);
    double expect = cohen_H(1, 1, omega_inf(0)).value +
                    cohen_H(1, 4, omega_inf(0)).value +
                    cohen_H(1, 5, omega_inf(0)).value;
    CHECK(s5.checkpoints.back().first == 5.0);
    CHECK(std::abs(s5.checkpoints.back().second - expect) < 1e-9);
}

TEST_CASE("partial_sum_H: doubling x preserves earlier checkpoints") {
    OmegaS w = omega_inf(1);
    SumSeries a = partial_sum_H(800, w, kCfg);
    SumSeries b = partial_sum_H(1600, w, kCfg);
    for (auto& [x, s] : a.checkpoints)
        for (auto& [x2, s2] : b.checkpoints)
            if (x2 == x) CHECK(s2 == doctest::Approx(s).epsilon(1e-14));
}

TEST_CASE("fit_asymptotic: synthetic models") {
    // exact model: recovered to 1e-9
    SumSeries exact;
    for (double x = 10; x <= 1e6; x *= 2)
        exact.checkpoints.emplace_back(x, 1.0 * x * std::log(x) - 2.0 * x);
    FitResult f = fit_asymptotic(exact);
    CHECK(std::abs(f.A - 1.0) < 1e-9);
    CHECK(std::abs(f.B + 2.0) < 1e-9);
    for (auto& [x, r] : f.residuals) CHECK(std::abs(r) < 1e-6);
    // planted power-law residuals: exponent recovered within 0.05
    for (double e : {0.3, 0.6, 0.9}) {
        SumSeries planted;
        for (double x = 10; x <= 1e8; x *= 2)
            planted.checkpoints.emplace_back(
                x, 0.7 * x * std::log(x) + 0.3 * x + std::pow(x, e));
        FitResult g = fit_asymptotic(planted);
        CAPTURE(e);
        CHECK(std::abs(g.exponent_estimate - e) < 0.05);
    }
    // guards
    SumSeries tiny;
    for (double x = 10; x <= 320; x *= 2) tiny.checkpoints.emplace_back(x, x);
    CHECK_THROWS_AS((void)fit_asymptotic(tiny), std::invalid_argument);
}

TEST_CASE("averaged central values grow like x log x (desk scale)") {
    OmegaS w = omega_inf2(1, 0);  // sgn at infinity, trivial dyadic component
    SumSeries s = partial_sum_H(20000, w, kCfg);
    CHECK(s.terms > 100);
    FitResult f = fit_asymptotic(s);
    CHECK(std::isfinite(f.A));
    CHECK(std::isfinite(f.B));
    CHECK(f.A > 0);
    // ratio to x log x settles: monotone over the last five checkpoints
    std::vector<double> ratio;
    for (size_t i = s.checkpoints.size() - 5; i < s.checkpoints.size(); ++i) {
        auto& [x, y] = s.checkpoints[i];
        ratio.push_back(y / (x * std::log(x)));
    }
    bool inc = true, dec = true;
    for (size_t i = 1; i < ratio.size(); ++i) {
        inc = inc && ratio[i] >= ratio[i - 1];
        dec = dec && ratio[i] <= ratio[i - 1];
    }
    CHECK((inc || dec));
}

TEST_CASE("emit_csv round trip") {
    SumSeries s;
    for (double x = 10; x <= 1e5; x *= 2)
        s.checkpoints.emplace_back(x, 0.25 * x * std::log(x) + 0.125 * x);
    FitResult f = fit_asymptotic(s);
    std::string path = "asym_roundtrip_test.csv";
    emit_csv(s, f, path);
    FILE* fp = std::fopen(path.c_str(), "r");
    REQUIRE(fp != nullptr);
    char header[64];
    REQUIRE(std::fscanf(fp, "%63s", header) == 1);
    CHECK(std::string(header) == "x,sum,model,residual");
    size_t rows = 0;
    double x, y, m, r;
    while (std::fscanf(fp, "%lf,%lf,%lf,%lf", &x, &y, &m, &r) == 4) {
        CHECK(x == s.checkpoints[rows].first);
        CHECK(y == s.checkpoints[rows].second);
        CHECK(r == f.residuals[rows].second);
        CHECK(m == doctest::Approx(y - r).epsilon(1e-12));
        ++rows;
    }
    std::fclose(fp);
    std::remove(path.c_str());
    CHECK(rows == s.checkpoints.size());
}
