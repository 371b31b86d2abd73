// Averages of the central Cohen values: partial sums of H(1/2, N, omega_S),
// the A x log x + B x least-squares fit, and the residual-exponent probe.
//
// The x log x main term is the Dirichlet-series double pole at s = 1 seen
// from the coefficient side, so these sums are also the numerically feasible
// probe of that pole (the truncated character sum cannot exhibit it).
#ifndef DZ_ASYM_HPP
#define DZ_ASYM_HPP

#include <string>
#include <utility>
#include <vector>

#include "dz/characters.hpp"
#include "dz/lfun.hpp"

namespace dz {

struct SumSeries {
    // (x_k, sum_{N <= x_k} H(1/2, N, omega_S)), x_k strictly increasing
    // (geometric grid x 2^{-k} rounded down, deduplicated)
    std::vector<std::pair<double, double>> checkpoints;
    i64 terms = 0;           // #N <= x in the support
    i64 negative_terms = 0;  // #H < 0 (reported, never asserted zero)
    double numeric_error = 0.0;  // accumulated per-value precision bound
};

struct FitResult {
    double A = 0.0;
    double B = 0.0;
    // (x, partial_sum(x) - A x log x - B x) at every checkpoint
    std::vector<std::pair<double, double>> residuals;
    double exponent_estimate = 0.0;  // slope of log|r| vs log x
};

// central value L(1/2, chi_D) for D = 1 or a fundamental discriminant, via
// the smoothed approximate functional equation
//   L(1/2, chi) = (2 / Gamma(1/4 + a/2))
//                 * sum_{n >= 1} chi(n) n^{-1/2} Gamma(1/4 + a/2, pi n^2 / f)
// (a = 0 for even chi, a = 1 for odd; the quadratic root number is +1);
// absolute accuracy ~1e-11, cost O(sqrt(f)) incomplete-gamma evaluations.
double central_L_quadratic(i64 D);

// sum of H(1/2, N, omega_S) over the support up to x, with checkpoints on
// the geometric grid; L(1/2, chi_D) computed once per D.
SumSeries partial_sum_H(i64 x, const OmegaS& omega, const EvalConfig& cfg);

// least squares for [x log x, x] over the upper half of the checkpoints
// (small-x transients excluded); the exponent estimate is the slope of
// log|r(x)| against log x over the same range. Throws std::invalid_argument
// on fewer than 8 checkpoints or a span under two decades.
FitResult fit_asymptotic(const SumSeries& series);

// CSV artifact: header "x,sum,model,residual", one row per checkpoint,
// %.17g formatting. Throws std::runtime_error on I/O failure.
void emit_csv(const SumSeries& series, const FitResult& fit,
              const std::string& path);

}  // namespace dz

#endif
