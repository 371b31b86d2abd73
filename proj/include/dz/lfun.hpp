// Quadratic Dirichlet L-functions over Q, numerically and exactly.
//
// The single continuation mechanism is the Euler-Maclaurin expansion of the
// Hurwitz zeta function,
//   zeta_H(s,x) = sum_{n<M} (n+x)^{-s} + (M+x)^{1-s}/(s-1) + (M+x)^{-s}/2
//               + sum_{k=1}^{K} B_{2k}/(2k)! (s)_{2k-1} (M+x)^{-s-2k+1} + R,
// valid for all s != 1, combined with the conductor decomposition
//   L(s,chi) = f^{-s} sum_{a=1}^{f} chi(a) zeta_H(s, a/f).
// Derivatives come from the term-wise differentiated expansion (no finite
// differences in production paths).
#ifndef DZ_LFUN_HPP
#define DZ_LFUN_HPP

#include <complex>
#include <vector>

#include "dz/arith.hpp"
#include "dz/characters.hpp"

namespace dz {

struct ComplexPair {
    cplx s1;
    cplx s2;
};

struct EvalConfig {
    double target_abs_error = 1e-12;
    i64 max_terms = 1000000;
    int euler_maclaurin_order = 12;  // K, between 2 and 30
    int threads = 1;
};

struct HurwitzValue {
    cplx value;
    cplx deriv;       // d/ds, filled only when requested
    double err_bound; // Euler-Maclaurin remainder estimate
};

// zeta_H(s, x) for 0 < x <= 1 (larger x also fine), s != 1.
HurwitzValue hurwitz_zeta(cplx s, double x, const EvalConfig& cfg,
                          bool want_deriv = false);

// fast real-s path (returns value only); used in bulk central-value runs.
double hurwitz_zeta_real(double s, double x, const EvalConfig& cfg);

// L(s, chi_D); D = 1 gives the Riemann zeta function. Throws on the s = 1
// pole for D = 1.
cplx L_value(cplx s, const QuadraticCharacter& chi, const EvalConfig& cfg);

// real-s fast path (chi real, value real).
double L_value_real(double s, const QuadraticCharacter& chi,
                    const EvalConfig& cfg);

// L(s, chi) with the Euler factors at finite places of S removed:
// divide by L_p(s,chi_p) = (1 - chi_p(p) p^{-s})^{-1} for unramified chi_p,
// by 1 for ramified.
cplx L_partial(cplx s, const QuadraticCharacter& chi,
               const std::vector<Place>& S, const EvalConfig& cfg);

// zeta^S(s) = L_partial with D = 1.
cplx zeta_partial(cplx s, const std::vector<Place>& S, const EvalConfig& cfg);

// exact L(1-n, chi_D) = -B_{n,chi}/n.
BigRat L_nonpositive_exact(int n, const QuadraticCharacter& chi);

// dL/ds at s.
cplx L_derivative(cplx s, const QuadraticCharacter& chi, const EvalConfig& cfg);

}  // namespace dz

#endif
