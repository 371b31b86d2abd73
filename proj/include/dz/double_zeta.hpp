// The explicit-formula side of the double Dirichlet series, and everything
// built on top of it.
//
// Over Q the quadratic idele-class characters are exactly the chi_D for D = 1
// or a fundamental discriminant, so the character sum of the main identity
//   xi~^S(s, omega_S) = zeta^S(s1) zeta^S(2s1+2s2-1)
//                       * sum_chi L^S(s2,chi) / (L^S(2s1+s2,chi) N(f_chi^S)^{s1})
// (chi running over those whose local components match omega_S at every place
// of S) is a sum over discriminants ordered by prime-to-S conductor.
//
// From it:
//   xi^S(s, delta_S)   via Fourier inversion on the square-class group,
//   Xi^S(s, omega_S) = (zeta^S(2s1)/zeta^S(s1)) xi~^S(s, omega_S),
//   two functional equations of Xi^S,
//       Xi^S(s1+s2-1/2, 1-s2, w) = Gamma_S(s2, w) Xi^S(s, w)
//       Xi^S(s1, 3/2-s1-s2, w)   = sum_chi G~_S(s, chi, w) Xi^S(s, chi)
//   the single-variable specializations D_m(s, omega_S) and L_m(s, omega_S),
//   and the generalized Cohen function H(m/2, N, omega_S) whose Dirichlet
//   series recovers L_m.
//
// Every truncated character sum reports a tail bound. The bound is a proven
// majorant (|L^S(s,chi)| <= zeta^S(Re s) and |L^S(s,chi)|^{-1} <= zeta^S(Re s)
// for Re s > 1) when the evaluation point allows it, and a convexity-style
// heuristic otherwise; the `certified` flag distinguishes the two.
#ifndef DZ_DOUBLE_ZETA_HPP
#define DZ_DOUBLE_ZETA_HPP

#include <map>
#include <utility>
#include <vector>

#include "dz/characters.hpp"
#include "dz/lfun.hpp"

namespace dz {

// ---------------------------------------------------------------------------
// character families

struct GlobalCharFamily {
    OmegaS omega;
    i64 conductor_bound = 0;  // bound on the prime-to-S conductor
    // all chi_D (D = 1 included when compatible) with local component omega_v
    // at every v of S and prime-to-S conductor <= bound, sorted by
    // (prime-to-S conductor, D).
    std::vector<QuadraticCharacter> members;
};

GlobalCharFamily enumerate_chars(const OmegaS& omega, i64 X);

// ---------------------------------------------------------------------------
// truncated explicit-formula values

struct ExplicitValue {
    cplx value{0.0, 0.0};
    double tail = 0.0;     // bound/estimate for the dropped conductors > X
    bool certified = false;  // true iff `tail` is a proven majorant
    i64 terms = 0;         // number of characters summed
};

// xi~^S(s, omega_S), conductor sum truncated at X. Requires Re(s1) > 1;
// s2 anywhere the L continuation applies. Throws on a zeta/L pole.
ExplicitValue xi_tilde_explicit(const ComplexPair& s, const OmegaS& omega,
                                i64 X, const EvalConfig& cfg);

// xi^S(s, delta_S) = (|2|_S / 2^{|S|+1}) sum_{omega_S} omega_S(delta_S)
//                    * xi~^S(s, omega_S).
// delta_S maps each place of S to a square-class index (the key set defines
// S and must contain the real place).
ExplicitValue xi_delta(const ComplexPair& s, const std::map<Place, int>& delta_S,
                       i64 X, const EvalConfig& cfg);

// Xi^S(s, omega_S) = (zeta^S(2s1)/zeta^S(s1)) xi~^S(s, omega_S).
ExplicitValue Xi_cap(const ComplexPair& s, const OmegaS& omega, i64 X,
                     const EvalConfig& cfg);

// ---------------------------------------------------------------------------
// functional-equation verifiers (absolute residuals)

// |Xi^S(s1+s2-1/2, 1-s2, omega) - Gamma_S(s2, omega) Xi^S(s, omega)|.
double verify_fe1(const ComplexPair& s, const OmegaS& omega, i64 X,
                  const EvalConfig& cfg);

// |Xi^S(s1, 3/2-s1-s2, omega) - sum_{chi_S} G~_S(s, chi_S, omega) Xi^S(s, chi_S)|
// with G~_S the product over S of the local functional-equation matrices.
// Over Q the discriminant factor is 1. Requires S = {inf, 2}.
double verify_fe2(const ComplexPair& s, const OmegaS& omega, i64 X,
                  const EvalConfig& cfg);

// The two single-series functional equations, verified through the explicit
// D-sum forms of xi_j and xi_j* (S = {inf}); see double_zeta.cpp for the
// displays. Each residual is the max of its two sub-branches (j = 1,2 for the
// classic equation, k = 0,1 for the starred one).
struct ShintaniResiduals {
    double classic;  // zeta(2-2s1)/zeta(1-s1) xi_j(1-s1, s1+s2-1/2) = ...
    double star;     // ... (xi_1* +- xi_2*)(s1+s2-1/2, 1-s2) = ...
};

ShintaniResiduals verify_shintani_fe(const ComplexPair& s, const EvalConfig& cfg,
                                     i64 X = 600);

// explicit D-sum forms used by the verifier, exposed for cross-checks against
// the direct (congruence-count) side; j = 1 sums over D > 0, j = 2 over D < 0.
ExplicitValue xi_j_explicit(const ComplexPair& s, int j, i64 X,
                            const EvalConfig& cfg);
ExplicitValue xi_j_star_explicit(const ComplexPair& s, int j, i64 X,
                                 const EvalConfig& cfg);

// ---------------------------------------------------------------------------
// the single-variable series D_m and L_m

// D_m(s, omega_S) = zeta^S(2s-m+1) zeta^S(2s)
//   * sum_chi L^S(m/2, chi) / (L^S(2s-m/2+1, chi) N(f_chi^S)^{s-m/2+1/2}).
// Throws near the poles (s = (m+1)/2; also s = 1 for m <= 2 and the
// zeta^S(2s-m+1) pole at s = m/2).
ExplicitValue D_m_value(cplx s, int m, const OmegaS& omega, i64 X,
                        const EvalConfig& cfg);

// L_m(s, omega_S) = D_m(s, omega_S) * 2 (2 pi)^{-m/2} Gamma(m/2)
//   * prod_{p in S_0} (1 - omega_p(p) p^{-2s+m/2-1})
//       / ((1 - p^{-2s})(1 - p^{-2s+m-1})(1 - omega_p(p) p^{-m/2}))
//   * the case constant (cos or sin of m pi/4, with a pi/2 for the
//     derivative cases); omega_p(p) = 0 when omega_p is ramified.
ExplicitValue L_m_value(cplx s, int m, const OmegaS& omega, i64 X,
                        const EvalConfig& cfg);

// case selector: 1..4 for
//   (1) omega_inf trivial, m != 2 mod 4      -> L(1-m/2) * cos(m pi/4)
//   (2) omega_inf trivial, m == 2 mod 4      -> L'(1-m/2) * (pi/2) sin(m pi/4)
//   (3) omega_inf = sgn,   m != 0 mod 4      -> L(1-m/2) * sin(m pi/4)
//   (4) omega_inf = sgn,   m == 0 mod 4      -> L'(1-m/2) * -(pi/2) cos(m pi/4)
int cohen_case(int m, const OmegaS& omega);

// ---------------------------------------------------------------------------
// generalized Cohen function

struct CohenValue {
    i64 N = 0;
    i64 D = 0;      // 1 or fundamental discriminant, N = (-1)^{delta} D f^2
    i64 f = 0;
    double value = 0.0;  // H(m/2, N, omega_S); exact rational in the
                         // non-derivative cases with m even
};

// H(m/2, N, omega_S) = sum_{u|f} mu(u) chi_D(u) u^{m/2-1} sigma_{m-1}(f/u)
//   * L(1-m/2, chi_D)   (cases 1, 3)
//   * L'(1-m/2, chi_D)  (cases 2, 4).
// Throws when N admits no decomposition (-1)^{delta} D f^2 with D compatible
// with omega_S.
CohenValue cohen_H(int m, i64 N, const OmegaS& omega,
                   const EvalConfig& cfg = EvalConfig{});

// all N <= x in the support, with their (D, f) decompositions (value unset).
std::vector<CohenValue> enumerate_N(const OmegaS& omega, i64 x);

// |sum_{N <= x} H(m/2, N, omega_S) N^{-s} - L_m(s, omega_S)|; requires
// Re(s) > (m+1)/2 for the coefficient sum to converge.
double L_m_coefficient_check(int m, const OmegaS& omega, cplx s, i64 x,
                             const EvalConfig& cfg);

}  // namespace dz

#endif
