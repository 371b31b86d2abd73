// Exact p-adic local zeta functions of the space of binary quadratic forms,
// as bivariate rational functions in t1 = p^{-s1}, t2 = p^{-s2}, with a
// residue-counting integration oracle.
//
// Conventions. V = symmetric 2x2 matrices (x1, x12, x2), P1(x) = x1,
// P(x) = x12^2 - x1 x2. Local integrals (dx with vol(Z_p^3) = 1):
//   Z(Phi, s, delta)  = int_{P(x) in delta squares} |x1|^{s1-1}|P|^{s2-1} Phi dx
//   Z~(Phi, s, chi)   = int |x1|^{s1-1}|P|^{s2-1} chi(P(x)) Phi dx
// For Phi = 1_{V(Z_p)} both are rational in t1, t2 (closed forms below).
#ifndef DZ_LOCAL_ZETA_HPP
#define DZ_LOCAL_ZETA_HPP

#include <vector>

#include "dz/characters.hpp"
#include "dz/lfun.hpp"

namespace dz {

// dense bivariate polynomial, coefficient of t1^a t2^b at c[a][b].
struct Poly2 {
    std::vector<std::vector<BigRat>> c;

    static Poly2 zero() { return Poly2{{{BigRat(0)}}}; }
    static Poly2 constant(const BigRat& r) { return Poly2{{{r}}}; }
    // 1 + coef * t1^a t2^b
    static Poly2 one_plus(const BigRat& coef, int a, int b);

    int deg1() const { return (int)c.size() - 1; }
    int deg2() const;
    BigRat at(int a, int b) const;
    bool is_zero() const;

    Poly2 operator+(const Poly2& o) const;
    Poly2 operator-(const Poly2& o) const;
    Poly2 operator*(const Poly2& o) const;
    bool operator==(const Poly2& o) const;
    cplx eval(cplx t1, cplx t2) const;
};

struct RationalFunction2 {
    Poly2 num;
    Poly2 den;
    i64 base_prime;

    cplx eval(cplx t1, cplx t2) const { return num.eval(t1, t2) / den.eval(t1, t2); }
    // equality as rational functions (cross multiplication, exact).
    bool same_function(const RationalFunction2& o) const {
        return num * o.den == o.num * den;
    }
};

struct PowerSeries2 {
    int K;  // coefficients valid for a + b < K
    std::vector<std::vector<BigRat>> c;  // (K x K, entries with a+b >= K unused)
};

// truncated expansion of a rational function (denominator unit at 0).
PowerSeries2 series_expand(const RationalFunction2& f, int K);

// Z~(1_{V(Z_p)}, s, chi) =
//   (1-1/p)^2 L(s1,1) L(2s1+2s2-1,1) L(s2,chi) / (L(2s1+s2,chi) N(f)^{s1})
// written exactly in t1, t2 (local L factors are geometric denominators,
// N(f)^{-s1} = t1^f).
RationalFunction2 closed_form_char(i64 p, const LocalQuadChar& chi);

// Z(1_{V(Z_p)}, s, delta) for odd p (delta given as a square-class index):
//   (1/2)(1-1/p)^2 L(s1,1)L(2s2,1)L(2s1+2s2-1,1)L(s1,chi_delta)
//     / (L(2s1,1) L(s1+2s2,chi_delta) N(f_delta)^{s2}).
RationalFunction2 closed_form_delta(i64 p, int delta_class);

// integration oracle: enumerate (x1, x12, x2) mod p^{K+g}, accumulate
// weight * p^{a+b} * p^{-3(K+g)} at (a,b) = (v(x1), v(P)); coefficients with
// a+b < K are exact. The guard g must determine unit square classes
// (g >= 1 odd p, g >= 3 for p = 2).
PowerSeries2 brute_force_series_char(i64 p, const LocalQuadChar& chi, int K,
                                     int g, int threads = 1);
PowerSeries2 brute_force_series_delta(i64 p, int delta_class, int K, int g,
                                      int threads = 1);

// T_v(1_{V(Z_p)}, s) = (1 + t)/(1 - p t^2), univariate in t = p^{-s}
// (returned with t in the t1 slot).
RationalFunction2 T_local(i64 p);

// the Y_v(s, l, delta) factor of the split-part expansion:
//   chi_delta unramified, l = 2r:  p^{(-2s+1)r} + (1-p^{-s}) sum_{j<r} p^{(-2s+1)j}
//   chi_delta ramified,  l = 2r+1: sum_{j<=r} p^{(-2s+1)j}
//   otherwise 0.
cplx Y_factor(i64 p, cplx s, int l, int delta_class);

// Z(Phi~_r, s, delta) for Phi~_r = 1_{x in V(Z_p), v(P(x)) = r}, odd p,
// exact in t1 (and a known power of t2); used as the brute oracle for
// Y_factor through the identity
//   Z(Phi~_r, s, delta) = (1/2) L(s1,1)L(s1,chi_d)/L(2s1,1)
//                         * Y(s1,r,delta) p^{-r s2} N(f_d)^{-s2}.
cplx stratum_zeta(i64 p, int r, int delta_class, ComplexPair s);

// Z(Psi, s, delta)/Z(Psi, s_ref, delta) for the special test function
// Psi = 1 on the GL2(Z_p)-orbit of diag(1,-delta) + p^2 V(Z_p) (for p = 2
// and delta a square unit, of antidiag(1,1) + p^2 V(Z_p)); the reference
// point is s_ref = (2,2). The orbit is a union of p^2-cells, so the value
// is exact up to the floating evaluation.
cplx special_zeta_ratio(i64 p, int delta_class, ComplexPair s);

// the piecewise values the ratio must match (same normalization).
cplx special_zeta_case(i64 p, int delta_class, ComplexPair s);

// symbolic check of D1^{-m1} D2^{m1+m2} (P1^{s1+m1} P2^{s2+m2})
//   = [s2+1]_{m2} [s1+s2+3/2]_{m1+m2} P1^{s1} P2^{s2}
// with D1 = -d/dx2, D2 = (1/4) d^2/dx12^2 - d^2/dx1 dx2 and the rising
// factorial [e]_k = e(e+1)...(e+k-1).
bool verify_b_function(int m1, int m2, int s1, int s2);

}  // namespace dz

#endif
