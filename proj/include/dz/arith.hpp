// Exact integer and rational building blocks: factorization, Kronecker and
// Hilbert symbols, fundamental discriminants, divisor data, Bernoulli numbers
// and generalized Bernoulli numbers B_{n,chi} for quadratic characters.
//
// Everything in this file is exact (integer or rational); no floating point.
#ifndef DZ_ARITH_HPP
#define DZ_ARITH_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <vector>

namespace dz {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;
using i64 = long long;
using u64 = unsigned long long;

// ---------------------------------------------------------------------------
// factorization

struct FactorExp {
    i64 p;
    int e;
};

// prime factorization of n > 0, primes strictly increasing.
std::vector<FactorExp> factorize(i64 n);

// deterministic Miller-Rabin for 0 < n < 2^63.
bool is_prime(i64 n);

// v_p(n) for n != 0.
int padic_valuation(i64 n, i64 p);

// ---------------------------------------------------------------------------
// multiplicative symbols

// Kronecker symbol (a|n) for arbitrary integers, n != 0 (or a = +-1 with
// n = 0, where the empty-modulus convention gives 1).
int kronecker(i64 a, i64 n);

// Hilbert symbol (a,b)_v over Q_v for nonzero integers a, b.
// v = 0 encodes the real place; otherwise v is a prime.
int hilbert_symbol(i64 a, i64 b, i64 v);

// Hilbert symbol for nonzero rationals given as fractions; the symbol only
// depends on square classes so (num/den, ...) = (num*den, ...).
int hilbert_symbol_rat(i64 a_num, i64 a_den, i64 b_num, i64 b_den, i64 v);

// ---------------------------------------------------------------------------
// discriminants

// true iff D is a fundamental discriminant in the quadratic-field sense
// (D = 1 is excluded here; it is carried separately as the trivial
// character).
bool is_fundamental_discriminant(i64 D);

// all D with |D| <= bound that are fundamental discriminants, plus D = 1,
// sorted by (|D|, D). This is the unconstrained discriminant list; the
// character-constrained version lives in double_zeta (it needs local
// character data).
std::vector<i64> enumerate_discriminants(i64 bound);

// ---------------------------------------------------------------------------
// divisor data

struct DivisorData {
    i64 n;
    std::vector<i64> divisors;  // increasing
    std::vector<int> mu;        // mu[i] = moebius(divisors[i])
};

DivisorData divisor_data(i64 n);

// sigma_k(n) = sum of d^k over divisors d of n (k >= 0).
BigInt sigma_k(i64 n, int k);

int moebius(i64 n);

// ---------------------------------------------------------------------------
// Bernoulli numbers and polynomials

// B_n with B_1 = -1/2 (the generating function t/(e^t-1) convention).
BigRat bernoulli_number(int n);

// coefficients c[k] of x^k in the Bernoulli polynomial B_n(x).
std::vector<BigRat> bernoulli_poly(int n);

// B_n(x) evaluated at an exact rational.
BigRat bernoulli_poly_at(int n, const BigRat& x);

// generalized Bernoulli number B_{n,chi_D} = f^{n-1} sum_{a=1}^{f} chi_D(a)
// B_n(a/f) with f = |D| the conductor (f = 1 for D = 1, where this reduces
// to the ordinary Bernoulli number except B_{1,1} = +1/2 by the a=f term).
BigRat generalized_bernoulli(int n, i64 D);

}  // namespace dz

#endif
