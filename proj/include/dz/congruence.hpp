// The direct (congruence-counting) side: root counts
//   A(m, n) = #{x mod m : x^2 = n mod m}
// and the truncated two-variable Dirichlet series
//   xi_i(s)  = sum A(4m, (-1)^{i-1} n) / (m^{s1} n^{s2})
//   xi_i*(s) = sum A(m, (-1)^{i-1} n) / (m^{s1} (4n)^{s2})
// with certified truncation tails (see tail notes in congruence.cpp).
#ifndef DZ_CONGRUENCE_HPP
#define DZ_CONGRUENCE_HPP

#include <complex>

#include "dz/arith.hpp"
#include "dz/lfun.hpp"

namespace dz {

// multiplicative fast path (CRT over prime powers, Hensel case analysis).
i64 count_roots(i64 m, i64 n);

// exhaustive reference used by tests.
i64 count_roots_brute(i64 m, i64 n);

enum class XiVariant { xi1, xi2, xi1star, xi2star };

struct SeriesTruncation {
    i64 m_cut = 2000;
    i64 n_cut = 2000;
};

struct XiDirectResult {
    cplx value;
    double tail;  // certified bound on the truncated remainder
    i64 terms;    // number of nonzero terms accumulated
};

// requires Re(s1) > 3/2 and Re(s2) > 3/2 (certified-tail guard region,
// stricter than the abscissa of absolute convergence).
XiDirectResult xi_direct(XiVariant variant, ComplexPair s,
                         const SeriesTruncation& trunc, int threads = 1);

// xi^S(s, delta) for S = {infinity}: 2^{2 s2 - 1} xi_1* (delta = +1) or
// 2^{2 s2 - 1} xi_2* (delta = -1).
XiDirectResult xi_S_infty(int delta, ComplexPair s,
                          const SeriesTruncation& trunc, int threads = 1);

}  // namespace dz

#endif
