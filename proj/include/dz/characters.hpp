// Local and global quadratic character data over Q.
//
// A quadratic character of Q_v^x is determined by its values on square-class
// representatives:
//   v = infinity : {+1, -1}
//   v = p odd    : {1, u, p, u p}, u = smallest positive non-residue mod p
//   v = 2        : {+-1, +-5, +-2, +-10}
// The global character chi_D (D = 1 or a fundamental discriminant) has local
// component x -> (D, x)_v, the Hilbert symbol.
//
// Built on top of that: local conductors, Gauss sums, local gamma factors
// gamma~_v(s,chi) of the Tate functional equation, the summed factors
// gamma_v(s,u), Weil constants alpha_psi(a), the global factor Gamma_S, and
// the functional-equation matrices G_v and G~_v.
//
// Additive character convention at a finite place: psi_p(x) = e^{-2 pi i {x}_p}
// with {x}_p the p-adic fractional part. This is the unique choice trivial on
// Z_p that multiplies with psi_infinity(x) = e^{2 pi i x} to a character
// trivial on Q, and every Gauss sum and Weil constant below uses it.
#ifndef DZ_CHARACTERS_HPP
#define DZ_CHARACTERS_HPP

#include <complex>
#include <map>
#include <string>
#include <vector>

#include "dz/arith.hpp"

namespace dz {

using cplx = std::complex<double>;

// ---------------------------------------------------------------------------
// places

struct Place {
    i64 p;  // 0 = real place, otherwise the prime
    bool infinite() const { return p == 0; }
    bool operator==(const Place& o) const { return p == o.p; }
    bool operator<(const Place& o) const {
        // real place sorts first
        if (p == 0 || o.p == 0) return p == 0 && o.p != 0;
        return p < o.p;
    }
};

inline Place real_place() { return Place{0}; }
inline Place finite_place(i64 p) { return Place{p}; }

// number of square classes #(Q_v^x / (Q_v^x)^2): 2, 4, or 8.
int num_square_classes(Place v);

// canonical square-class representatives in the order documented above.
std::vector<i64> square_class_reps(Place v);

// index into square_class_reps of the class of nonzero x (x given as a
// rational num/den to allow p in the denominator).
int square_class_index(Place v, i64 num, i64 den = 1);

// smallest positive quadratic non-residue mod odd p.
i64 smallest_nonresidue(i64 p);

// ---------------------------------------------------------------------------
// local characters

struct LocalQuadChar {
    Place v;
    // values on the square-class representatives, in canonical order;
    // sign[0] is the value on the class of 1 and is always +1.
    // Size 2, 4, or 8 matching the place.
    std::vector<int> sign;

    bool trivial() const;
    // value on the square class of num/den.
    int value(i64 num, i64 den = 1) const;
    int value_on_class(int idx) const { return sign[idx]; }
    // conductor exponent f: 0 at infinity; {0,1} at odd p; {0,2,3} at p=2.
    int conductor_exponent() const;
    bool ramified() const { return conductor_exponent() > 0; }
    // value on the uniformizer p (finite v), or on -1 (real v).
    int value_at_uniformizer() const;
    // for the real place: delta = 0 (trivial) or 1 (sgn).
    int delta() const;

    bool operator==(const LocalQuadChar& o) const {
        return v == o.v && sign == o.sign;
    }
};

// the trivial character of Q_v^x.
LocalQuadChar trivial_local_char(Place v);

// all quadratic characters of Q_v^x/(Q_v^x)^2 in a fixed order
// (2 at infinity, 4 at odd p, 8 at p=2).
std::vector<LocalQuadChar> all_local_chars(Place v);

// local character x -> (D, x)_v.
LocalQuadChar local_component(i64 D, Place v);

// pointwise product of two characters at the same place.
LocalQuadChar char_product(const LocalQuadChar& a, const LocalQuadChar& b);

// parse/format of the CLI encoding "inf:+", "p:+ -" (values on u, p),
// "2:+ - +" (values on -1, 5, 2).
LocalQuadChar parse_local_char(const std::string& enc);
std::string format_local_char(const LocalQuadChar& chi);

// ---------------------------------------------------------------------------
// a finite family of local characters indexed by places (omega_S)

struct OmegaS {
    // keyed by place; must contain the real place.
    std::map<Place, LocalQuadChar> comp;

    std::vector<Place> places() const;
    const LocalQuadChar& at(Place v) const { return comp.at(v); }
    bool has(Place v) const { return comp.count(v) > 0; }
    int omega_inf_delta() const { return comp.at(real_place()).delta(); }
    bool trivial() const;
};

OmegaS parse_omega(const std::vector<std::string>& encodings);
std::string format_omega(const OmegaS& w);

// global quadratic character chi_D
struct QuadraticCharacter {
    i64 D;  // 1 or fundamental discriminant
    i64 conductor() const { return D == 1 ? 1 : (D < 0 ? -D : D); }
    int value(i64 n) const { return D == 1 ? (n != 0) : kronecker(D, n); }
    LocalQuadChar local(Place v) const { return local_component(D, v); }
};

// |D| with all primes of S divided out to full multiplicity.
i64 conductor_prime_to_S(const QuadraticCharacter& chi,
                         const std::vector<Place>& S);

// ---------------------------------------------------------------------------
// Gauss sums, gamma factors, Weil constants

// normalized Gauss sum g_chi = N(f)^{-1} sum_{u mod p^f} chi(u) psi_p(u/p^f)
// for a ramified character at a finite place; |g| = N(f)^{-1/2}.
cplx gauss_sum(const LocalQuadChar& chi);

// local gamma factor gamma~_v(s, chi):
//   real place:        i^delta pi^{1/2-s} Gamma((s+delta)/2)/Gamma((1-s+delta)/2)
//   finite unramified: (1 - chi(p) p^{-1+s}) / (1 - chi(p) p^{-s})
//   finite ramified:   g_chi N(f)^s
cplx tilde_gamma(const LocalQuadChar& chi, cplx s);

// gamma_v(s, u) = sum over all chi of chi(u) gamma~_v(s, chi); u given by
// square-class index.
cplx gamma_sum(int class_idx, Place v, cplx s);

// Weil constant alpha_psi(a) for a square class (by index). At the real
// place alpha(+-1) = e^{+-i pi/4}; at a finite place it is solved from the
// quadratic-phase Fourier identity with test function 1_{Z_p}, both sides
// reduced to finite exponential sums.
cplx weil_constant(int class_idx, Place v);

// global gamma factor Gamma_S(s, omega_S) specialized to Q:
//   [cos or sin](s pi/2) * 2 (2 pi)^{-s} Gamma(s)
//   * prod_{p in S} N(f_{omega_p})^{s-1/2}
//   * prod_{p in S, omega_p unramified} (1-omega_p(p)p^{-1+s})/(1-omega_p(p)p^{-s})
// cos when omega_inf is trivial, sin when omega_inf = sgn.
cplx gamma_cap_S(const OmegaS& omega, cplx s);

// functional-equation matrices at a place. Entries are indexed by the order
// of all_local_chars(v) (for g_tilde) or square_class_reps(v) (for g).
//
// G~_v(s, chi, omega) = |2|_v^{-1/2} n^{-1} gamma~(s2,chi) gamma~(s1+s2-1/2,omega)
//                        * sum_eta alpha(-eta) (chi omega)(eta)
// G_v(s, delta, xi)   = |2|_v^{-1/2} n^{-2} sum_eta alpha(-eta)
//                        * gamma(s2, delta eta) gamma(s1+s2-1/2, eta xi)
// with n = #(Q_v^x/(Q_v^x)^2).
std::vector<std::vector<cplx>> g_tilde_matrix(cplx s1, cplx s2, Place v);
std::vector<std::vector<cplx>> g_matrix(cplx s1, cplx s2, Place v);

// closed forms at the real place (used as oracles for the two above):
// G~_inf(s, chi_delta, omega_eps) and G_inf(s, delta, xi).
cplx g_tilde_inf_closed(cplx s1, cplx s2, int delta, int eps);
cplx g_inf_closed(cplx s1, cplx s2, int i, int j);

}  // namespace dz

#endif
