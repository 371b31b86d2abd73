#include "dz/characters.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "dz/cgamma.hpp"

namespace dz {

static const double PI = 3.14159265358979323846;

// ---------------------------------------------------------------------------
// square classes

int num_square_classes(Place v) {
    if (v.infinite()) return 2;
    return v.p == 2 ? 8 : 4;
}

i64 smallest_nonresidue(i64 p) {
    for (i64 u = 2; u < p; ++u)
        if (kronecker(u, p) == -1) return u;
    throw std::logic_error("smallest_nonresidue: no non-residue found");
}

std::vector<i64> square_class_reps(Place v) {
    if (v.infinite()) return {1, -1};
    if (v.p == 2) return {1, -1, 5, -5, 2, -2, 10, -10};
    i64 u = smallest_nonresidue(v.p);
    return {1, u, v.p, u * v.p};
}

int square_class_index(Place v, i64 num, i64 den) {
    if (num == 0 || den == 0)
        throw std::invalid_argument("square_class_index: zero");
    // num/den and num*den are in the same square class
    i64 x = num * den;
    if (v.infinite()) return x > 0 ? 0 : 1;
    i64 p = v.p;
    int a = padic_valuation(x, p);
    i64 w = x;
    for (int i = 0; i < a; ++i) w /= p;
    if (p == 2) {
        i64 r = ((w % 8) + 8) % 8;  // 1, 3, 5, 7
        int unit_idx = r == 1 ? 0 : r == 7 ? 1 : r == 5 ? 2 : 3;  // 1,-1,5,-5
        return 4 * (a & 1) + unit_idx;
    }
    int unit_idx = kronecker(w, p) == 1 ? 0 : 1;
    return 2 * (a & 1) + unit_idx;
}

namespace {

// index of the product of two square classes
int class_mul(Place v, int i, int j) {
    auto reps = square_class_reps(v);
    return square_class_index(v, reps[i] * reps[j]);
}

// index of the class of -rep[i]
int class_neg(Place v, int i) {
    auto reps = square_class_reps(v);
    return square_class_index(v, -reps[i]);
}

}  // namespace

// ---------------------------------------------------------------------------
// local characters

bool LocalQuadChar::trivial() const {
    for (int s : sign)
        if (s != 1) return false;
    return true;
}

int LocalQuadChar::value(i64 num, i64 den) const {
    return sign[square_class_index(v, num, den)];
}

int LocalQuadChar::conductor_exponent() const {
    if (v.infinite()) return 0;
    if (v.p == 2) {
        // sign[1] = value on -1, sign[2] = value on 5
        if (sign[2] == -1) return 3;   // conductor 8
        if (sign[1] == -1) return 2;   // conductor 4
        return 0;
    }
    return sign[1] == -1 ? 1 : 0;      // nontrivial on units
}

int LocalQuadChar::value_at_uniformizer() const {
    if (v.infinite()) return sign[1];
    return v.p == 2 ? sign[4] : sign[2];
}

int LocalQuadChar::delta() const {
    if (!v.infinite()) throw std::logic_error("delta: finite place");
    return sign[1] == -1 ? 1 : 0;
}

namespace {

// build the full sign vector from values on group generators
LocalQuadChar make_char(Place v, const std::vector<int>& gen) {
    LocalQuadChar c;
    c.v = v;
    if (v.infinite()) {
        c.sign = {1, gen[0]};
    } else if (v.p == 2) {
        // generators: classes of -1, 5, 2
        int a = gen[0], b = gen[1], d = gen[2];
        // order {1, -1, 5, -5, 2, -2, 10, -10}
        c.sign = {1, a, b, a * b, d, a * d, b * d, a * b * d};
    } else {
        // generators: classes of u, p
        int a = gen[0], b = gen[1];
        c.sign = {1, a, b, a * b};
    }
    return c;
}

}  // namespace

LocalQuadChar trivial_local_char(Place v) {
    if (v.infinite()) return make_char(v, {1});
    if (v.p == 2) return make_char(v, {1, 1, 1});
    return make_char(v, {1, 1});
}

std::vector<LocalQuadChar> all_local_chars(Place v) {
    std::vector<LocalQuadChar> out;
    if (v.infinite()) {
        for (int a : {1, -1}) out.push_back(make_char(v, {a}));
        return out;
    }
    if (v.p == 2) {
        for (int a : {1, -1})
            for (int b : {1, -1})
                for (int d : {1, -1}) out.push_back(make_char(v, {a, b, d}));
        return out;
    }
    for (int a : {1, -1})
        for (int b : {1, -1}) out.push_back(make_char(v, {a, b}));
    return out;
}

LocalQuadChar local_component(i64 D, Place v) {
    if (v.infinite()) return make_char(v, {hilbert_symbol(D, -1, 0)});
    if (v.p == 2)
        return make_char(v, {hilbert_symbol(D, -1, 2), hilbert_symbol(D, 5, 2),
                             hilbert_symbol(D, 2, 2)});
    i64 u = smallest_nonresidue(v.p);
    return make_char(v, {hilbert_symbol(D, u, v.p), hilbert_symbol(D, v.p, v.p)});
}

LocalQuadChar char_product(const LocalQuadChar& a, const LocalQuadChar& b) {
    if (!(a.v == b.v)) throw std::invalid_argument("char_product: places differ");
    LocalQuadChar c;
    c.v = a.v;
    c.sign.resize(a.sign.size());
    for (size_t i = 0; i < a.sign.size(); ++i) c.sign[i] = a.sign[i] * b.sign[i];
    return c;
}

LocalQuadChar parse_local_char(const std::string& enc) {
    auto colon = enc.find(':');
    if (colon == std::string::npos)
        throw std::invalid_argument("parse_local_char: missing ':' in " + enc);
    std::string head = enc.substr(0, colon);
    std::string rest = enc.substr(colon + 1);
    std::vector<int> gen;
    for (char ch : rest) {
        if (ch == '+') gen.push_back(1);
        else if (ch == '-') gen.push_back(-1);
        else if (ch != ' ')
            throw std::invalid_argument("parse_local_char: bad sign char in " + enc);
    }
    if (head == "inf") {
        if (gen.size() != 1) throw std::invalid_argument("inf char needs one sign");
        return make_char(real_place(), gen);
    }
    i64 p = std::stoll(head);
    if (!is_prime(p)) throw std::invalid_argument("parse_local_char: not a prime");
    size_t want = p == 2 ? 3 : 2;
    if (gen.size() != want)
        throw std::invalid_argument("parse_local_char: wrong sign count");
    return make_char(finite_place(p), gen);
}

std::string format_local_char(const LocalQuadChar& chi) {
    std::ostringstream os;
    auto s = [](int x) { return x == 1 ? "+" : "-"; };
    if (chi.v.infinite()) {
        os << "inf:" << s(chi.sign[1]);
    } else if (chi.v.p == 2) {
        os << "2:" << s(chi.sign[1]) << " " << s(chi.sign[2]) << " " << s(chi.sign[4]);
    } else {
        os << chi.v.p << ":" << s(chi.sign[1]) << " " << s(chi.sign[2]);
    }
    return os.str();
}

// ---------------------------------------------------------------------------
// OmegaS

std::vector<Place> OmegaS::places() const {
    std::vector<Place> out;
    for (auto& kv : comp) out.push_back(kv.first);
    return out;
}

bool OmegaS::trivial() const {
    for (auto& kv : comp)
        if (!kv.second.trivial()) return false;
    return true;
}

OmegaS parse_omega(const std::vector<std::string>& encodings) {
    OmegaS w;
    for (auto& e : encodings) {
        LocalQuadChar c = parse_local_char(e);
        w.comp[c.v] = c;
    }
    if (!w.has(real_place()))
        throw std::invalid_argument("parse_omega: the real place is required");
    return w;
}

std::string format_omega(const OmegaS& w) {
    std::string out;
    for (auto& kv : w.comp) {
        if (!out.empty()) out += ";";
        out += format_local_char(kv.second);
    }
    return out;
}

i64 conductor_prime_to_S(const QuadraticCharacter& chi,
                         const std::vector<Place>& S) {
    i64 f = chi.conductor();
    for (auto& v : S) {
        if (v.infinite()) continue;
        while (f % v.p == 0) f /= v.p;
    }
    return f;
}

// ---------------------------------------------------------------------------
// Gauss sums and gamma factors

cplx gauss_sum(const LocalQuadChar& chi) {
    if (chi.v.infinite() || !chi.ramified())
        throw std::invalid_argument("gauss_sum: needs a ramified finite character");
    i64 p = chi.v.p;
    int f = chi.conductor_exponent();
    i64 q = 1;
    for (int i = 0; i < f; ++i) q *= p;
    cplx acc = 0;
    for (i64 u = 1; u < q; ++u) {
        if (u % p == 0) continue;
        // psi_p(u p^{-f}) = e^{-2 pi i u / q}
        double ang = -2.0 * PI * (double)u / (double)q;
        acc += (double)chi.value(u) * cplx(std::cos(ang), std::sin(ang));
    }
    return acc / (double)q;
}

cplx tilde_gamma(const LocalQuadChar& chi, cplx s) {
    if (chi.v.infinite()) {
        int d = chi.delta();
        cplx i_pow = d == 0 ? cplx(1, 0) : cplx(0, 1);
        return i_pow * std::pow(PI, cplx(0.5, 0) - s) *
               complex_gamma((s + (double)d) / 2.0) /
               complex_gamma((1.0 - s + (double)d) / 2.0);
    }
    double p = (double)chi.v.p;
    if (!chi.ramified()) {
        double cp = (double)chi.value_at_uniformizer();
        return (1.0 - cp * std::pow(p, s - 1.0)) / (1.0 - cp * std::pow(p, -s));
    }
    // Tate functional equation with phi supported on 1 + f: the only
    // surviving shell is |y| = N(f), carrying chi(pi^{-f}) = chi(pi)^f.
    // (The chi(pi)^f signs cancel in products over all ramified places by
    // Hilbert reciprocity, so Gamma_S is unaffected, but the local
    // functional-equation matrices need them.)
    int f = chi.conductor_exponent();
    double Nf = std::pow(p, f);
    double up = f % 2 == 0 ? 1.0 : (double)chi.value_at_uniformizer();
    return up * gauss_sum(chi) * std::pow(cplx(Nf, 0), s);
}

cplx gamma_sum(int class_idx, Place v, cplx s) {
    cplx acc = 0;
    for (auto& chi : all_local_chars(v))
        acc += (double)chi.value_on_class(class_idx) * tilde_gamma(chi, s);
    return acc;
}

// ---------------------------------------------------------------------------
// Weil constants
//
// Defining relation with test function phi = 1_{Z_p} (self-dual since the
// additive character has exponent 0):
//     int phi(x) psi(a x^2) dx = alpha(a) |2a|^{-1/2} int phi(x) psi(-x^2/(4a)) dx
// For a square-class representative a (v_p(a) in {0,1}) the left side is 1,
// and the right integral reduces to the finite normalized exponential sum
//     S = p^{-k} sum_{x mod p^k} psi(-x^2 c / p^t),   t = v_p(4a),
// with c the inverse of the unit part of 4a mod p^t, and k = t (+1 at p=2,
// one dyadic guard digit for the cross term 2 x y p^k). So alpha = |2a|^{1/2}/S.

cplx weil_constant(int class_idx, Place v) {
    if (v.infinite())
        return class_idx == 0 ? std::polar(1.0, PI / 4) : std::polar(1.0, -PI / 4);
    i64 p = v.p;
    i64 a = square_class_reps(v)[class_idx];
    i64 four_a = 4 * a;
    int t = padic_valuation(four_a, p);
    i64 m = four_a;
    for (int i = 0; i < t; ++i) m /= p;
    i64 pt = 1;
    for (int i = 0; i < t; ++i) pt *= p;
    // inverse of m mod p^t
    i64 mm = ((m % pt) + pt) % pt;
    i64 c = 1;
    if (pt > 1) {
        // extended Euclid
        i64 r0 = pt, r1 = mm, s0 = 0, s1 = 1;
        while (r1 != 0) {
            i64 qd = r0 / r1;
            std::swap(r0 -= qd * r1, r1);
            std::swap(s0 -= qd * s1, s1);
        }
        c = ((s0 % pt) + pt) % pt;
    }
    int k = t + (p == 2 ? 1 : 0);
    i64 pk = 1;
    for (int i = 0; i < k; ++i) pk *= p;
    cplx S = 0;
    for (i64 x = 0; x < pk; ++x) {
        if (pt == 1) { S += 1.0; continue; }
        i64 num = ((-(__int128)x * x % pt * c % pt) % pt + pt) % pt;
        double ang = -2.0 * PI * (double)num / (double)pt;
        S += cplx(std::cos(ang), std::sin(ang));
    }
    S /= (double)pk;
    double abs2a = std::pow((double)p, -(double)padic_valuation(2 * a, p));
    return std::sqrt(abs2a) / S;
}

// ---------------------------------------------------------------------------
// Gamma_S

cplx gamma_cap_S(const OmegaS& omega, cplx s) {
    int t = omega.at(real_place()).delta() == 0 ? 1 : 0;
    cplx trig = t == 1 ? std::cos(s * PI / 2.0) : std::sin(s * PI / 2.0);
    cplx val = trig * 2.0 * std::pow(2.0 * PI, -s) * complex_gamma(s);
    for (auto& kv : omega.comp) {
        if (kv.first.infinite()) continue;
        double p = (double)kv.first.p;
        const LocalQuadChar& chi = kv.second;
        double Nf = std::pow(p, chi.conductor_exponent());
        val *= std::pow(cplx(Nf, 0), s - 0.5);
        if (!chi.ramified()) {
            double cp = (double)chi.value_at_uniformizer();
            val *= (1.0 - cp * std::pow(p, s - 1.0)) / (1.0 - cp * std::pow(p, -s));
        }
    }
    return val;
}

// ---------------------------------------------------------------------------
// FE matrices

std::vector<std::vector<cplx>> g_tilde_matrix(cplx s1, cplx s2, Place v) {
    auto chars = all_local_chars(v);
    int n = num_square_classes(v);
    double abs2 = v.infinite() ? 2.0 : (v.p == 2 ? 0.5 : 1.0);
    double pref = 1.0 / (std::sqrt(abs2) * n);
    cplx sstar = s1 + s2 - 0.5;
    // Weil constants alpha(-eta) for each class eta
    std::vector<cplx> alpha_neg(n);
    for (int e = 0; e < n; ++e) alpha_neg[e] = weil_constant(class_neg(v, e), v);
    std::vector<std::vector<cplx>> G(chars.size(),
                                     std::vector<cplx>(chars.size()));
    for (size_t i = 0; i < chars.size(); ++i) {
        cplx gi = tilde_gamma(chars[i], s2);
        for (size_t j = 0; j < chars.size(); ++j) {
            cplx gj = tilde_gamma(chars[j], sstar);
            LocalQuadChar prod = char_product(chars[i], chars[j]);
            cplx esum = 0;
            for (int e = 0; e < n; ++e)
                esum += alpha_neg[e] * (double)prod.value_on_class(e);
            G[i][j] = pref * gi * gj * esum;
        }
    }
    return G;
}

std::vector<std::vector<cplx>> g_matrix(cplx s1, cplx s2, Place v) {
    int n = num_square_classes(v);
    double abs2 = v.infinite() ? 2.0 : (v.p == 2 ? 0.5 : 1.0);
    double pref = 1.0 / (std::sqrt(abs2) * n * n);
    cplx sstar = s1 + s2 - 0.5;
    std::vector<cplx> alpha_neg(n);
    for (int e = 0; e < n; ++e) alpha_neg[e] = weil_constant(class_neg(v, e), v);
    std::vector<std::vector<cplx>> G(n, std::vector<cplx>(n));
    for (int d = 0; d < n; ++d) {
        for (int x = 0; x < n; ++x) {
            cplx acc = 0;
            for (int e = 0; e < n; ++e)
                acc += alpha_neg[e] * gamma_sum(class_mul(v, d, e), v, s2) *
                       gamma_sum(class_mul(v, e, x), v, sstar);
            G[d][x] = pref * acc;
        }
    }
    return G;
}

cplx g_tilde_inf_closed(cplx s1, cplx s2, int delta, int eps) {
    cplx sstar = s1 + s2 - 0.5;
    cplx pref = std::pow(2.0, 1.5 - s1 - 2.0 * s2) *
                std::pow(PI, 0.5 - s1 - 2.0 * s2) * complex_gamma(s2) *
                complex_gamma(sstar);
    cplx a = delta == 0 ? std::cos(PI * s2 / 2.0) : std::sin(PI * s2 / 2.0);
    cplx b = eps == 0 ? std::cos(PI * sstar / 2.0) : std::sin(PI * sstar / 2.0);
    double sgn = (delta == 1 && eps == 1) ? -1.0 : 1.0;
    return pref * sgn * a * b;
}

cplx g_inf_closed(cplx s1, cplx s2, int i, int j) {
    cplx pref = std::pow(2.0, 1.0 - s1 - 2.0 * s2) *
                std::pow(PI, 0.5 - s1 - 2.0 * s2) * complex_gamma(s2) *
                complex_gamma(s1 + s2 - 0.5);
    cplx entry;
    if (i == 0 && j == 0) entry = std::sin(PI * (s1 / 2.0 + s2));
    else if (i == 0 && j == 1) entry = std::cos(PI * s1 / 2.0);
    else if (i == 1 && j == 0) entry = std::sin(PI * s1 / 2.0);
    else entry = std::cos(PI * (s1 / 2.0 + s2));
    return pref * entry;
}

}  // namespace dz
