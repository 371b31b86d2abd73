#include "dz/lfun.hpp"

#include <cmath>
#include <stdexcept>

namespace dz {

namespace {

// B_{2k}/(2k)! as doubles for k = 1..30 (more than the allowed order).
const double* b2k_over_fact() {
    static double tab[31];
    static bool init = false;
    if (!init) {
        for (int k = 1; k <= 30; ++k) {
            BigRat b = bernoulli_number(2 * k);
            BigRat f = 1;
            for (int i = 2; i <= 2 * k; ++i) f *= i;
            tab[k] = (double)(b / f);
        }
        init = true;
    }
    return tab;
}

// digamma by the same Euler-Maclaurin scheme; used for L(1, chi) where the
// per-term Hurwitz poles cancel against sum chi(a) = 0:
//   L(1, chi) = -(1/f) sum_a chi(a) psi(a/f).
double digamma(double x) {
    const double* B = b2k_over_fact();
    double acc = 0;
    int M = (int)std::ceil(std::max(0.0, 21.0 - x));
    for (int n = 0; n < M; ++n) acc -= 1.0 / (x + n);
    double N = x + M;
    acc += std::log(N) - 0.5 / N;
    // psi(N) tail: - sum B_{2k} / (2k N^{2k}); B[] stores B_{2k}/(2k)!
    double fact = 1, Np = 1;
    for (int k = 1; k <= 8; ++k) {
        fact *= (2.0 * k - 1.0) * (2.0 * k);
        Np *= N * N;
        acc -= B[k] * (fact / (2.0 * k)) / Np;
    }
    return acc;
}

}  // namespace

HurwitzValue hurwitz_zeta(cplx s, double x, const EvalConfig& cfg,
                          bool want_deriv) {
    if (s == cplx(1.0, 0.0))
        throw std::invalid_argument("hurwitz_zeta: pole at s = 1");
    int K = cfg.euler_maclaurin_order;
    if (K < 2 || K > 30) throw std::invalid_argument("hurwitz_zeta: bad order");
    const double* B = b2k_over_fact();
    // s a non-positive integer: the correction series terminates exactly once
    // the Pochhammer product crosses zero, for any cutoff, so take M = 0 and
    // avoid the cancellation of large powers that a big cutoff would cause
    // (the result is the Bernoulli polynomial value -B_{n+1}(x)/(n+1)).
    if (!want_deriv && s.imag() == 0.0 && s.real() <= 0.0 &&
        s.real() == std::floor(s.real())) {
        int n = (int)(-s.real());
        cplx val = std::pow(x, (double)(n + 1)) / (s - 1.0) +
                   0.5 * std::pow(x, (double)n);
        double poch = s.real();
        double xpow = std::pow(x, (double)(n - 1));
        for (int k = 1; 2 * k - 2 <= n; ++k) {
            val += B[k] * poch * xpow;
            poch *= (s.real() + 2.0 * k - 1.0) * (s.real() + 2.0 * k);
            xpow /= x * x;
        }
        return {val, cplx(0, 0), 0.0};
    }
    double sigma = s.real();
    // shift count: the asymptotic tail needs N = M + x comfortably larger
    // than (|s| + 2K)/(2 pi); start from a generous default and grow if the
    // remainder estimate misses the target.
    double need = std::max({10.0, (std::abs(s) + 2.0 * K) / 4.0,
                            2.0 - sigma + 1.0});
    i64 M = (i64)std::ceil(std::max(0.0, need - x)) + 1;
    for (;;) {
        if (M > cfg.max_terms)
            throw std::runtime_error("hurwitz_zeta: max_terms exceeded");
        double N = M + x;
        cplx val = 0, dval = 0;
        for (i64 n = 0; n < M; ++n) {
            double base = n + x;
            cplx t = std::pow(base, -s);
            val += t;
            if (want_deriv) dval -= std::log(base) * t;
        }
        double logN = std::log(N);
        cplx Npows = std::pow(N, -s);          // N^{-s}
        cplx Npow1s = Npows * N;               // N^{1-s}
        // (M+x)^{1-s}/(s-1) + (M+x)^{-s}/2
        val += Npow1s / (s - 1.0) + 0.5 * Npows;
        if (want_deriv) {
            dval += Npow1s * (-logN / (s - 1.0) - 1.0 / ((s - 1.0) * (s - 1.0)));
            dval += -0.5 * logN * Npows;
        }
        // correction terms: B_{2k}/(2k)! (s)_{2k-1} N^{-s-2k+1}
        cplx poch = s;                 // (s)_1
        cplx dpoch = 1.0;              // d/ds (s)_1
        cplx Npow = Npows / N;         // N^{-s-1}
        double last_mag = 0;
        for (int k = 1; k <= K; ++k) {
            cplx term = B[k] * poch * Npow;
            val += term;
            if (want_deriv)
                dval += B[k] * (dpoch * Npow - logN * poch * Npow);
            last_mag = std::abs(term);
            if (k < K) {
                // extend the Pochhammer product by (s+2k-1)(s+2k)
                cplx f1 = s + (double)(2 * k - 1), f2 = s + (double)(2 * k);
                dpoch = dpoch * f1 * f2 + poch * (f1 + f2);
                poch = poch * f1 * f2;
                Npow /= N * N;
            }
        }
        // remainder of the alternating-type asymptotic series: comparable to
        // the first omitted term; estimate it from the last computed one by
        // the ratio |s+2K-1||s+2K| B_{2K+2}/B_{2K} ... /(N^2 (2K+1)(2K+2)).
        double ratio = std::abs(s + (double)(2 * K - 1)) *
                       std::abs(s + (double)(2 * K)) /
                       (4.0 * 9.8696 * N * N);  // (2 pi N)^2 growth of B ratio
        double rem = last_mag * ratio / std::max(1e-12, 1.0 - std::min(0.9, ratio));
        if (rem <= cfg.target_abs_error) return {val, dval, rem};
        M *= 2;  // remainder not yet small enough: push the cutoff out
    }
}

double hurwitz_zeta_real(double s, double x, const EvalConfig& cfg) {
    if (s == 1.0) throw std::invalid_argument("hurwitz_zeta_real: pole");
    int K = cfg.euler_maclaurin_order;
    const double* B = b2k_over_fact();
    // fixed generous cutoff; for real s of moderate size the K-th term at
    // N >= 22 is far below 1e-13 already
    i64 M = (i64)std::ceil(std::max(0.0, 22.0 - x)) + 1;
    double N = M + x;
    double val = 0;
    if (s == 0.5) {
        for (i64 n = 0; n < M; ++n) val += 1.0 / std::sqrt(n + x);
    } else {
        for (i64 n = 0; n < M; ++n) val += std::pow(n + x, -s);
    }
    double Npows = std::pow(N, -s);
    val += Npows * N / (s - 1.0) + 0.5 * Npows;
    double poch = s;
    double Npow = Npows / N;
    for (int k = 1; k <= K; ++k) {
        val += B[k] * poch * Npow;
        if (k < K) {
            poch *= (s + 2.0 * k - 1.0) * (s + 2.0 * k);
            Npow /= N * N;
        }
    }
    return val;
}

cplx L_value(cplx s, const QuadraticCharacter& chi, const EvalConfig& cfg) {
    i64 f = chi.conductor();
    if (f == 1) {
        if (s == cplx(1.0, 0.0))
            throw std::invalid_argument("L_value: zeta pole at s = 1");
        return hurwitz_zeta(s, 1.0, cfg).value;
    }
    if (s == cplx(1.0, 0.0)) {
        // the 1/(s-1) poles of the Hurwitz terms cancel (sum chi(a) = 0),
        // leaving the digamma limit
        double acc = 0;
        for (i64 a = 1; a <= f; ++a) {
            int c = chi.value(a);
            if (c == 0) continue;
            acc -= c * digamma((double)a / (double)f);
        }
        return cplx(acc / (double)f, 0);
    }
    cplx acc = 0;
    for (i64 a = 1; a <= f; ++a) {
        int c = chi.value(a);
        if (c == 0) continue;
        acc += (double)c * hurwitz_zeta(s, (double)a / (double)f, cfg).value;
    }
    return acc * std::pow(cplx((double)f, 0), -s);
}

double L_value_real(double s, const QuadraticCharacter& chi,
                    const EvalConfig& cfg) {
    i64 f = chi.conductor();
    if (f == 1) {
        if (s == 1.0) throw std::invalid_argument("L_value_real: pole");
        return hurwitz_zeta_real(s, 1.0, cfg);
    }
    if (s == 1.0)
        return L_value(cplx(1.0, 0.0), chi, cfg).real();
    double acc = 0, comp = 0;  // Kahan over the conductor sum
    for (i64 a = 1; a <= f; ++a) {
        int c = chi.value(a);
        if (c == 0) continue;
        double t = c * hurwitz_zeta_real(s, (double)a / (double)f, cfg);
        double y = t - comp;
        double u = acc + y;
        comp = (u - acc) - y;
        acc = u;
    }
    return acc * std::pow((double)f, -s);
}

cplx L_partial(cplx s, const QuadraticCharacter& chi,
               const std::vector<Place>& S, const EvalConfig& cfg) {
    cplx val = L_value(s, chi, cfg);
    for (auto& v : S) {
        if (v.infinite()) continue;
        LocalQuadChar c = chi.local(v);
        if (c.ramified()) continue;
        double cp = (double)c.value_at_uniformizer();
        val *= 1.0 - cp * std::pow((double)v.p, -s);
    }
    return val;
}

cplx zeta_partial(cplx s, const std::vector<Place>& S, const EvalConfig& cfg) {
    return L_partial(s, QuadraticCharacter{1}, S, cfg);
}

BigRat L_nonpositive_exact(int n, const QuadraticCharacter& chi) {
    if (n < 1) throw std::invalid_argument("L_nonpositive_exact: n < 1");
    return -generalized_bernoulli(n, chi.D) / BigRat(n);
}

cplx L_derivative(cplx s, const QuadraticCharacter& chi, const EvalConfig& cfg) {
    i64 f = chi.conductor();
    if (f == 1) {
        if (s == cplx(1.0, 0.0))
            throw std::invalid_argument("L_derivative: pole at s = 1");
        return hurwitz_zeta(s, 1.0, cfg, true).deriv;
    }
    // L(s) = f^{-s} Sigma(s), so L' = f^{-s} (Sigma' - log f Sigma)
    cplx acc = 0, dacc = 0;
    for (i64 a = 1; a <= f; ++a) {
        int c = chi.value(a);
        if (c == 0) continue;
        auto h = hurwitz_zeta(s, (double)a / (double)f, cfg, true);
        acc += (double)c * h.value;
        dacc += (double)c * h.deriv;
    }
    double logf = std::log((double)f);
    return std::pow(cplx((double)f, 0), -s) * (dacc - logf * acc);
}

}  // namespace dz
