#include "dz/asym.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <map>
#include <set>
#include <stdexcept>

#include <boost/math/special_functions/gamma.hpp>

#include "dz/arith.hpp"
#include "dz/double_zeta.hpp"

namespace dz {

namespace {

// Kahan-compensated plain double accumulator
struct Acc {
    double s = 0, c = 0;
    void add(double v) {
        double y = v - c, t = s + y;
        c = (t - s) - y;
        s = t;
    }
};

}  // namespace

double central_L_quadratic(i64 D) {
    if (D == 1) {
        // chi_1 is the full zeta; the theta-split picks up pole terms, so
        // use the library value directly
        return std::riemann_zeta(0.5);
    }
    QuadraticCharacter chi{D};
    double f = (double)chi.conductor();
    int a = D < 0 ? 1 : 0;
    double alpha = 0.25 + 0.5 * a;
    // Gamma(alpha, pi n^2 / f) < 1e-13 Gamma(alpha) once pi n^2 / f > 34
    i64 nmax = (i64)std::ceil(std::sqrt(34.0 * f / M_PI)) + 1;
    Acc acc;
    for (i64 n = 1; n <= nmax; ++n) {
        int c = chi.value(n);
        if (c == 0) continue;
        double x = M_PI * (double)n * (double)n / f;
        acc.add((double)c / std::sqrt((double)n) *
                boost::math::tgamma(alpha, x));
    }
    return 2.0 / std::tgamma(alpha) * acc.s;
}

SumSeries partial_sum_H(i64 x, const OmegaS& omega, const EvalConfig& cfg) {
    (void)cfg;
    SumSeries out;
    if (x < 1) return out;
    // ascending geometric grid x 2^{-k}, deduplicated
    std::set<i64> grid;
    for (i64 g = x; g >= 1; g /= 2) grid.insert(g);
    auto support = enumerate_N(omega, x);
    std::sort(support.begin(), support.end(),
              [](const CohenValue& a, const CohenValue& b) { return a.N < b.N; });
    std::map<i64, double> lcache;  // D -> L(1/2, chi_D)
    Acc acc;
    size_t idx = 0;
    for (i64 g : grid) {
        for (; idx < support.size() && support[idx].N <= g; ++idx) {
            const CohenValue& cv = support[idx];
            auto found = lcache.find(cv.D);
            if (found == lcache.end())
                found = lcache.emplace(cv.D, central_L_quadratic(cv.D)).first;
            QuadraticCharacter chi{cv.D};
            DivisorData dd = divisor_data(cv.f);
            Acc dsum;
            for (size_t i = 0; i < dd.divisors.size(); ++i) {
                i64 u = dd.divisors[i];
                if (dd.mu[i] == 0 || chi.value(u) == 0) continue;
                i64 quot = cv.f / u;
                dsum.add((double)dd.mu[i] * (double)chi.value(u) /
                         std::sqrt((double)u) *
                         (double)divisor_data(quot).divisors.size());
            }
            double h = found->second * dsum.s;
            acc.add(h);
            out.terms++;
            if (h < 0) out.negative_terms++;
            out.numeric_error += 1e-10 * std::abs(dsum.s);
        }
        out.checkpoints.emplace_back((double)g, acc.s);
    }
    return out;
}

FitResult fit_asymptotic(const SumSeries& series) {
    const auto& cp = series.checkpoints;
    if (cp.size() < 8)
        throw std::invalid_argument("fit_asymptotic: need >= 8 checkpoints");
    if (cp.back().first < 100.0 * cp.front().first)
        throw std::invalid_argument("fit_asymptotic: need >= 2 decades of x");
    size_t lo = cp.size() / 2;
    // normal equations for the basis (x log x, x)
    double m11 = 0, m12 = 0, m22 = 0, v1 = 0, v2 = 0;
    for (size_t i = lo; i < cp.size(); ++i) {
        double x = cp[i].first, y = cp[i].second;
        double b1 = x * std::log(x), b2 = x;
        m11 += b1 * b1;
        m12 += b1 * b2;
        m22 += b2 * b2;
        v1 += b1 * y;
        v2 += b2 * y;
    }
    double det = m11 * m22 - m12 * m12;
    if (!(std::abs(det) > 1e-12 * m11 * m22))
        throw std::invalid_argument("fit_asymptotic: degenerate design matrix");
    FitResult fit;
    fit.A = (m22 * v1 - m12 * v2) / det;
    fit.B = (m11 * v2 - m12 * v1) / det;
    for (auto& [x, y] : cp)
        fit.residuals.emplace_back(x, y - fit.A * x * std::log(x) - fit.B * x);
    // Exponent probe. A log-log slope of the two-parameter residuals is
    // biased by projection leakage (a planted x^0.9 is nearly collinear with
    // x over the fitted range and gets partially absorbed into B), so scan a
    // third basis element x^theta over all checkpoints and report the theta
    // with the smallest residual sum of squares. Falls back to the log-log
    // slope when the extra term never helps (already-exact model).
    double sse2 = 0;
    for (auto& [x, r] : fit.residuals) sse2 += r * r;
    double best_theta = 0.0, best_sse = sse2;
    for (int k = 2; k <= 98; ++k) {
        double theta = 0.01 * k;
        double m[3][3] = {{0}}, v[3] = {0};
        for (auto& [x, y] : cp) {
            double b[3] = {x * std::log(x), x, std::pow(x, theta)};
            for (int i = 0; i < 3; ++i) {
                for (int j = 0; j < 3; ++j) m[i][j] += b[i] * b[j];
                v[i] += b[i] * y;
            }
        }
        // Gaussian elimination with partial pivoting
        bool singular = false;
        for (int c = 0; c < 3 && !singular; ++c) {
            int piv = c;
            for (int r = c + 1; r < 3; ++r)
                if (std::abs(m[r][c]) > std::abs(m[piv][c])) piv = r;
            if (m[piv][c] == 0.0) { singular = true; break; }
            std::swap(m[c], m[piv]);
            std::swap(v[c], v[piv]);
            for (int r = 0; r < 3; ++r) {
                if (r == c) continue;
                double fmul = m[r][c] / m[c][c];
                for (int cc = c; cc < 3; ++cc) m[r][cc] -= fmul * m[c][cc];
                v[r] -= fmul * v[c];
            }
        }
        if (singular) continue;
        double coef[3];
        for (int i = 0; i < 3; ++i) coef[i] = v[i] / m[i][i];
        double sse = 0;
        for (auto& [x, y] : cp) {
            double r = y - coef[0] * x * std::log(x) - coef[1] * x -
                       coef[2] * std::pow(x, theta);
            sse += r * r;
        }
        if (sse < best_sse) {
            best_sse = sse;
            best_theta = theta;
        }
    }
    // adopt the scanned exponent only when the extra term is genuinely
    // explanatory (a real power-law residual drives the RSS to ~0); an
    // oscillating residual gains a few percent at a spurious theta and is
    // better summarized by the log-log slope below
    if (best_theta > 0.0 && best_sse < 0.1 * sse2) {
        fit.exponent_estimate = best_theta;
    } else {
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        i64 n = 0;
        for (auto& [x, r] : fit.residuals) {
            if (r == 0.0) continue;
            double lx = std::log(x), ly = std::log(std::abs(r));
            sx += lx;
            sy += ly;
            sxx += lx * lx;
            sxy += lx * ly;
            ++n;
        }
        if (n >= 2 && sxx * n - sx * sx > 0)
            fit.exponent_estimate = (n * sxy - sx * sy) / (n * sxx - sx * sx);
    }
    return fit;
}

void emit_csv(const SumSeries& series, const FitResult& fit,
              const std::string& path) {
    FILE* fp = std::fopen(path.c_str(), "w");
    if (!fp) throw std::runtime_error("emit_csv: cannot open " + path);
    std::fprintf(fp, "x,sum,model,residual\n");
    for (size_t i = 0; i < series.checkpoints.size(); ++i) {
        auto& [x, y] = series.checkpoints[i];
        double model = fit.A * x * std::log(x) + fit.B * x;
        std::fprintf(fp, "%.17g,%.17g,%.17g,%.17g\n", x, y, model,
                     fit.residuals[i].second);
    }
    if (std::fclose(fp) != 0) throw std::runtime_error("emit_csv: close failed");
}

}  // namespace dz
