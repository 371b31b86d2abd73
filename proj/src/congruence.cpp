#include "dz/congruence.hpp"

#include <cmath>
#include <mutex>
#include <stdexcept>

#include "dz/parallel.hpp"

namespace dz {

// ---------------------------------------------------------------------------
// root counts

namespace {

// smallest-prime-factor sieve, grown on demand (sizes here stay small: the
// acceptance runs need m <= 4 * m_cut = 8000 and the divisor tail sieve a
// few million).
std::vector<int32_t> g_spf;
std::mutex g_spf_mutex;

void ensure_spf(i64 bound) {
    std::lock_guard<std::mutex> lk(g_spf_mutex);
    if ((i64)g_spf.size() > bound) return;
    i64 n = 2;
    while (n <= bound) n *= 2;  // grow geometrically, avoid re-sieving often
    ++n;
    g_spf.assign((size_t)n, 0);
    for (i64 i = 2; i < n; ++i) {
        if (g_spf[(size_t)i] == 0) {
            for (i64 j = i; j < n; j += i)
                if (g_spf[(size_t)j] == 0) g_spf[(size_t)j] = (int32_t)i;
        }
    }
}

// roots of x^2 = r mod p^k for a single prime power, r already reduced to
// [0, p^k).
i64 count_roots_pp(i64 p, int k, i64 pk, i64 r) {
    if (r == 0) {
        // x must be divisible by p^{ceil(k/2)}
        i64 c = 1;
        for (int i = 0; i < k / 2; ++i) c *= p;
        return c;
    }
    int v = 0;
    i64 u = r;
    while (u % p == 0) { u /= p; ++v; }
    if (v & 1) return 0;
    i64 lift = 1;  // p^{v/2}: each solution mod p^{k-v} spreads into p^{v/2}
    for (int i = 0; i < v / 2; ++i) lift *= p;
    int j = k - v;  // solve y^2 = u mod p^j, u a unit
    if (p == 2) {
        if (j == 1) return lift;                       // y odd, unique class
        if (j == 2) return u % 4 == 1 ? 2 * lift : 0;
        return u % 8 == 1 ? 4 * lift : 0;
    }
    return kronecker(u % p, p) == 1 ? 2 * lift : 0;
}

}  // namespace

i64 count_roots(i64 m, i64 n) {
    if (m < 1) throw std::invalid_argument("count_roots: m < 1");
    if (m == 1) return 1;
    i64 total = 1;
    i64 rest = m;
    auto handle = [&](i64 p) {
        int k = 0;
        i64 pk = 1;
        while (rest % p == 0) { rest /= p; pk *= p; ++k; }
        i64 r = n % pk;
        if (r < 0) r += pk;
        total *= count_roots_pp(p, k, pk, r);
    };
    if (m < (i64)g_spf.size()) {
        while (rest > 1) handle(g_spf[(size_t)rest]);
    } else if (m <= 1 << 20) {
        ensure_spf(std::max<i64>(m, 1 << 14));
        while (rest > 1) handle(g_spf[(size_t)rest]);
    } else {
        for (auto& f : factorize(m)) {
            if (total == 0) break;
            if (rest > 1) handle(f.p);
        }
    }
    return total;
}

i64 count_roots_brute(i64 m, i64 n) {
    i64 r = n % m;
    if (r < 0) r += m;
    i64 cnt = 0;
    for (i64 x = 0; x < m; ++x)
        if ((x * x) % m == r) ++cnt;
    return cnt;
}

// ---------------------------------------------------------------------------
// truncation tails
//
// Elementary bound used throughout, with t(n) = largest square dividing n:
//     A(m, n) <= 2 * 2^{omega(m)} * sqrt(t(n))
// Per prime power p^k || m with v = v_p(n): the count is at most
// 2 p^{floor(min(v,k)/2)} for odd p and 4 * 2^{floor(v/2)} at p = 2, and
// p^{floor(min(v,k)/2)} <= sqrt(p-part of t(n)).  Summing over a full period
// of n would be sharper but this is enough for the guard region
// Re(s_i) > 3/2, where
//     sum_n sqrt(t(n)) n^{-q}  <= zeta(q) zeta(2q - 1)          (q > 1)
//     sum_m 2^{omega(m)} m^{-q} <= sum_m d(m) m^{-q}.
// The m-tail beyond the cut is summed numerically with a sieved divisor
// table up to B and closed beyond B with the explicit bound
// d(m) <= m^{1.066/log log m} (valid for m >= 3).

namespace {

double zeta_upper(double q) {
    // crude but certified upper bound for zeta(q), q > 1
    double s = 0;
    for (int n = 1; n <= 64; ++n) s += std::pow((double)n, -q);
    s += std::pow(64.0, 1.0 - q) / (q - 1.0);
    return s;
}

// sum_{n > N} sqrt(t(n)) n^{-q}, q > 1; 0 never returned (upper bound)
double tail_sqrt_square_part(i64 N, double q) {
    double total = 0;
    i64 k = 1;
    for (; k * k <= N; ++k) {
        double T = std::floor((double)N / (k * (double)k));
        // sum over n > N with k^2 | n of n^{-q} <= k^{-2q} * tail over j > T
        total += std::pow((double)k, -2.0 * q) *
                 (std::pow(T, 1.0 - q) / (q - 1.0));
    }
    // k > sqrt(N): take the whole zeta(q) block
    total += zeta_upper(q) * std::pow((double)k - 1.0, 2.0 - 2.0 * q) /
             (2.0 * q - 2.0);
    return total;
}

// divisor-count sieve, cached
std::vector<uint16_t> g_dtab;
std::mutex g_dtab_mutex;

void ensure_dtab(i64 bound) {
    std::lock_guard<std::mutex> lk(g_dtab_mutex);
    if ((i64)g_dtab.size() > bound) return;
    g_dtab.assign((size_t)bound + 1, 0);
    for (i64 d = 1; d <= bound; ++d)
        for (i64 j = d; j <= bound; j += d) ++g_dtab[(size_t)j];
}

// sum_{m > M} d(m) m^{-q}, q > 3/2 assumed
double tail_divisor(i64 M, double q) {
    const i64 B = std::max<i64>(4 * M, 1 << 21);
    ensure_dtab(B);
    double s = 0;
    for (i64 m = M + 1; m <= B; ++m)
        s += g_dtab[(size_t)m] * std::pow((double)m, -q);
    // beyond B: d(m) <= m^eps with eps = 1.066/log log B (Nicolas-Robin)
    double eps = 1.066 / std::log(std::log((double)B));
    if (q - eps <= 1.0)
        throw std::runtime_error("tail_divisor: exponent too small for bound");
    s += std::pow((double)B, 1.0 + eps - q) / (q - eps - 1.0);
    return s;
}

// sum_{m <= M} d(m) m^{-q}
double head_divisor(i64 M, double q) {
    ensure_dtab(M);
    double s = 0;
    for (i64 m = 1; m <= M; ++m)
        s += g_dtab[(size_t)m] * std::pow((double)m, -q);
    return s;
}

}  // namespace

XiDirectResult xi_direct(XiVariant variant, ComplexPair s,
                         const SeriesTruncation& trunc, int threads) {
    double q1 = s.s1.real(), q2 = s.s2.real();
    if (q1 <= 1.5 || q2 <= 1.5)
        throw std::invalid_argument(
            "xi_direct: need Re(s1) > 3/2 and Re(s2) > 3/2 for certified tails");
    bool star = variant == XiVariant::xi1star || variant == XiVariant::xi2star;
    int nsign = (variant == XiVariant::xi1 || variant == XiVariant::xi1star)
                    ? 1 : -1;
    i64 M = trunc.m_cut, N = trunc.n_cut;

    // n-weights: n^{-s2} or (4n)^{-s2}
    std::vector<cplx> npow((size_t)N + 1);
    for (i64 n = 1; n <= N; ++n) {
        double base = star ? 4.0 * n : (double)n;
        npow[(size_t)n] = std::pow(cplx(base, 0), -s.s2);
    }
    ensure_spf(star ? M : 4 * M);

    struct BlockOut {
        cplx sum{0, 0};
        i64 terms = 0;
    };
    auto per_block = [&](i64 lo, i64 hi) {  // per m-block
        BlockOut out;
        KahanC acc;
        for (i64 m = lo; m < hi; ++m) {
            i64 mod = star ? m : 4 * m;
            cplx mpow = std::pow(cplx((double)m, 0), -s.s1);
            KahanC inner;
            i64 nz = 0;
            for (i64 n = 1; n <= N; ++n) {
                i64 A = count_roots(mod, nsign > 0 ? n : -n);
                if (A == 0) continue;
                inner.add((double)A * npow[(size_t)n]);
                ++nz;
            }
            acc.add(mpow * inner.sum);
            out.terms += nz;
        }
        out.sum = acc.sum;
        return out;
    };
    auto blocks = run_blocks<BlockOut>(1, M + 1, 64, threads, per_block);
    KahanC total;
    i64 terms = 0;
    for (auto& b : blocks) {
        total.add(b.sum);
        terms += b.terms;
    }

    // certified tails; the xi_i variants carry A(4m, n) so the per-m bound
    // picks up one extra factor 2 from the prime 2, and the star variants a
    // factor 4^{-q2} from the (4n) weight.
    double afac = star ? 2.0 : 4.0;
    double nfac = star ? std::pow(4.0, -q2) : 1.0;
    double n_sum_full = zeta_upper(q2) * zeta_upper(2.0 * q2 - 1.0);
    double tail_m = afac * nfac * tail_divisor(M, q1) * n_sum_full;
    double tail_n = afac * nfac * head_divisor(M, q1) *
                    tail_sqrt_square_part(N, q2);

    // Sharper n-tail: the residue classes hit by squares give the window
    // count sum_{N < n <= x} A(mod, +-n) <= (x - N) + mod (each of the `mod`
    // roots x' lands in the window at most ceil((x-N)/mod) times), so by
    // partial summation
    //     sum_{n > N} A(mod, +-n) n^{-q2} <= N^{1-q2}/(q2-1) + mod N^{-q2}.
    auto ntail_per_m = [&](i64 m) {
        double mod = star ? (double)m : 4.0 * m;
        return nfac * (std::pow((double)N, 1.0 - q2) / (q2 - 1.0) +
                       mod * std::pow((double)N, -q2));
    };
    {
        double s1sum = 0;
        for (i64 m = 1; m <= M; ++m)
            s1sum += std::pow((double)m, -q1) * ntail_per_m(m);
        tail_n = std::min(tail_n, s1sum);
    }

    // Sharper m-tail: evaluate the remainder head M < m <= 4M exactly (same
    // inner sums), bound its own n > N piece as above, and only fall back to
    // the divisor-function majorant beyond 4M.
    {
        const i64 Bext = 4 * M;
        ensure_spf(star ? Bext : 4 * Bext);
        auto ext_blocks =
            run_blocks<BlockOut>(M + 1, Bext + 1, 64, threads, per_block);
        KahanC head;
        for (auto& b : ext_blocks) head.add(b.sum);
        double head_ntail = 0;
        for (i64 m = M + 1; m <= Bext; ++m)
            head_ntail += std::pow((double)m, -q1) * ntail_per_m(m);
        double far = afac * nfac * tail_divisor(Bext, q1) * n_sum_full;
        tail_m = std::min(tail_m, std::abs(head.sum) + head_ntail + far);
    }
    return {total.sum, tail_m + tail_n, terms};
}

XiDirectResult xi_S_infty(int delta, ComplexPair s,
                          const SeriesTruncation& trunc, int threads) {
    auto r = xi_direct(delta > 0 ? XiVariant::xi1star : XiVariant::xi2star, s,
                       trunc, threads);
    cplx pref = std::pow(cplx(2, 0), 2.0 * s.s2 - 1.0);
    r.value *= pref;
    r.tail *= std::abs(pref);
    return r;
}

}  // namespace dz
