#include "dz/arith.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace dz {

// ---------------------------------------------------------------------------
// primality / factorization

namespace {

u64 mulmod(u64 a, u64 b, u64 m) {
    return (u64)((__uint128_t)a * b % m);
}

u64 powmod(u64 a, u64 e, u64 m) {
    u64 r = 1 % m;
    a %= m;
    while (e) {
        if (e & 1) r = mulmod(r, a, m);
        a = mulmod(a, a, m);
        e >>= 1;
    }
    return r;
}

}  // namespace

bool is_prime(i64 n) {
    if (n < 2) return false;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n % p == 0) return n == p;
    }
    // Deterministic Miller-Rabin below 3.3e24 with these bases; n < 2^63.
    u64 d = (u64)n - 1;
    int r = 0;
    while ((d & 1) == 0) { d >>= 1; ++r; }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL,
                  29ULL, 31ULL, 37ULL}) {
        u64 x = powmod(a, d, (u64)n);
        if (x == 1 || x == (u64)n - 1) continue;
        bool witness = true;
        for (int i = 0; i + 1 < r; ++i) {
            x = mulmod(x, x, (u64)n);
            if (x == (u64)n - 1) { witness = false; break; }
        }
        if (witness) return false;
    }
    return true;
}

namespace {

i64 pollard_rho(i64 n) {
    // Brent's cycle variant; n odd composite, not a prime power of small p.
    u64 un = (u64)n;
    for (u64 c = 1;; ++c) {
        u64 x = 2, y = 2, d = 1;
        auto f = [&](u64 v) { return (mulmod(v, v, un) + c) % un; };
        while (d == 1) {
            x = f(x);
            y = f(f(y));
            u64 diff = x > y ? x - y : y - x;
            d = std::gcd(diff, un);
        }
        if (d != un) return (i64)d;
    }
}

void factor_rec(i64 n, std::vector<i64>& primes) {
    if (n == 1) return;
    if (is_prime(n)) { primes.push_back(n); return; }
    i64 d = pollard_rho(n);
    factor_rec(d, primes);
    factor_rec(n / d, primes);
}

}  // namespace

std::vector<FactorExp> factorize(i64 n) {
    if (n <= 0) throw std::invalid_argument("factorize: n must be positive");
    std::vector<i64> primes;
    for (i64 p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47}) {
        while (n % p == 0) { primes.push_back(p); n /= p; }
    }
    if (n > 1) {
        if (n < 47 * 47) {
            primes.push_back(n);
        } else {
            factor_rec(n, primes);
        }
    }
    std::sort(primes.begin(), primes.end());
    std::vector<FactorExp> out;
    for (size_t i = 0; i < primes.size();) {
        size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        out.push_back({primes[i], (int)(j - i)});
        i = j;
    }
    return out;
}

int padic_valuation(i64 n, i64 p) {
    if (n == 0) throw std::invalid_argument("padic_valuation: n = 0");
    int v = 0;
    while (n % p == 0) { n /= p; ++v; }
    return v;
}

// ---------------------------------------------------------------------------
// Kronecker symbol

int kronecker(i64 a, i64 n) {
    if (n == 0) {
        if (a == 1 || a == -1) return 1;
        throw std::invalid_argument("kronecker: (a|0) defined only for a=+-1");
    }
    int sign = 1;
    if (n < 0) {
        if (a < 0) sign = -sign;
        n = -n;
    }
    // factor out 2 from n: (a|2) = 0, 1, -1 for a even, a = +-1 mod 8,
    // a = +-3 mod 8 respectively.
    while ((n & 1) == 0) {
        if ((a & 1) == 0) return 0;
        i64 r = a % 8;
        if (r < 0) r += 8;
        if (r == 3 || r == 5) sign = -sign;
        n >>= 1;
    }
    // Jacobi symbol (a|n) for odd n > 0 by binary reciprocity.
    // the Jacobi symbol only depends on a mod n, negative a included
    a %= n;
    if (a < 0) a += n;
    while (a != 0) {
        while ((a & 1) == 0) {
            a >>= 1;
            i64 r = n % 8;
            if (r == 3 || r == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

// ---------------------------------------------------------------------------
// Hilbert symbol

int hilbert_symbol(i64 a, i64 b, i64 v) {
    if (a == 0 || b == 0)
        throw std::invalid_argument("hilbert_symbol: zero argument");
    if (v == 0) {
        return (a < 0 && b < 0) ? -1 : 1;
    }
    i64 p = v;
    int alpha = padic_valuation(a, p);
    int beta = padic_valuation(b, p);
    i64 u = a, w = b;
    for (int i = 0; i < alpha; ++i) u /= p;
    for (int i = 0; i < beta; ++i) w /= p;
    if (p == 2) {
        auto eps = [](i64 x) { return (((x - 1) / 2) % 2 + 2) % 2; };    // (x-1)/2 mod 2
        auto omg = [](i64 x) { return (((x * x - 1) / 8) % 2 + 2) % 2; };// (x^2-1)/8 mod 2
        int e = (int)((eps(u) * eps(w) + alpha * omg(w) + beta * omg(u)) % 2);
        return e ? -1 : 1;
    }
    int e = (alpha * beta * (int)(((p - 1) / 2) % 2)) % 2;
    int s = e ? -1 : 1;
    if (beta % 2) s *= kronecker(u % p, p);
    if (alpha % 2) s *= kronecker(w % p, p);
    return s;
}

int hilbert_symbol_rat(i64 an, i64 ad, i64 bn, i64 bd, i64 v) {
    if (an == 0 || ad == 0 || bn == 0 || bd == 0)
        throw std::invalid_argument("hilbert_symbol_rat: zero argument");
    // (x, y)_v depends only on square classes: num/den ~ num*den.
    return hilbert_symbol(an * ad, bn * bd, v);
}

// ---------------------------------------------------------------------------
// discriminants

namespace {

bool squarefree(i64 n) {
    if (n < 0) n = -n;
    if (n == 0) return false;
    for (auto& f : factorize(n))
        if (f.e > 1) return false;
    return true;
}

}  // namespace

bool is_fundamental_discriminant(i64 D) {
    if (D == 0 || D == 1) return false;
    i64 r = ((D % 4) + 4) % 4;
    if (r == 1) return squarefree(D);
    if (r == 0) {
        i64 m = D / 4;
        i64 mr = ((m % 4) + 4) % 4;
        return (mr == 2 || mr == 3) && squarefree(m);
    }
    return false;
}

std::vector<i64> enumerate_discriminants(i64 bound) {
    std::vector<i64> out;
    if (bound >= 1) out.push_back(1);
    for (i64 ad = 2; ad <= bound; ++ad) {
        if (is_fundamental_discriminant(ad)) out.push_back(ad);
        if (is_fundamental_discriminant(-ad)) out.push_back(-ad);
    }
    return out;  // already ordered by |D| with the positive one first
}

// ---------------------------------------------------------------------------
// divisor data

DivisorData divisor_data(i64 n) {
    if (n <= 0) throw std::invalid_argument("divisor_data: n must be positive");
    auto fac = factorize(n);
    DivisorData dd;
    dd.n = n;
    dd.divisors = {1};
    dd.mu = {1};
    for (auto& f : fac) {
        size_t old = dd.divisors.size();
        i64 pk = 1;
        for (int e = 1; e <= f.e; ++e) {
            pk *= f.p;
            for (size_t i = 0; i < old; ++i) {
                dd.divisors.push_back(dd.divisors[i] * pk);
                dd.mu.push_back(e == 1 ? -dd.mu[i] : 0);
            }
        }
    }
    // sort divisors (and mu alongside)
    std::vector<size_t> idx(dd.divisors.size());
    std::iota(idx.begin(), idx.end(), 0);
    std::sort(idx.begin(), idx.end(), [&](size_t i, size_t j) {
        return dd.divisors[i] < dd.divisors[j];
    });
    DivisorData sorted;
    sorted.n = n;
    for (size_t i : idx) {
        sorted.divisors.push_back(dd.divisors[i]);
        sorted.mu.push_back(dd.mu[i]);
    }
    return sorted;
}

BigInt sigma_k(i64 n, int k) {
    BigInt s = 0;
    for (i64 d : divisor_data(n).divisors) {
        BigInt dk = 1;
        for (int i = 0; i < k; ++i) dk *= d;
        s += dk;
    }
    return s;
}

int moebius(i64 n) {
    if (n <= 0) throw std::invalid_argument("moebius: n must be positive");
    int m = 1;
    for (auto& f : factorize(n)) {
        if (f.e > 1) return 0;
        m = -m;
    }
    return m;
}

// ---------------------------------------------------------------------------
// Bernoulli

namespace {

std::vector<BigRat> g_bernoulli_cache;
std::mutex g_bernoulli_mutex;

BigInt binomial(int n, int k) {
    BigInt r = 1;
    for (int i = 0; i < k; ++i) {
        r *= (n - i);
        r /= (i + 1);
    }
    return r;
}

}  // namespace

BigRat bernoulli_number(int n) {
    if (n < 0) throw std::invalid_argument("bernoulli_number: n < 0");
    std::lock_guard<std::mutex> lock(g_bernoulli_mutex);
    // recurrence sum_{k=0}^{n} C(n+1,k) B_k = 0 for n >= 1, B_0 = 1.
    while ((int)g_bernoulli_cache.size() <= n) {
        int m = (int)g_bernoulli_cache.size();
        if (m == 0) {
            g_bernoulli_cache.push_back(BigRat(1));
            continue;
        }
        BigRat acc = 0;
        for (int k = 0; k < m; ++k)
            acc += BigRat(binomial(m + 1, k)) * g_bernoulli_cache[k];
        g_bernoulli_cache.push_back(-acc / BigRat(m + 1));
    }
    return g_bernoulli_cache[n];
}

std::vector<BigRat> bernoulli_poly(int n) {
    // B_n(x) = sum_k C(n,k) B_{n-k} x^k
    std::vector<BigRat> c(n + 1);
    for (int k = 0; k <= n; ++k)
        c[k] = BigRat(binomial(n, k)) * bernoulli_number(n - k);
    return c;
}

BigRat bernoulli_poly_at(int n, const BigRat& x) {
    auto c = bernoulli_poly(n);
    BigRat acc = 0;
    for (int k = n; k >= 0; --k) acc = acc * x + c[k];
    return acc;
}

BigRat generalized_bernoulli(int n, i64 D) {
    if (n < 1) throw std::invalid_argument("generalized_bernoulli: n < 1");
    i64 f = D == 1 ? 1 : (D < 0 ? -D : D);
    BigRat acc = 0;
    for (i64 a = 1; a <= f; ++a) {
        int chi = (D == 1) ? 1 : kronecker(D, a);
        if (chi == 0) continue;
        acc += BigRat(chi) * bernoulli_poly_at(n, BigRat(a, f));
    }
    // f^{n-1} prefactor
    BigInt fp = 1;
    for (int i = 0; i + 1 < n; ++i) fp *= f;
    return acc * BigRat(fp);
}

}  // namespace dz
