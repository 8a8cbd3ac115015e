#include "ffhyper/rcid.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

namespace ffh {

int chi_m4(long long n) {
    long long m = ((n % 4) + 4) % 4;
    if (m == 1) return 1;
    if (m == 3) return -1;
    return 0;
}

GammaHalf gamma_half(long long m) {
    if (m % 2 == 0) {
        if (m <= 0) throw std::domain_error("gamma pole");
        return {factorial(m / 2 - 1), 0};
    }
    Rat c = 1;
    long long t = m;
    while (t > 1) {
        t -= 2;
        c *= Rat(t, 2);
    }
    while (t < 1) {
        c /= Rat(t, 2);
        t += 2;
    }
    return {c, 1};
}

Rat gamma_ratio(const Rat& x, long long mu) {
    Rat out = 1;
    for (long long i = 1; i <= mu; ++i) out *= x - i;
    return out;
}

Rat factorial(long long n) {
    if (n < 0) return 0;
    Rat f = 1;
    for (long long i = 2; i <= n; ++i) f *= i;
    return f;
}

Rat inv_factorial(long long n) {
    if (n < 0) return 0;
    return 1 / factorial(n);
}

Rat genbinom(const Rat& x, long long n) {
    if (n < 0) return 0;
    Rat out = 1;
    for (long long i = 0; i < n; ++i) out *= (x - i) / (i + 1);
    return out;
}

namespace {

Rat rpow(const Rat& x, long long e) {
    if (e < 0) return 1 / rpow(x, -e);
    Rat out = 1;
    Rat b = x;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

}  // namespace

Rat pab(long long a, const Rat& b, const Rat& X, const Rat& Y) {
    if (a < 2) throw std::domain_error("pab: a < 2");
    Rat out = 0;
    for (long long j = 0; j <= a - 2; ++j)
        out += genbinom(j + b - 2, j) * rpow(X, j) * rpow(X + Y, a - j - 2);
    return out;
}

Rat pab_alt(long long a, const Rat& b, const Rat& X, const Rat& Y) {
    Rat out = 0;
    for (long long j = 0; j <= a - 2; ++j)
        out += genbinom(a + b - 3, a - 2 - j) * genbinom(j + b - 2, j) *
               rpow(X + Y, a - 2 - j) * rpow(-Y, j);
    return out;
}

std::pair<Rat, Rat> comb_lemma(long long nu, long long j) {
    Rat lhs = 0;
    for (long long mu = 0; mu <= nu; ++mu) {
        Rat mult = factorial(4 * nu - 2 * mu + 1) *
                   inv_factorial(2 * nu - mu) * inv_factorial(mu) *
                   inv_factorial(2 * nu - 2 * mu + 1);
        Rat term = mult / (Rat(mu - j) + Rat(1, 2));
        lhs += (mu % 2 == 0) ? term : -term;
    }
    Rat rhs = rpow(2, 4 * nu + 2) * factorial(2 * nu - j + 1) * factorial(j) *
              inv_factorial(2 * j) * inv_factorial(2 * nu - 2 * j + 2);
    if (j % 2 != 0) rhs = -rhs;
    return {lhs, rhs};
}

std::pair<bool, bool> comb_lemma2_checks(long long nu, long long mu,
                                         long long j) {
    Rat half(1, 2);
    Rat l1 = genbinom(nu + half, nu - mu) * genbinom(nu + half, mu);
    Rat r1 = rpow(2, -2 * nu - 1) * genbinom(Rat(2 * nu + 1), nu + 1) *
             genbinom(Rat(2 * nu + 2), 2 * mu + 1);

    Rat l2 = genbinom(2 * nu - mu + half, 2 * nu + 1 - j) *
             genbinom(j - mu - Rat(3, 2), j);
    Rat r2 = rpow(2, -4 * nu - 2) * factorial(4 * nu - 2 * mu + 1) *
             factorial(2 * mu + 1) * inv_factorial(2 * nu - mu) *
             inv_factorial(mu) * inv_factorial(j) *
             inv_factorial(2 * nu - j + 1) / (Rat(j - mu) - half);
    if (mu % 2 == 0) r2 = -r2;
    return {l1 == r1, l2 == r2};
}

bool prop_poly_identity_check(long long nu, long long u, long long v) {
    if (u <= v || v < 1) throw std::domain_error("need u > v >= 1");
    Rat m = u * u, n = v * v;
    Rat half(1, 2);
    Rat lhs = rpow(2, -2 * nu - 1) * genbinom(Rat(2 * nu + 1), nu + 1) *
              rpow(Rat(u - v), 2 * nu + 2) / u;
    Rat rhs = 0;
    for (long long mu = 0; mu <= nu; ++mu) {
        // m^{mu-2nu-1/2} = u^{2mu-4nu-1}, n^{1/2+mu} = v^{2mu+1}
        Rat inner = rpow(Rat(u), 2 * mu - 4 * nu - 1) *
                        pab(3 + 2 * nu, half - mu, m - n, n) -
                    rpow(Rat(v), 2 * mu + 1);
        rhs += genbinom(half + nu, nu - mu) * genbinom(half + nu, mu) *
               rpow(m, nu - mu) * inner;
    }
    return lhs == rhs;
}

Rat cohen_vanishing(long long n) {
    Rat out = 0;
    for (long long t = 0; t <= n; ++t) {
        Rat term = factorial(2 * n - t) * inv_factorial(t) *
                   inv_factorial(n - t) * inv_factorial(n + 1 - t);
        out += (t % 2 == 0) ? term : -term;
    }
    return out;
}

GammaHalf kappa(int k2, int l2, long long nu) {
    if (k2 != 3 || (l2 != 1 && l2 != 3))
        throw std::domain_error("kappa: unsupported weights");
    Rat k(k2, 2), l(l2, 2);
    Rat sum = 0;
    int half = 0;
    for (long long mu = 0; mu <= nu; ++mu) {
        GammaHalf gl = gamma_half(l2 + 4 * nu - 2 * mu);  // Gamma(l + 2nu - mu)
        half = gl.half;                                   // odd l2: always 1
        sum += gamma_ratio(2 - k, mu) * gl.coeff * genbinom(k + nu - 1, nu - mu) *
               genbinom(l + nu - 1, mu);
    }
    // (k + l + 2nu - 2)! is an integer factorial for k2 + l2 even
    Rat pre = inv_factorial((k2 + l2 - 4) / 2 + 2 * nu) / (k - 1);
    return {pre * sum, half};
}

Rat mertens_br_coefficient(long long r, long long nu,
                           const std::vector<Rat>& cf_minus,
                           const std::vector<Rat>& ag) {
    // k = l = 3/2; -Gamma(1-k) = 2 sqrt(pi), cancelled by the sqrt(pi)
    // scaling of cf_minus.
    Rat half(1, 2);
    Rat out = 0;
    for (long long n = 1; n < (long long)cf_minus.size(); ++n) {
        if (cf_minus[n] == 0) continue;
        long long m = n + r;
        if (m >= (long long)ag.size() || ag[m] == 0) continue;
        long long u = (long long)std::llround(std::sqrt((double)m));
        long long v = (long long)std::llround(std::sqrt((double)n));
        assert(u * u == m && v * v == n);
        Rat inner = 0;
        for (long long mu = 0; mu <= nu; ++mu) {
            // m^{mu - 2nu - 1/2} = u^{2mu - 4nu - 1}; n^{1/2 + mu} = v^{2mu+1}
            Rat t = rpow(Rat(u), 2 * mu - 4 * nu - 1) *
                        pab(3 + 2 * nu, half - mu, Rat(r), Rat(n)) -
                    rpow(Rat(v), 2 * mu + 1);
            inner += genbinom(half + nu, nu - mu) * genbinom(half + nu, mu) *
                     rpow(Rat(m), nu - mu) * t;
        }
        out += ag[m] * cf_minus[n] * inner;
    }
    return 2 * out;
}

std::vector<Rat> bracket_qseries(const std::vector<Rat>& f,
                                 const std::vector<Rat>& g, int k2, int l2,
                                 long long nu) {
    long long N = (long long)f.size() + (long long)g.size();
    std::vector<Rat> out(N, Rat(0));
    Rat k(k2, 2), l(l2, 2);
    for (long long rr = 0; rr <= nu; ++rr) {
        long long s = nu - rr;
        Rat c = genbinom(k + nu - 1, s) * genbinom(l + nu - 1, rr);
        if (rr % 2 != 0) c = -c;
        if (c == 0) continue;
        for (long long i = 0; i < (long long)f.size(); ++i) {
            if (f[i] == 0) continue;
            Rat fi = c * f[i] * rpow(Rat(i), rr);
            if (fi == 0) continue;
            for (long long j = 0; j < (long long)g.size(); ++j) {
                if (g[j] == 0) continue;
                out[i + j] += fi * g[j] * rpow(Rat(j), s);
            }
        }
    }
    out.resize(N ? N - 1 : 0);
    return out;
}

std::vector<Rat> cusp_coeffs_2f1(long long N, long long nu,
                                 const ClassNumberTable& tab) {
    if (tab.bound < N) throw std::domain_error("class table too small");
    std::vector<Rat> c(N + 1, Rat(0));
    Rat half(1, 2);
    GammaHalf kap = kappa(3, 3, nu);
    Rat last_scale = kap.coeff / 8;  // kappa / (8 sqrt(pi))
    Rat mid_scale = rpow(2, -2 * nu - 2) * genbinom(Rat(2 * nu + 1), nu + 1);
    std::vector<Rat> jw(nu + 1);
    for (long long j = 0; j <= nu; ++j) {
        jw[j] = genbinom(nu + half, j) * genbinom(nu + half, nu - j);
        if (j % 2 != 0) jw[j] = -jw[j];
    }
    for (long long n = 1; n <= N; ++n) {
        Rat b = 0;
        long long smax = (long long)std::sqrt((double)n) + 1;
        for (long long s = -smax; s <= smax; ++s) {
            if (((s % 4) + 4) % 4 != 1 || s * s > n) continue;
            long long d = n - s * s;
            Rat h = tab.Hstar(d);
            if (h == 0) continue;
            for (long long j = 0; j <= nu; ++j)
                b += jw[j] * rpow(Rat(s), 2 * nu - 2 * j + 1) *
                     rpow(Rat(d), j) * h;
        }
        c[n] = b;
    }
    // middle term: t^2 - l^2 = n <= N with l >= 1 forces t <= (N+1)/2
    for (long long t = 2; t <= (N + 1) / 2; ++t) {
        if (chi_m4(t) == 0) continue;
        for (long long lv = t - 1; lv >= 1 && t * t - lv * lv <= N; --lv)
            c[t * t - lv * lv] +=
                mid_scale * chi_m4(t) * rpow(Rat(t - lv), 2 * nu + 2);
    }
    // last term: n = m^2
    for (long long m = 1; m * m <= N; ++m)
        c[m * m] += last_scale * chi_m4(m) * rpow(Rat(m), 2 * nu + 2);
    std::vector<Rat> out(c.begin() + 1, c.end());
    return out;
}

}  // namespace ffh
