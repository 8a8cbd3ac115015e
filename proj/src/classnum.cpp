#include "ffhyper/classnum.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "ffhyper/parallel.hpp"

namespace ffh {

ClassNumberTable ClassNumberTable::tabulate(std::int64_t bound, int threads) {
    if (bound < 4) throw std::invalid_argument("bound must be >= 4");
    ClassNumberTable t;
    t.bound = bound;
    t.h_.assign(bound + 1, 0);

    // Reduced primitive forms (a,b,c): |b| <= a <= c, b^2 - 4ac = -d,
    // gcd(a,b,c) = 1, with b >= 0 when |b| = a or a = c.
    std::int64_t amax = std::int64_t(std::sqrt(double(bound) / 3.0)) + 1;
    int workers = std::max(threads, 1);
    std::vector<std::vector<std::int32_t>> parts(workers);
    std::int64_t chunk = (amax + workers - 1) / workers;
    parallel_for(amax, workers, [&](std::int64_t lo, std::int64_t hi) {
        auto& acc = parts[size_t(lo / chunk)];
        acc.assign(bound + 1, 0);
        for (std::int64_t a = lo + 1; a <= hi; ++a) {
            for (std::int64_t b = -a + 1; b <= a; ++b) {
                for (std::int64_t c = a;; ++c) {
                    std::int64_t d = 4 * a * c - b * b;
                    if (d > bound) break;
                    if (d <= 0) continue;
                    if (b < 0 && a == c) continue;  // (a,-b,a) ~ (a,b,a)
                    if (std::gcd(std::gcd(a, std::abs(b)), c) != 1) continue;
                    acc[d] += 1;
                }
            }
        }
    });
    for (auto& part : parts) {
        if (part.empty()) continue;
        for (std::int64_t d = 0; d <= bound; ++d) t.h_[d] += part[d];
    }

    // Fold square divisors: H(D) = sum_{f^2 | D} h(D / f^2).
    t.hfold_.assign(bound + 1, 0);
    t.hstar6_.assign(bound + 1, 0);
    for (std::int64_t d = 3; d <= bound; ++d) {
        if (!t.h_[d]) continue;
        for (std::int64_t f = 1; f * f * d <= bound; ++f) {
            t.hfold_[f * f * d] += t.h_[d];
            t.hstar6_[f * f * d] += 6 / omega(d) * t.h_[d];
        }
    }
    return t;
}

std::int64_t ClassNumberTable::h(std::int64_t d) const {
    if (d < 0 || d > bound) throw std::out_of_range("class table too small");
    return h_[d];
}

int ClassNumberTable::omega(std::int64_t d) {
    if (d == 3) return 3;
    if (d == 4) return 2;
    return 1;
}

Rat ClassNumberTable::H(std::int64_t D) const {
    if (D < 0) return 0;
    if (D > bound) throw std::out_of_range("class table too small");
    return hfold_[D];
}

Rat ClassNumberTable::Hstar(std::int64_t D) const {
    if (D < 0) return 0;
    if (D == 0) return Rat(-1, 12);
    if (D > bound) throw std::out_of_range("class table too small");
    return Rat(hstar6_[D], 6);
}

int kronecker_symbol(std::int64_t a, std::int64_t n) {
    if (n == 0) return std::abs(a) == 1 ? 1 : 0;
    int sign = 1;
    if (n < 0) {
        n = -n;
        if (a < 0) sign = -sign;
    }
    int twos = 0;
    while (n % 2 == 0) {
        n /= 2;
        ++twos;
    }
    if (twos) {
        if (a % 2 == 0) return 0;
        std::int64_t am8 = ((a % 8) + 8) % 8;
        if (twos % 2 && (am8 == 3 || am8 == 5)) sign = -sign;
    }
    a %= n;
    if (a < 0) a += n;
    while (a) {
        while (a % 2 == 0) {
            a /= 2;
            std::int64_t nm8 = n % 8;
            if (nm8 == 3 || nm8 == 5) sign = -sign;
        }
        std::swap(a, n);
        if (a % 4 == 3 && n % 4 == 3) sign = -sign;
        a %= n;
    }
    return n == 1 ? sign : 0;
}

std::int64_t supersingular_count(std::int64_t p) {
    if (p < 5) throw std::invalid_argument("p must be >= 5");
    std::int64_t num =
        p + 6 - 4 * kronecker_symbol(-3, p) - 3 * kronecker_symbol(-4, p);
    if (num % 12 != 0 || num < 0)
        throw std::logic_error("S(p) must be a nonnegative integer");
    return num / 12;
}

SchoofResult schoof_count(std::int64_t q, std::int64_t p, std::int64_t s,
                          std::int64_t n, const ClassNumberTable& tab) {
    // q = p^r; r even iff q is a perfect power of p^2
    std::int64_t root = std::llround(std::sqrt(double(q)));
    bool q_square = root * root == q;

    if (s != 0 && s % p == 0 && s * s != 4 * q && n >= 2)
        return {Rat(0), SchoofStatus::NoCurves};
    if (q_square && (s == 2 * root || s == -2 * root) && n == 2)
        return {Rat(supersingular_count(p)), SchoofStatus::Count};
    if (s * s <= 4 * q && s % p != 0 && (q + 1 - s) % (n * n) == 0 &&
        (q - 1) % n == 0 && (4 * q - s * s) % (n * n) == 0)
        return {tab.H((4 * q - s * s) / (n * n)), SchoofStatus::Count};
    return {Rat(0), SchoofStatus::Silent};
}

std::pair<Rat, Rat> eichler_check(std::int64_t N,
                                  const ClassNumberTable& tab) {
    if (N < 1 || N % 2 == 0) throw std::invalid_argument("N must be odd >= 1");
    Rat lhs = 0;
    for (std::int64_t s = 0; s * s <= N; ++s) {
        Rat term = tab.Hstar(N - s * s);
        lhs += s == 0 ? term : 2 * term;
    }
    Rat sigma1 = 0, lambda1 = 0;
    for (std::int64_t d = 1; d <= N; ++d) {
        if (N % d) continue;
        sigma1 += d;
        lambda1 += std::min(d, N / d);
    }
    Rat rhs = -lambda1 / 2 + sigma1 / 3;
    return {lhs, rhs};
}

}  // namespace ffh
