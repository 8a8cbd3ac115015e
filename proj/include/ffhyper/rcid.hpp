#pragma once

#include <utility>
#include <vector>

#include "ffhyper/classnum.hpp"

namespace ffh {

// Exact value c * pi^{half/2}; half-integer Gamma values live here.
struct GammaHalf {
    Rat coeff;
    int half = 0;  // power of sqrt(pi)
};

// Gamma(m/2) for odd m (any sign) or even m >= 2.
GammaHalf gamma_half(long long m);

// Gamma(x) / Gamma(x - mu) = (x-1)(x-2)...(x-mu), exact at rational x.
Rat gamma_ratio(const Rat& x, long long mu);

Rat factorial(long long n);         // n < 0 -> 0
Rat inv_factorial(long long n);     // n < 0 -> 0 (1/Gamma at poles)

// Generalized binomial via falling factorials; 0 for n < 0.
Rat genbinom(const Rat& x, long long n);

// P_{a,b}(X,Y) = sum_j binom(j+b-2, j) X^j (X+Y)^{a-j-2},  a >= 2.
Rat pab(long long a, const Rat& b, const Rat& X, const Rat& Y);

// Alternate closed form, valid for b != 1, 2.
Rat pab_alt(long long a, const Rat& b, const Rat& X, const Rat& Y);

// (lhs, rhs) of the half-pole multinomial identity.
std::pair<Rat, Rat> comb_lemma(long long nu, long long j);

// Exact equality of the two product identities, parts (1) and (2).
std::pair<bool, bool> comb_lemma2_checks(long long nu, long long mu,
                                         long long j);

// Both sides of the P-polynomial collapse at m = u^2, n = v^2, u > v >= 1.
bool prop_poly_identity_check(long long nu, long long u, long long v);

// sum_{0<=t<=n} (-1)^t (2n-t)! / (t! (n-t)! (n+1-t)!); must vanish.
Rat cohen_vanishing(long long n);

// kappa(k, l, nu) for k = k2/2, l = l2/2 with k2 = 3, l2 in {1, 3}.
GammaHalf kappa(int k2, int l2, long long nu);

// b(r) of the holomorphic projection of [f^-, g]_nu at k = l = 3/2.
// cf_minus[n] holds sqrt(pi) * conj(c_f^-(n)) (rational after scaling);
// both sequences are supported on perfect squares so half powers of m, n
// are exact.
Rat mertens_br_coefficient(long long r, long long nu,
                           const std::vector<Rat>& cf_minus,
                           const std::vector<Rat>& ag);

// First N coefficients (index 1..N) of the weight 2nu+3 cusp form built
// from the class-number generating series times the eta-power theta series.
std::vector<Rat> cusp_coeffs_2f1(long long N, long long nu,
                                 const ClassNumberTable& tab);

// nu-th Rankin-Cohen bracket of two q-series with rational coefficients,
// weights k = k2/2 and l = l2/2; derivatives act as n-multiplication.
std::vector<Rat> bracket_qseries(const std::vector<Rat>& f,
                                 const std::vector<Rat>& g, int k2, int l2,
                                 long long nu);

int chi_m4(long long n);  // Kronecker character of conductor 4

}  // namespace ffh
