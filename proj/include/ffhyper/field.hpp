#pragma once

#include <complex>
#include <cstdint>
#include <vector>

namespace ffh {

using cplx = std::complex<double>;

// Fully tabulated finite field F_{p^r}, p >= 5 prime, q = p^r.
//
// Elements are indices 0..q-1 encoding polynomials over F_p in base p
// (constant term is the least significant digit).  The modulus is the
// lexicographically smallest monic irreducible of degree r, where the
// coefficient vector is compared leading coefficient first and constant
// term last.  The generator is the least primitive element under this
// element ordering, so dlog/exp tables are reproducible across runs.
class Field {
public:
    static constexpr std::int64_t kDefaultCap = std::int64_t(1) << 20;

    static Field build(std::int64_t p, int r, std::int64_t cap = kDefaultCap);

    std::int64_t p = 0;
    int r = 0;
    std::int64_t q = 0;
    std::vector<std::int64_t> modulus;  // c_0..c_r, monic, degree r
    std::int64_t g = 0;                 // primitive element

    // dlog_[x] = k with g^k = x for x != 0; dlog_[0] = -1.
    std::vector<std::int64_t> dlog_;
    std::vector<std::int64_t> exp_;     // size q-1
    std::vector<std::int32_t> trace_;   // absolute trace, values in 0..p-1
    std::vector<std::int8_t> phi_;      // quadratic character, phi_[0] = 0

    std::int64_t add(std::int64_t a, std::int64_t b) const;
    std::int64_t sub(std::int64_t a, std::int64_t b) const;
    std::int64_t neg(std::int64_t a) const;
    std::int64_t mul(std::int64_t a, std::int64_t b) const;
    std::int64_t inv(std::int64_t a) const;
    std::int64_t pow(std::int64_t a, std::int64_t e) const;

    int phi(std::int64_t x) const { return phi_[x]; }
    std::int64_t dlog(std::int64_t x) const { return dlog_[x]; }
    std::int64_t gen_pow(std::int64_t k) const { return exp_[k]; }
    bool is_square(std::int64_t x) const { return phi_[x] >= 0; }

    // -1 as a field element.
    std::int64_t minus_one() const { return exp_[(q - 1) / 2]; }

    // Canonical additive character psi(x) = e^{2 pi i tr(x) / p}.
    cplx psi(std::int64_t x) const;

private:
    Field() = default;
    std::int64_t mul_poly(std::int64_t a, std::int64_t b) const;
};

// chi_j(g^k) = e^{2 pi i j k / (q-1)}; j = 0 is the trivial character,
// j = (q-1)/2 the quadratic character.  chi_j(0) = 0 for every j.
cplx char_eval(const Field& F, std::int64_t j, std::int64_t x);

struct GaussSumTable {
    std::vector<cplx> values;  // entry j = g(chi_j)
};

enum class DftMethod { Auto, Naive, Fast };

// g(chi_j) = sum_x chi_j(x) psi(x), computed as the length-(q-1) DFT of
// k -> psi(g^k).
GaussSumTable gauss_sums(const Field& F, DftMethod method = DftMethod::Auto);

// J(A,B) = sum_x A(x) B(1-x), two routes.
cplx jacobi_sum_direct(const Field& F, std::int64_t ja, std::int64_t jb);
cplx jacobi_sum(const Field& F, const GaussSumTable& gs, std::int64_t ja,
                std::int64_t jb);

// Greene's normalized binomial (A choose B) = B(-1)/q * J(A, conj(B)).
cplx binomial_norm(const Field& F, const GaussSumTable& gs, std::int64_t ja,
                   std::int64_t jb);

bool is_prime(std::int64_t n);
std::vector<std::int64_t> prime_factors(std::int64_t n);

}  // namespace ffh
