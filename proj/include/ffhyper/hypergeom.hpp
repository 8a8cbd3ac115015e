#pragma once

#include <span>
#include <vector>

#include "ffhyper/field.hpp"

namespace ffh {

enum class Family { F21, F32 };

// q^{n-1} * nFn-1(lambda) as an exact integer, plus the rounding residual.
struct ScaledHyperValue {
    std::int64_t lambda = 0;
    int n = 2;
    std::int64_t scaled = 0;
    double residual = 0.0;
    bool exact = true;
    cplx raw;  // unrounded value when !exact
};

// Greene's nFn-1 with character parameters, by the defining sum over all
// q-1 multiplicative characters.  upper.size() == lower.size() + 1.
cplx greene_nfn1(const Field& F, const GaussSumTable& gs,
                 std::span<const std::int64_t> upper,
                 std::span<const std::int64_t> lower, std::int64_t x);

// All-phi / all-epsilon families via the character sum (times q resp. q^2).
cplx greene_f21(const Field& F, const GaussSumTable& gs, std::int64_t x);
cplx greene_f32(const Field& F, const GaussSumTable& gs, std::int64_t x);

// q * 2F1(lambda) through the Legendre trace; O(q).
ScaledHyperValue f21_scaled(const Field& F, std::int64_t lambda);

// q^2 * 3F2(mu) through the Clausen trace; mu = 1 falls back to the
// character sum (gs built on demand when not supplied).
ScaledHyperValue f32_scaled(const Field& F, std::int64_t mu,
                            const GaussSumTable* gs = nullptr);

// Values over all of F_q in canonical order: 0 first, then g^0, g^1, ...
std::vector<ScaledHyperValue> sweep(const Field& F, Family family,
                                    int threads = 1);

}  // namespace ffh
