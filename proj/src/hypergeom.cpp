#include "ffhyper/hypergeom.hpp"

#include <cmath>
#include <stdexcept>

#include "ffhyper/curves.hpp"
#include "ffhyper/parallel.hpp"

namespace ffh {

cplx greene_nfn1(const Field& F, const GaussSumTable& gs,
                 std::span<const std::int64_t> upper,
                 std::span<const std::int64_t> lower, std::int64_t x) {
    if (upper.size() != lower.size() + 1 || upper.size() < 2)
        throw std::invalid_argument("need |upper| = |lower| + 1 >= 2");
    if (x == 0) return 0.0;  // every term carries chi(0) = 0
    std::int64_t n = F.q - 1;
    cplx acc = 0.0;
    for (std::int64_t j = 0; j < n; ++j) {
        cplx term = binomial_norm(F, gs, (upper[0] + j) % n, j);
        for (size_t i = 1; i < upper.size(); ++i)
            term *= binomial_norm(F, gs, (upper[i] + j) % n,
                                  (lower[i - 1] + j) % n);
        acc += term * char_eval(F, j, x);
    }
    return acc * (double(F.q) / double(n));
}

cplx greene_f21(const Field& F, const GaussSumTable& gs, std::int64_t x) {
    std::int64_t phi_idx = (F.q - 1) / 2;
    std::int64_t upper[] = {phi_idx, phi_idx};
    std::int64_t lower[] = {0};
    return greene_nfn1(F, gs, upper, lower, x) * double(F.q);
}

cplx greene_f32(const Field& F, const GaussSumTable& gs, std::int64_t x) {
    std::int64_t phi_idx = (F.q - 1) / 2;
    std::int64_t upper[] = {phi_idx, phi_idx, phi_idx};
    std::int64_t lower[] = {0, 0};
    return greene_nfn1(F, gs, upper, lower, x) * double(F.q) * double(F.q);
}

ScaledHyperValue f21_scaled(const Field& F, std::int64_t lambda) {
    ScaledHyperValue v;
    v.lambda = lambda;
    v.n = 2;
    if (lambda == 0) {
        v.scaled = 0;
    } else if (lambda == 1) {
        v.scaled = 1;  // 2F1(1)_q = 1/q
    } else {
        std::int64_t a = legendre_trace(F, lambda).a;
        v.scaled = -F.phi_[F.minus_one()] * a;
    }
    v.raw = double(v.scaled);
    return v;
}

ScaledHyperValue f32_scaled(const Field& F, std::int64_t mu,
                            const GaussSumTable* gs) {
    ScaledHyperValue v;
    v.lambda = mu;
    v.n = 3;
    if (mu == 0) {
        v.scaled = 0;
        v.raw = 0.0;
        return v;
    }
    if (mu == 1) {
        // mu = 1 is not in the image of lambda/(lambda+1); fall back to the
        // character sum and record the rounding residual.
        GaussSumTable local;
        if (!gs) {
            local = gauss_sums(F);
            gs = &local;
        }
        cplx raw = greene_f32(F, *gs, 1);
        v.raw = raw;
        v.scaled = std::llround(raw.real());
        v.residual = std::abs(raw - cplx(double(v.scaled)));
        v.exact = v.residual < 1e-4;
        return v;
    }
    // invert mu = lambda/(lambda+1)
    std::int64_t lambda = F.mul(mu, F.inv(F.sub(1, mu)));
    std::int64_t a = clausen_trace(F, lambda).a;
    v.scaled = F.phi_[F.sub(1, mu)] * (a * a - F.q);
    v.raw = double(v.scaled);
    return v;
}

std::vector<ScaledHyperValue> sweep(const Field& F, Family family,
                                    int threads) {
    std::vector<ScaledHyperValue> out(F.q);
    GaussSumTable gs;
    if (family == Family::F32) gs = gauss_sums(F);  // only the mu=1 slot
    parallel_for(F.q, threads, [&](std::int64_t lo, std::int64_t hi) {
        for (std::int64_t i = lo; i < hi; ++i) {
            std::int64_t lambda = i == 0 ? 0 : F.exp_[i - 1];
            out[i] = family == Family::F21 ? f21_scaled(F, lambda)
                                           : f32_scaled(F, lambda, &gs);
        }
    });
    return out;
}

}  // namespace ffh
