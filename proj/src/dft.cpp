#include "ffhyper/field.hpp"

#include <numbers>
#include <stdexcept>

namespace ffh {

namespace {

constexpr std::int64_t kNaiveThreshold = 2048;

// In-place radix-2 FFT, sign = +1 or -1 in the exponent.
void fft_pow2(std::vector<cplx>& a, int sign) {
    size_t n = a.size();
    if (n & (n - 1)) throw std::logic_error("fft size not a power of two");
    for (size_t i = 1, j = 0; i < n; ++i) {
        size_t bit = n >> 1;
        for (; j & bit; bit >>= 1) j ^= bit;
        j ^= bit;
        if (i < j) std::swap(a[i], a[j]);
    }
    for (size_t len = 2; len <= n; len <<= 1) {
        double ang = sign * 2.0 * std::numbers::pi / double(len);
        cplx wlen(std::cos(ang), std::sin(ang));
        for (size_t i = 0; i < n; i += len) {
            cplx w = 1.0;
            for (size_t k = 0; k < len / 2; ++k) {
                cplx u = a[i + k], v = a[i + k + len / 2] * w;
                a[i + k] = u + v;
                a[i + k + len / 2] = u - v;
                w *= wlen;
            }
        }
    }
}

std::vector<cplx> dft_naive(const std::vector<cplx>& a) {
    size_t n = a.size();
    std::vector<cplx> out(n);
    for (size_t j = 0; j < n; ++j) {
        cplx acc = 0.0;
        for (size_t k = 0; k < n; ++k) {
            double ang = 2.0 * std::numbers::pi * double(j * k % n) / double(n);
            acc += a[k] * cplx(std::cos(ang), std::sin(ang));
        }
        out[j] = acc;
    }
    return out;
}

// Bluestein chirp transform: arbitrary-length DFT with exponent sign +1,
// X_j = sum_k a_k e^{2 pi i jk/n}, via one power-of-two convolution.
std::vector<cplx> dft_bluestein(const std::vector<cplx>& a) {
    size_t n = a.size();
    size_t m = 1;
    while (m < 2 * n - 1) m <<= 1;
    // jk = (j^2 + k^2 - (j-k)^2) / 2
    std::vector<cplx> chirp(n);
    for (size_t k = 0; k < n; ++k) {
        // k^2/2 mod n, in double precision via modular reduction of k^2
        std::uint64_t kk = (std::uint64_t(k) * k) % (2 * n);
        double ang = std::numbers::pi * double(kk) / double(n);
        chirp[k] = {std::cos(ang), std::sin(ang)};
    }
    std::vector<cplx> u(m, 0.0), v(m, 0.0);
    for (size_t k = 0; k < n; ++k) u[k] = a[k] * chirp[k];
    for (size_t k = 0; k < n; ++k) {
        v[k] = std::conj(chirp[k]);
        if (k) v[m - k] = std::conj(chirp[k]);
    }
    fft_pow2(u, +1);
    fft_pow2(v, +1);
    for (size_t k = 0; k < m; ++k) u[k] *= v[k];
    fft_pow2(u, -1);
    std::vector<cplx> out(n);
    for (size_t j = 0; j < n; ++j) out[j] = u[j] / double(m) * chirp[j];
    return out;
}

}  // namespace

GaussSumTable gauss_sums(const Field& F, DftMethod method) {
    std::int64_t n = F.q - 1;
    std::vector<cplx> a(n);
    for (std::int64_t k = 0; k < n; ++k) a[k] = F.psi(F.exp_[k]);
    bool naive = method == DftMethod::Naive ||
                 (method == DftMethod::Auto && n < kNaiveThreshold);
    GaussSumTable t;
    t.values = naive ? dft_naive(a) : dft_bluestein(a);
    return t;
}

}  // namespace ffh
