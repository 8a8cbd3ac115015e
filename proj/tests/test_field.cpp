#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ffhyper/field.hpp"

using namespace ffh;

TEST_CASE("phi table q=7") {
    Field F = Field::build(7, 1);
    CHECK(F.phi(0) == 0);
    for (int x : {1, 2, 4}) CHECK(F.phi(x) == 1);
    for (int x : {3, 5, 6}) CHECK(F.phi(x) == -1);
    CHECK(F.g == 3);
}

TEST_CASE("arithmetic and dlog q=49") {
    Field F = Field::build(7, 2);
    CHECK(F.q == 49);
    for (std::int64_t x = 1; x < F.q; ++x) {
        CHECK(F.mul(x, F.inv(x)) == 1);
        CHECK(F.gen_pow(F.dlog(x)) == x);
        CHECK(F.mul(x, 1) == x);
    }
    // additive character is well defined: psi(a)psi(b) = psi(a+b)
    for (std::int64_t a = 0; a < F.q; a += 5)
        for (std::int64_t b = 0; b < F.q; b += 7)
            CHECK(std::abs(F.psi(a) * F.psi(b) - F.psi(F.add(a, b))) < 1e-12);
    CHECK(F.add(F.minus_one(), 1) == 0);
}

TEST_CASE("gauss sums") {
    for (auto [p, r] : {std::pair<std::int64_t, int>{11, 1}, {5, 2}}) {
        Field F = Field::build(p, r);
        GaussSumTable gs = gauss_sums(F);
        CHECK(std::abs(gs.values[0] - cplx(-1.0)) < 1e-9);
        for (std::int64_t j = 1; j < F.q - 1; ++j)
            CHECK(std::fabs(std::norm(gs.values[j]) - (double)F.q) < 1e-6);
    }
}

TEST_CASE("jacobi special cases q=13") {
    Field F = Field::build(13, 1);
    GaussSumTable gs = gauss_sums(F);
    std::int64_t n = F.q - 1;
    CHECK(std::abs(jacobi_sum(F, gs, 0, 0) - cplx((double)(F.q - 2))) < 1e-9);
    for (std::int64_t j = 1; j < n; ++j) {
        CHECK(std::abs(jacobi_sum(F, gs, j, 0) - cplx(-1.0)) < 1e-9);
        double chi_m1 = std::real(char_eval(F, j, F.minus_one()));
        CHECK(std::abs(jacobi_sum(F, gs, j, n - j) - cplx(-chi_m1)) < 1e-9);
        CHECK(std::abs(jacobi_sum(F, gs, j, 0) -
                       jacobi_sum_direct(F, j, 0)) < 1e-9);
    }
}

TEST_CASE("dft methods agree off powers of two") {
    Field F = Field::build(13, 1);  // length 12 DFT
    GaussSumTable a = gauss_sums(F, DftMethod::Naive);
    GaussSumTable b = gauss_sums(F, DftMethod::Fast);
    for (size_t j = 0; j < a.values.size(); ++j)
        CHECK(std::abs(a.values[j] - b.values[j]) < 1e-9);
}

TEST_CASE("prime helpers") {
    CHECK(is_prime(2));
    CHECK(is_prime(20011));
    CHECK(!is_prime(1));
    CHECK(!is_prime(20009));  // 11 * 17 * 107
    auto f = prime_factors(360);
    CHECK(f == std::vector<std::int64_t>{2, 3, 5});
}
