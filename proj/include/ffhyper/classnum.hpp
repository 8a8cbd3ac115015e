#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace ffh {

using BigInt = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// Class numbers h(-d) from reduced primitive forms, and the folded Hurwitz
// sums H(D), H*(D).  H*(0) = -1/12; both vanish off discriminants.
class ClassNumberTable {
public:
    static ClassNumberTable tabulate(std::int64_t bound, int threads = 1);

    std::int64_t bound = 0;

    std::int64_t h(std::int64_t d) const;
    static int omega(std::int64_t d);  // 3 if d=3, 2 if d=4, else 1
    Rat H(std::int64_t D) const;
    Rat Hstar(std::int64_t D) const;

private:
    std::vector<std::int32_t> h_;
    std::vector<std::int64_t> hfold_;    // H(D) (integer)
    std::vector<std::int64_t> hstar6_;   // 6 * H*(D)
};

// S(p) = (p + 6 - 4(-3|p) - 3(-4|p)) / 12.
std::int64_t supersingular_count(std::int64_t p);

int kronecker_symbol(std::int64_t a, std::int64_t n);

enum class SchoofStatus { Count, NoCurves, Silent };

struct SchoofResult {
    Rat value;
    SchoofStatus status = SchoofStatus::Silent;
};

// Isomorphism classes over F_q with q+1-s points and Zn x Zn rational,
// per the three theorem cases; Silent when no hypothesis applies.
SchoofResult schoof_count(std::int64_t q, std::int64_t p, std::int64_t s,
                          std::int64_t n, const ClassNumberTable& tab);

// (sum_{s^2 <= N} H*(N - s^2),  -lambda1(N) + sigma1(N)/3) for odd N.
std::pair<Rat, Rat> eichler_check(std::int64_t N, const ClassNumberTable& tab);

}  // namespace ffh
