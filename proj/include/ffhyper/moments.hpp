#pragma once

#include <string>
#include <vector>

#include "ffhyper/classnum.hpp"
#include "ffhyper/curves.hpp"
#include "ffhyper/hypergeom.hpp"

namespace ffh {

// Sum of scaled^m over the sweep, exact (overflows int64 for large q, high m).
BigInt empirical_moment(const std::vector<ScaledHyperValue>& sweep, int m);

// Limiting moment: Catalan number for f21, signed Catalan sum (O3) for f32.
// Odd m give 0.
Rat reference_moment(Family family, int m);

// Sum over s == q+1 (mod modulus), |s| <= 2 sqrt(q), gcd(s,p)=1 of
// Hstar((4q - s^2)/divisor) * s^m.  Terms where divisor does not divide
// 4q - s^2 are vacuous.
Rat weighted_class_sum(long long q, long long p, int m, int modulus,
                       int divisor, const ClassNumberTable& tab);

struct FormulaRhs {
    int case_id = 0;      // 1..4, 0 = no case applies
    Rat value;            // class-number side with the unknown term at 0
    double band = 0.0;    // half-width 6*S(p)*q^{m/2} when r even, else 0
    bool applicable = false;
};

// Right side of the 2F1 moment formulas for q = p^r.  Case (4) as printed is
// known to disagree with direct computation at small q; see
// case4_intermediate_rhs for the validated decomposition.
FormulaRhs formula_rhs_f21(long long p, long long r, int m,
                           const ClassNumberTable& tab);

// The intermediate trace-count decomposition behind case (4), valid for
// r odd, q == 1 (mod 4), m odd.  Matches empirical sums exactly.
Rat case4_intermediate_rhs(long long q, long long p, int m,
                           const ClassNumberTable& tab);

struct MomentReport {
    long long p = 0, r = 0;
    Family family = Family::F21;
    int m = 0;
    BigInt sum_scaled;
    double normalized = 0.0;  // sum / q^{m/2+1} (f21) or / q^{m+1} (f32)
    Rat reference;
    bool has_formula = false;
    Rat formula_rhs;
    Rat defect;               // q^m * normalized-sum minus formula_rhs
    bool has_band = false;
    double band = 0.0;
};

MomentReport moment_report(const Field& F,
                           const std::vector<ScaledHyperValue>& sweep,
                           Family family, int m,
                           const ClassNumberTable* tab);

struct ClausenMomentCheck {
    bool applicable = false;
    std::string reason;
    bool plain_ok = false;     // sum a^{2n} = s^{2n}(|I|/2 + |I2|)
    bool twisted_ok = false;   // sum phi(-lambda) a^{2n} = s^{2n}(-|I|/2 + 2|I2|)
    bool bound_ok = false;     // |L(s,q)| <= 3 max{H(4q-s^2), S(p), 2}
    long long i_count = 0, i2_count = 0, l_count = 0;
};

ClausenMomentCheck clausen_even_moment_check(const Field& F,
                                             const CurveCensus& cen,
                                             long long s, int n,
                                             const ClassNumberTable& tab);

// Limiting densities.  Semicircle on [-2,2]; Batman on [-3,3] normalized by
// 1/(4 pi), with integrable singularities at |t| = 1 and |t| = 3.
double semicircle_density(double t);
double batman_density(double t);

struct BatmanMoment {
    Rat exact;       // signed Catalan sum
    Rat series;      // truncated 2F1(1/2,-m;2;4), must equal exact
    double quad;     // integral t^m f(t) dt by adaptive quadrature
};
BatmanMoment batman_moment(int m);

struct EmpiricalHistogram {
    std::vector<double> edges;  // bins+1 entries
    std::vector<long long> counts;
    long long total = 0;
    std::vector<double> density;            // count / (total * width)
    std::vector<double> reference_density;  // target density at midpoints
    double ks = 0.0;
};

// Renormalizes f21 by 1/sqrt(q) into [-2,2], f32 by 1/q into [-3,3];
// KS statistic against the reference CDF (quadrature, cached grid).
EmpiricalHistogram ks_and_histogram(const std::vector<ScaledHyperValue>& sweep,
                                    Family family, long long q, int bins);

}  // namespace ffh
