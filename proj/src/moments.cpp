#include "ffhyper/moments.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numeric>

#include <boost/math/quadrature/tanh_sinh.hpp>

namespace ffh {

namespace {

constexpr double kPi = 3.14159265358979323846;

Rat binom(long long n, long long k) {
    if (k < 0 || k > n) return 0;
    Rat b = 1;
    for (long long i = 0; i < k; ++i) b *= Rat(n - i, i + 1);
    return b;
}

Rat catalan(long long k) {
    // (2k)! / (k! (k+1)!)
    Rat c = binom(2 * k, k);
    return c / (k + 1);
}

BigInt ipow(BigInt b, int e) {
    BigInt out = 1;
    while (e-- > 0) out *= b;
    return out;
}

}  // namespace

BigInt empirical_moment(const std::vector<ScaledHyperValue>& sweep, int m) {
    BigInt sum = 0;
    for (const auto& v : sweep) sum += ipow(BigInt(v.scaled), m);
    return sum;
}

Rat reference_moment(Family family, int m) {
    if (m % 2 != 0) return 0;
    long long n = m / 2;
    if (family == Family::F21) return catalan(n);
    Rat sum = 0;
    for (long long i = 0; i <= m; ++i) {
        Rat term = binom(m, i) * catalan(i);
        sum += (i % 2 == 0) ? term : -term;
    }
    return sum;
}

Rat weighted_class_sum(long long q, long long p, int m, int modulus,
                       int divisor, const ClassNumberTable& tab) {
    long long smax = (long long)std::floor(2.0 * std::sqrt((double)q));
    while ((smax + 1) * (smax + 1) <= 4 * q) ++smax;
    while (smax * smax > 4 * q) --smax;
    Rat sum = 0;
    for (long long s = -smax; s <= smax; ++s) {
        if (s % p == 0) continue;  // covers s = 0, gcd(0,p) = p
        if (((s - q - 1) % modulus + modulus) % modulus != 0) continue;
        long long num = 4 * q - s * s;
        if (num % divisor != 0) continue;
        Rat term = tab.Hstar(num / divisor);
        BigInt sp = ipow(BigInt(s), m);
        sum += term * Rat(sp);
    }
    return sum;
}

FormulaRhs formula_rhs_f21(long long p, long long r, int m,
                           const ClassNumberTable& tab) {
    FormulaRhs out;
    BigInt q = ipow(BigInt(p), (int)r);
    long long ql = (long long)q;
    if (m % 2 == 0) {
        out.case_id = (r % 2 == 1) ? 1 : 2;
        out.value = 1 + 3 * weighted_class_sum(ql, p, m, 4, 4, tab);
        out.applicable = true;
        if (r % 2 == 0) {
            out.band = 6.0 * (double)supersingular_count(p) *
                       std::pow((double)ql, m / 2.0);
        }
        return out;
    }
    if (ql % 4 == 3) {
        out.case_id = 3;
        out.value = 1;
        out.applicable = true;
        return out;
    }
    // q == 1 (mod 4), m odd -- as printed; known not to match small q.
    out.case_id = 4;
    out.value = -1 - 2 * weighted_class_sum(ql, p, m, 8, 4, tab) -
                4 * weighted_class_sum(ql, p, m, 16, 16, tab);
    out.applicable = true;
    if (r % 2 == 0) {
        out.band = 6.0 * (double)supersingular_count(p) *
                   std::pow((double)ql, m / 2.0);
    }
    return out;
}

Rat case4_intermediate_rhs(long long q, long long p, int m,
                           const ClassNumberTable& tab) {
    // 1 - sum_lambda a^m grouped by trace, class counts split over the
    // congruence classes of s mod 8 and 16; the two mod-16 pieces carry a
    // combined coefficient -8 after folding in the classes with no
    // Legendre member.
    Rat rhs = 1;
    long long smax = (long long)std::floor(2.0 * std::sqrt((double)q));
    while ((smax + 1) * (smax + 1) <= 4 * q) ++smax;
    while (smax * smax > 4 * q) --smax;
    for (long long s = -smax; s <= smax; ++s) {
        if (s % p == 0) continue;
        BigInt sp = ipow(BigInt(s), m);
        Rat spr{sp};
        long long mod8 = ((s - q - 1) % 8 + 8) % 8;
        long long mod16 = ((s - q - 1) % 16 + 16) % 16;
        long long n4 = 4 * q - s * s;
        Rat h4 = (n4 % 4 == 0) ? tab.Hstar(n4 / 4) : Rat(0);
        Rat h16 = (n4 % 16 == 0) ? tab.Hstar(n4 / 16) : Rat(0);
        if (mod8 == 0)
            rhs += -4 * (h4 - h16) * spr;
        else
            rhs += -2 * h4 * spr;
        if (mod16 == 0) rhs += -8 * h16 * spr;
    }
    return rhs;
}

MomentReport moment_report(const Field& F,
                           const std::vector<ScaledHyperValue>& sweep,
                           Family family, int m,
                           const ClassNumberTable* tab) {
    MomentReport rep;
    rep.p = F.p;
    rep.r = F.r;
    rep.family = family;
    rep.m = m;
    rep.sum_scaled = empirical_moment(sweep, m);
    double qd = (double)F.q;
    double norm = (family == Family::F21) ? std::pow(qd, m / 2.0 + 1)
                                          : std::pow(qd, m + 1.0);
    rep.normalized = (double)Rat(rep.sum_scaled) / norm;
    rep.reference = reference_moment(family, m);
    if (family == Family::F21 && tab && tab->bound >= 4 * F.q) {
        FormulaRhs rhs = formula_rhs_f21(F.p, F.r, m, *tab);
        if (rhs.applicable) {
            rep.has_formula = true;
            rep.formula_rhs = rhs.value;
            rep.defect = Rat(rep.sum_scaled) - rhs.value;
            rep.has_band = rhs.band > 0;
            rep.band = rhs.band;
        }
    }
    return rep;
}

ClausenMomentCheck clausen_even_moment_check(const Field& F,
                                             const CurveCensus& cen,
                                             long long s, int n,
                                             const ClassNumberTable& tab) {
    ClausenMomentCheck out;
    if (s <= 0 || s % 2 != 0 || s * s > 4 * F.q) {
        out.reason = "s not an even trace bound";
        return out;
    }
    std::vector<std::int64_t> lset = clausen_lambda_set(F, s);
    out.l_count = (long long)lset.size();
    // hypothesis gates
    std::int64_t third = F.inv(3 % F.p);
    std::int64_t m19 = F.neg(F.inv(F.mul(3 % F.p, 3 % F.p)));
    for (std::int64_t lam : lset) {
        if (lam == third) {
            out.reason = "1/3 in L(s,q)";
            return out;
        }
        if (lam == m19) {
            out.reason = "-1/9 in L(s,q)";
            return out;
        }
    }
    for (const auto& cls : cen.classes) {
        if (cls.j_invariant == (1728 % F.p) &&
            (cls.trace == s || cls.trace == -s)) {
            out.reason = "j=1728 class at trace +-s";
            return out;
        }
    }
    out.applicable = true;
    long long i_cnt = 0, i2_cnt = 0;
    for (const auto& cls : cen.classes) {
        if (cls.trace == s || cls.trace == -s) {
            ++i_cnt;
            if (cls.full_2_torsion) ++i2_cnt;
        }
    }
    out.i_count = i_cnt;
    out.i2_count = i2_cnt;
    BigInt plain = 0, twisted = 0;
    for (std::int64_t lam : lset) {
        TraceRecord tr = clausen_trace(F, lam);
        BigInt a2n = ipow(BigInt(tr.a), 2 * n);
        plain += a2n;
        twisted += F.phi(F.neg(lam)) * a2n;
    }
    BigInt s2n = ipow(BigInt(s), 2 * n);
    out.plain_ok = 2 * plain == s2n * (i_cnt + 2 * i2_cnt);
    out.twisted_ok = 2 * twisted == s2n * (-i_cnt + 4 * i2_cnt);
    Rat hb = tab.H(4 * F.q - s * s);
    Rat bound = 3 * std::max({hb, Rat(supersingular_count(F.p)), Rat(2)});
    out.bound_ok = Rat(out.l_count) <= bound;
    return out;
}

double semicircle_density(double t) {
    if (std::fabs(t) >= 2.0) return 0.0;
    return std::sqrt(4.0 - t * t) / (2.0 * kPi);
}

double batman_density(double t) {
    double a = std::fabs(t);
    if (a >= 3.0) return 0.0;
    if (a > 1.0) return (3.0 - a) / (std::sqrt(3.0 + 2.0 * a - t * t) * 4.0 * kPi);
    if (a == 1.0) return 0.0;  // one-sided limits diverge; excluded abscissa
    double left = (3.0 + t) / std::sqrt(3.0 - 2.0 * t - t * t);
    double right = (3.0 - t) / std::sqrt(3.0 + 2.0 * t - t * t);
    return (left + right) / (4.0 * kPi);
}

BatmanMoment batman_moment(int m) {
    BatmanMoment out;
    Rat exact = 0;
    for (long long k = 0; k <= m; ++k) {
        Rat term = binom(m, k) * catalan(k);
        exact += (k % 2 == 0) ? term : -term;
    }
    out.exact = exact;
    // truncated 2F1(1/2, -m; 2; 4) via Pochhammer products
    Rat series = 0, poch = 1;  // poch = (1/2)_k (-m)_k 4^k / ((2)_k k!)
    for (long long k = 0; k <= m; ++k) {
        series += poch;
        poch *= Rat(2 * k + 1, 2) * Rat(-(m - k)) * 4 /
                (Rat(k + 2) * Rat(k + 1));
    }
    out.series = series;
    boost::math::quadrature::tanh_sinh<double> integ;
    auto f = [&](double t) { return std::pow(t, m) * batman_density(t); };
    double v = 0.0;
    const double br[4] = {-3.0, -1.0, 1.0, 3.0};
    for (int i = 0; i < 3; ++i) v += integ.integrate(f, br[i], br[i + 1]);
    out.quad = v;
    return out;
}

namespace {

struct CdfGrid {
    std::vector<double> x, F;
    double eval(double t) const {
        if (t <= x.front()) return 0.0;
        if (t >= x.back()) return 1.0;
        auto it = std::upper_bound(x.begin(), x.end(), t);
        size_t i = (size_t)(it - x.begin()) - 1;
        double w = (t - x[i]) / (x[i + 1] - x[i]);
        return F[i] + w * (F[i + 1] - F[i]);
    }
};

CdfGrid build_cdf(Family family) {
    const int kPts = 10000;
    double lo = (family == Family::F21) ? -2.0 : -3.0;
    double hi = -lo;
    std::vector<double> xs;
    xs.reserve(kPts + 4);
    for (int i = 0; i <= kPts; ++i)
        xs.push_back(lo + (hi - lo) * i / kPts);
    if (family == Family::F32) {
        xs.push_back(-1.0);
        xs.push_back(1.0);
        std::sort(xs.begin(), xs.end());
        xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
    }
    auto dens = (family == Family::F21) ? semicircle_density : batman_density;
    boost::math::quadrature::tanh_sinh<double> integ;
    CdfGrid g;
    g.x = xs;
    g.F.resize(xs.size(), 0.0);
    double acc = 0.0;
    for (size_t i = 1; i < xs.size(); ++i) {
        acc += integ.integrate(dens, xs[i - 1], xs[i]);
        g.F[i] = acc;
    }
    for (auto& v : g.F) v /= acc;  // defensive renormalization, acc ~ 1
    return g;
}

const CdfGrid& cdf_grid(Family family) {
    static const CdfGrid f21 = build_cdf(Family::F21);
    static const CdfGrid f32 = build_cdf(Family::F32);
    return family == Family::F21 ? f21 : f32;
}

}  // namespace

EmpiricalHistogram ks_and_histogram(const std::vector<ScaledHyperValue>& sweep,
                                    Family family, long long q, int bins) {
    EmpiricalHistogram h;
    if (sweep.empty() || bins <= 0) return h;
    double lim = (family == Family::F21) ? 2.0 : 3.0;
    double scale = (family == Family::F21) ? std::sqrt((double)q) : (double)q;
    std::vector<double> ts;
    ts.reserve(sweep.size());
    for (const auto& v : sweep) ts.push_back((double)v.scaled / scale);
    h.edges.resize(bins + 1);
    for (int i = 0; i <= bins; ++i)
        h.edges[i] = -lim + 2.0 * lim * i / bins;
    h.counts.assign(bins, 0);
    for (double t : ts) {
        int b = (int)((t + lim) / (2.0 * lim) * bins);
        b = std::clamp(b, 0, bins - 1);
        ++h.counts[b];
    }
    h.total = (long long)ts.size();
    double width = 2.0 * lim / bins;
    auto dens = (family == Family::F21) ? semicircle_density : batman_density;
    h.density.resize(bins);
    h.reference_density.resize(bins);
    for (int i = 0; i < bins; ++i) {
        h.density[i] = (double)h.counts[i] / ((double)h.total * width);
        h.reference_density[i] = dens((h.edges[i] + h.edges[i + 1]) / 2.0);
    }
    const CdfGrid& grid = cdf_grid(family);
    std::sort(ts.begin(), ts.end());
    double ks = 0.0;
    size_t nsz = ts.size();
    for (size_t i = 0; i < nsz; ++i) {
        double Fx = grid.eval(ts[i]);
        ks = std::max(ks, std::fabs((double)(i + 1) / nsz - Fx));
        ks = std::max(ks, std::fabs(Fx - (double)i / nsz));
    }
    h.ks = ks;
    return h;
}

}  // namespace ffh
