#include "ffhyper/verify.hpp"

#include <cmath>
#include <random>
#include <sstream>

#include "ffhyper/classnum.hpp"
#include "ffhyper/curves.hpp"
#include "ffhyper/field.hpp"
#include "ffhyper/hypergeom.hpp"
#include "ffhyper/moments.hpp"
#include "ffhyper/rcid.hpp"

namespace ffh {

namespace {

struct Suite {
    std::vector<CheckResult> out;
    void add(const std::string& name, bool ok, const std::string& detail = "") {
        out.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Fail,
                       detail});
    }
    void warn(const std::string& name, bool ok, const std::string& detail) {
        out.push_back({name, ok ? CheckStatus::Pass : CheckStatus::Warn,
                       detail});
    }
};

std::string rstr(const Rat& x) { return x.str(); }

const std::vector<std::pair<std::int64_t, int>> kSmallFields = {
    {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1},
    {5, 2}, {7, 2}};

}  // namespace

std::vector<CheckResult> verify_fields(int threads) {
    (void)threads;
    Suite s;
    for (auto [p, r] : kSmallFields) {
        Field F = Field::build(p, r);
        std::int64_t q = F.q;
        // quadratic character against brute-force squares
        std::vector<char> sq(q, 0);
        for (std::int64_t x = 1; x < q; ++x) sq[F.mul(x, x)] = 1;
        bool ok = F.phi(0) == 0;
        for (std::int64_t x = 1; x < q; ++x)
            ok = ok && F.phi(x) == (sq[x] ? 1 : -1);
        s.add("phi table q=" + std::to_string(q), ok);
        // field axioms on a sample
        bool ax = true;
        for (std::int64_t x = 1; x < q; ++x) {
            ax = ax && F.mul(x, F.inv(x)) == 1;
            ax = ax && F.add(x, F.neg(x)) == 0;
        }
        s.add("inverses q=" + std::to_string(q), ax);
        // gauss sum magnitudes
        GaussSumTable gs = gauss_sums(F);
        bool gok = std::abs(gs.values[0] - cplx(-1.0, 0.0)) < 1e-9;
        for (std::int64_t j = 1; j < q - 1; ++j)
            gok = gok && std::fabs(std::norm(gs.values[j]) - (double)q) < 1e-6;
        s.add("gauss magnitude q=" + std::to_string(q), gok);
        // Jacobi sums: direct vs Gauss-sum quotient, exhaustive
        bool jok = true;
        for (std::int64_t ja = 0; ja < q - 1 && jok; ++ja)
            for (std::int64_t jb = 0; jb < q - 1 && jok; ++jb)
                jok = std::abs(jacobi_sum_direct(F, ja, jb) -
                               jacobi_sum(F, gs, ja, jb)) < 1e-6;
        s.add("jacobi dual route q=" + std::to_string(q), jok);
    }
    {
        // DFT cross-check above the naive threshold
        Field F = Field::build(4099, 1);
        GaussSumTable a = gauss_sums(F, DftMethod::Naive);
        GaussSumTable b = gauss_sums(F, DftMethod::Fast);
        double worst = 0;
        for (size_t j = 0; j < a.values.size(); ++j)
            worst = std::max(worst, std::abs(a.values[j] - b.values[j]));
        std::ostringstream d;
        d << "max |naive-fast| = " << worst;
        s.add("dft bluestein q=4099", worst < 1e-6, d.str());
    }
    return s.out;
}

std::vector<CheckResult> verify_identities(int threads) {
    Suite s;
    for (std::int64_t q : {5, 7, 11, 13, 17, 19, 23}) {
        Field F = Field::build(q, 1);
        GaussSumTable gs = gauss_sums(F);
        bool ok21 = true, ok32 = true, sp = true;
        for (std::int64_t x = 2; x < q; ++x) {
            ScaledHyperValue v = f21_scaled(F, x);
            cplx direct = greene_f21(F, gs, x);
            ok21 = ok21 && std::abs(direct - cplx((double)v.scaled)) < 1e-4;
            ScaledHyperValue w = f32_scaled(F, x, &gs);
            cplx direct32 = greene_f32(F, gs, x);
            ok32 = ok32 && std::abs(direct32 - cplx((double)w.scaled)) < 1e-4;
        }
        // special value: q * 2F1(1) = -phi(-1); sweeps pin +1 instead
        sp = std::abs(greene_f21(F, gs, 1) -
                      cplx(-(double)F.phi(F.minus_one()))) < 1e-6;
        s.add("trace identity 2F1 q=" + std::to_string(q), ok21);
        s.add("trace identity 3F2 q=" + std::to_string(q), ok32);
        s.add("2F1(1) special value q=" + std::to_string(q), sp);
    }
    {
        Field F = Field::build(7, 1);
        auto sw = sweep(F, Family::F21, threads);
        std::vector<std::int64_t> got;
        for (auto& v : sw) got.push_back(v.scaled);
        bool pin = got == std::vector<std::int64_t>{0, 1, 4, 0, 0, 0, -4};
        s.add("pinned sweep q=7", pin);
        s.add("pinned sweep sum q=7",
              empirical_moment(sw, 1) == 1);
        GaussSumTable gs = gauss_sums(F);
        s.add("2F1(1) = 1/q at q=7",
              std::abs(greene_f21(F, gs, 1) - cplx(1.0)) < 1e-6);
    }
    {
        Field F = Field::build(5, 1);
        auto sw = sweep(F, Family::F21, threads);
        s.add("pinned sweep sum q=5", empirical_moment(sw, 1) == 3);
        s.add("pinned sweep sum-sq q=5", empirical_moment(sw, 2) == 13);
    }
    for (std::int64_t q : {7, 11, 19, 23}) {
        // reflection for q = 3 mod 4
        Field F = Field::build(q, 1);
        bool ok = true;
        for (std::int64_t lam = 2; lam < q; ++lam) {
            std::int64_t other = F.sub(1, lam);
            if (other == 0 || other == 1) continue;
            ok = ok && f21_scaled(F, lam).scaled ==
                           -f21_scaled(F, other).scaled;
        }
        s.add("2F1 reflection q=" + std::to_string(q), ok);
    }
    for (std::int64_t q : {7, 13}) {
        Field F = Field::build(q, 1);
        GaussSumTable gs = gauss_sums(F);
        bool ok = true;
        for (std::int64_t mu = 2; mu < q; ++mu) {
            std::int64_t other = F.inv(mu);
            std::int64_t lhs = F.phi(F.neg(mu)) * f32_scaled(F, other, &gs).scaled;
            ok = ok && lhs == f32_scaled(F, mu, &gs).scaled;
        }
        s.add("3F2 inversion q=" + std::to_string(q), ok);
    }
    for (auto [p, r] : kSmallFields) {
        Field F = Field::build(p, r);
        bool ok = true;
        for (std::int64_t lam = 2; lam < F.q && ok; ++lam)
            ok = torsion_flags(F, lam) == torsion_flags_bruteforce(F, lam);
        s.add("torsion flags q=" + std::to_string(F.q), ok);
    }
    {
        Field F = Field::build(7, 1);
        s.add("K3 point count q=7",
              k3_prediction(F, F.neg(4)) == 192,
              std::to_string(k3_prediction(F, F.neg(4))));
    }
    {
        ClassNumberTable tab = ClassNumberTable::tabulate(4 * 29, threads);
        for (std::int64_t q : {5, 13, 17, 29}) {
            Field F = Field::build(q, 1);
            auto sw = sweep(F, Family::F21, threads);
            BigInt emp = empirical_moment(sw, 1);
            FormulaRhs printed = formula_rhs_f21(q, 1, 1, tab);
            std::ostringstream d;
            d << "empirical " << emp << " vs printed " << rstr(printed.value)
              << "; gap is the lambda=1 convention, q*2F1(1) = -phi(-1) "
                 "while sweeps store +1";
            s.warn("odd-moment printed formula q=" + std::to_string(q),
                   Rat(emp) == printed.value, d.str());
            Rat inter = case4_intermediate_rhs(q, q, 1, tab);
            s.add("odd-moment decomposition q=" + std::to_string(q),
                  Rat(emp) == inter,
                  "empirical " + emp.str() + " vs " + rstr(inter));
        }
    }
    return s.out;
}

std::vector<CheckResult> verify_schoof(int threads) {
    Suite s;
    ClassNumberTable tab = ClassNumberTable::tabulate(4 * 200, threads);
    const std::vector<std::pair<std::int64_t, int>> fields = {
        {5, 1}, {7, 1}, {11, 1}, {13, 1}, {17, 1}, {19, 1}, {23, 1},
        {5, 2}, {7, 2}};
    for (auto [p, r] : fields) {
        Field F = Field::build(p, r);
        CurveCensus cen = census(F, threads);
        std::int64_t q = F.q;
        std::int64_t smax = (std::int64_t)std::sqrt(4.0 * (double)q) + 1;
        while (smax * smax > 4 * q) --smax;
        bool ok = true;
        std::string first;
        for (std::int64_t sgn : {1, -1})
            for (std::int64_t sv = 2; sv <= smax; sv += 2) {
                std::int64_t sval = sgn * sv;
                SchoofResult sr = schoof_count(q, p, sval, 2, tab);
                if (sr.status == SchoofStatus::Silent) continue;
                std::int64_t cnt = 0;
                for (const auto& c : cen.classes)
                    if (c.trace == sval && c.full_2_torsion) ++cnt;
                Rat expect =
                    sr.status == SchoofStatus::NoCurves ? Rat(0) : sr.value;
                if (Rat(cnt) != expect && first.empty()) {
                    ok = false;
                    std::ostringstream d;
                    d << "s=" << sval << " census " << cnt << " formula "
                      << rstr(expect);
                    first = d.str();
                }
            }
        s.add("schoof vs census q=" + std::to_string(q), ok, first);
    }
    for (std::int64_t p : {5, 7, 11, 13}) {
        Field F = Field::build(p, 2);
        CurveCensus cen = census(F, threads);
        std::int64_t cnt = 0;
        for (const auto& c : cen.classes)
            if (c.trace == 2 * p || c.trace == -2 * p) ++cnt;
        std::int64_t sp = supersingular_count(p);
        s.add("supersingular |I(2p,p^2)| p=" + std::to_string(p),
              cnt == 2 * sp,
              "census " + std::to_string(cnt) + " vs 2*S(p)=" +
                  std::to_string(2 * sp));
    }
    return s.out;
}

std::vector<CheckResult> verify_eichler(int threads) {
    Suite s;
    ClassNumberTable tab = ClassNumberTable::tabulate(2000, threads);
    auto [l5, r5] = eichler_check(5, tab);
    s.add("eichler N=5", l5 == Rat(1) && r5 == Rat(1), rstr(l5));
    auto [l9, r9] = eichler_check(9, tab);
    s.add("eichler N=9", l9 == Rat(11, 6) && r9 == Rat(11, 6), rstr(l9));
    bool ok = true;
    std::string first;
    for (std::int64_t N = 1; N <= 2000; N += 2) {
        auto [lhs, rhs] = eichler_check(N, tab);
        if (lhs != rhs && first.empty()) {
            ok = false;
            first = "N=" + std::to_string(N) + ": " + rstr(lhs) +
                    " != " + rstr(rhs);
        }
    }
    s.add("eichler odd N <= 2000", ok, first);
    return s.out;
}

std::vector<CheckResult> verify_rc(int threads) {
    (void)threads;
    Suite s;
    {
        auto [lhs, rhs] = comb_lemma(1, 0);
        s.add("comb lemma pinned (1,0)", lhs == Rat(16) && rhs == Rat(16),
              rstr(lhs));
    }
    bool ok = true;
    std::string first;
    for (long long nu = 1; nu <= 6 && ok; ++nu)
        for (long long j = 0; j <= 2 * nu + 1 && ok; ++j) {
            auto [lhs, rhs] = comb_lemma(nu, j);
            if (lhs != rhs) {
                ok = false;
                first = "nu=" + std::to_string(nu) + " j=" + std::to_string(j);
            }
        }
    s.add("comb lemma nu<=6", ok, first);
    ok = true;
    first.clear();
    for (long long nu = 0; nu <= 6 && ok; ++nu)
        for (long long mu = 0; mu <= nu && ok; ++mu)
            for (long long j = 0; j <= 2 * nu + 1 && ok; ++j) {
                auto [a, b] = comb_lemma2_checks(nu, mu, j);
                if (!a || !b) {
                    ok = false;
                    first = "nu=" + std::to_string(nu) +
                            " mu=" + std::to_string(mu) +
                            " j=" + std::to_string(j);
                }
            }
    s.add("comb lemma 2 nu<=6", ok, first);
    ok = true;
    for (long long nu = 0; nu <= 4 && ok; ++nu)
        for (long long u = 2; u <= 6 && ok; ++u)
            for (long long v = 1; v < u && ok; ++v)
                ok = prop_poly_identity_check(nu, u, v);
    s.add("P-polynomial proposition nu<=4", ok);
    {
        s.add("P_{3,3}(1,1)", pab(3, 3, 1, 1) == Rat(4));
        bool triv = true;
        for (int b = -3; b <= 3; ++b)
            triv = triv && pab(2, Rat(b, 2), Rat(5, 3), Rat(-7, 2)) == Rat(1);
        s.add("P_{2,b} constant", triv);
        std::mt19937 rng(12345);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
        bool alt = true;
        for (long long a = 3; a <= 8 && alt; ++a)
            for (int b2 : {-3, -1, 5, 7}) {
                Rat b(b2, 2);
                for (int t = 0; t < 20 && alt; ++t) {
                    Rat X(num(rng), den(rng)), Y(num(rng), den(rng));
                    alt = pab(a, b, X, Y) == pab_alt(a, b, X, Y);
                }
            }
        s.add("P_{a,b} alternate form a<=8", alt);
    }
    ok = true;
    for (long long n = 1; n <= 10; ++n) ok = ok && cohen_vanishing(n) == 0;
    s.add("cohen vanishing n<=10", ok);
    {
        s.add("gamma ratio at half-integers",
              gamma_ratio(Rat(1, 2), 2) == Rat(3, 4));
        bool kp = true;
        for (long long nu = 0; nu <= 6; ++nu) kp = kp && kappa(3, 3, nu).half == 1;
        s.add("kappa rational multiple of sqrt(pi)", kp);
        s.add("kappa nu=0 pinned", kappa(3, 3, 0).coeff == Rat(1));
    }
    {
        // b(r) at nu=0 reproduces the chi_{-4} square-difference term
        const long long B = 200;
        std::vector<Rat> cf(B * B + 1, Rat(0)), ag(B * B + 1, Rat(0));
        for (long long v = 1; v <= B; ++v) cf[v * v] = Rat(1, 4);
        for (long long t = 1; t <= B; ++t)
            ag[t * t] = Rat(chi_m4(t)) * t;
        ok = true;
        first.clear();
        for (long long r = 1; r <= 100 && ok; ++r) {
            Rat direct = 0;
            for (long long t = 2; t <= (r + 1) / 2 + 1; ++t)
                for (long long lv = 1; lv < t; ++lv)
                    if (t * t - lv * lv == r)
                        direct += Rat(chi_m4(t), 4) * (t - lv) * (t - lv);
            Rat br = mertens_br_coefficient(r, 0, cf, ag);
            if (br != direct) {
                ok = false;
                first = "r=" + std::to_string(r) + ": " + rstr(br) +
                        " != " + rstr(direct);
            }
        }
        s.add("mertens b(r) nu=0 vs direct", ok, first);
    }
    {
        // bracket on formal q-series vs the explicit coefficient display
        ClassNumberTable tab = ClassNumberTable::tabulate(200, 1);
        const long long N = 200;
        std::vector<Rat> hplus(N + 1, Rat(0));
        hplus[0] = Rat(-1, 12);
        for (long long n = 1; n <= N; ++n) hplus[n] = tab.Hstar(n);
        std::vector<Rat> g(N + 1, Rat(0));
        for (long long t = 1; t * t <= N; ++t)
            g[t * t] = Rat(chi_m4(t)) * t;
        ok = true;
        first.clear();
        for (long long nu = 0; nu <= 2 && ok; ++nu) {
            std::vector<Rat> br = bracket_qseries(hplus, g, 3, 3, nu);
            std::vector<Rat> cc = cusp_coeffs_2f1(N, nu, tab);
            Rat mid_scale = genbinom(Rat(2 * nu + 1), nu + 1);
            for (int i = 0; i < 2 * (int)nu + 2; ++i) mid_scale /= 2;
            Rat last_scale = kappa(3, 3, nu).coeff / 8;
            for (long long n = 1; n <= N && ok; ++n) {
                // strip the middle and last corrections off c(n)
                Rat expect = cc[n - 1];
                for (long long t = 2; 2 * t - 1 <= n; ++t) {
                    if (chi_m4(t) == 0) continue;
                    for (long long lv = 1; lv < t; ++lv)
                        if (t * t - lv * lv == n) {
                            Rat d = 1;
                            for (int i = 0; i < 2 * (int)nu + 2; ++i)
                                d *= t - lv;
                            expect -= mid_scale * chi_m4(t) * d;
                        }
                }
                long long rt = (long long)std::llround(std::sqrt((double)n));
                if (rt * rt == n) {
                    Rat d = 1;
                    for (int i = 0; i < 2 * (int)nu + 2; ++i) d *= rt;
                    expect -= last_scale * chi_m4(rt) * d;
                }
                if (br[n] != expect) {
                    ok = false;
                    first = "nu=" + std::to_string(nu) +
                            " n=" + std::to_string(n);
                }
            }
        }
        s.add("bracket q-series vs explicit display", ok, first);
    }
    {
        ClassNumberTable tab = ClassNumberTable::tabulate(12, 1);
        std::vector<Rat> c = cusp_coeffs_2f1(4, 0, tab);
        s.add("cusp coefficient c(1)", c[0] == Rat(1, 24), rstr(c[0]));
    }
    return s.out;
}

std::vector<CheckResult> verify_clausen(int threads) {
    Suite s;
    ClassNumberTable tab = ClassNumberTable::tabulate(4 * 200, threads);
    for (std::int64_t q : {7, 11, 13, 17, 19, 23}) {
        Field F = Field::build(q, 1);
        CurveCensus cen = census(F, threads);
        std::int64_t smax = (std::int64_t)std::sqrt(4.0 * (double)q);
        while (smax * smax > 4 * q) --smax;
        bool ok = true;
        std::string first;
        int applicable = 0;
        for (std::int64_t sv = 2; sv <= smax; sv += 2)
            for (int n = 1; n <= 2; ++n) {
                ClausenMomentCheck c =
                    clausen_even_moment_check(F, cen, sv, n, tab);
                if (!c.applicable) continue;
                ++applicable;
                if (!(c.plain_ok && c.twisted_ok && c.bound_ok)) {
                    ok = false;
                    if (first.empty())
                        first = "s=" + std::to_string(sv) +
                                " n=" + std::to_string(n);
                }
            }
        s.add("clausen even moments q=" + std::to_string(q), ok,
              first.empty() ? std::to_string(applicable) + " applicable"
                            : first);
    }
    return s.out;
}

std::vector<CheckResult> verify_suite(const std::string& suite, int threads) {
    if (suite == "fields") return verify_fields(threads);
    if (suite == "identities") return verify_identities(threads);
    if (suite == "schoof") return verify_schoof(threads);
    if (suite == "eichler") return verify_eichler(threads);
    if (suite == "rc") return verify_rc(threads);
    if (suite == "clausen") return verify_clausen(threads);
    std::vector<CheckResult> all;
    for (const char* name :
         {"fields", "identities", "schoof", "eichler", "rc", "clausen"}) {
        auto part = verify_suite(name, threads);
        all.insert(all.end(), part.begin(), part.end());
    }
    return all;
}

bool all_passed(const std::vector<CheckResult>& results) {
    for (const auto& r : results)
        if (r.status == CheckStatus::Fail) return false;
    return true;
}

}  // namespace ffh
