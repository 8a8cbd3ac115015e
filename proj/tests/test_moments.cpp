#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "ffhyper/moments.hpp"

using namespace ffh;

TEST_CASE("empirical moments pinned") {
    Field F7 = Field::build(7, 1);
    auto sw7 = sweep(F7, Family::F21);
    CHECK(empirical_moment(sw7, 1) == 1);
    CHECK(empirical_moment(sw7, 2) == 33);
    Field F5 = Field::build(5, 1);
    auto sw5 = sweep(F5, Family::F21);
    CHECK(empirical_moment(sw5, 2) == 13);
}

TEST_CASE("reference moments") {
    CHECK(reference_moment(Family::F21, 2) == Rat(1));
    CHECK(reference_moment(Family::F21, 4) == Rat(2));
    CHECK(reference_moment(Family::F21, 6) == Rat(5));
    CHECK(reference_moment(Family::F32, 2) == Rat(1));
    CHECK(reference_moment(Family::F32, 4) == Rat(3));
    CHECK(reference_moment(Family::F32, 6) == Rat(15));
    CHECK(reference_moment(Family::F32, 3) == Rat(0));
}

TEST_CASE("weighted class sums pinned") {
    ClassNumberTable tab = ClassNumberTable::tabulate(100);
    CHECK(weighted_class_sum(7, 7, 2, 4, 4, tab) == Rat(32, 3));
    CHECK(weighted_class_sum(5, 5, 1, 8, 4, tab) == Rat(-1));
    CHECK(weighted_class_sum(5, 5, 2, 4, 4, tab) == Rat(4));
}

TEST_CASE("formula rhs cases") {
    ClassNumberTable tab = ClassNumberTable::tabulate(200);
    FormulaRhs c1 = formula_rhs_f21(7, 1, 2, tab);
    CHECK(c1.case_id == 1);
    CHECK(c1.value == Rat(33));
    FormulaRhs c3 = formula_rhs_f21(7, 1, 3, tab);
    CHECK(c3.case_id == 3);
    CHECK(c3.value == Rat(1));
    FormulaRhs c2 = formula_rhs_f21(7, 2, 2, tab);
    CHECK(c2.case_id == 2);
    CHECK(c2.band > 0);
    FormulaRhs c4 = formula_rhs_f21(5, 1, 1, tab);
    CHECK(c4.case_id == 4);
    CHECK(c4.value == Rat(1));
    // the deduced decomposition tracks the sweeps instead
    Field F5 = Field::build(5, 1);
    CHECK(Rat(empirical_moment(sweep(F5, Family::F21), 1)) ==
          case4_intermediate_rhs(5, 5, 1, tab));
}

TEST_CASE("densities and batman moments") {
    CHECK(semicircle_density(0.0) ==
          doctest::Approx(1.0 / 3.14159265358979323846));
    CHECK(semicircle_density(2.5) == 0.0);
    CHECK(batman_density(3.5) == 0.0);
    BatmanMoment m0 = batman_moment(0);
    CHECK(m0.exact == Rat(1));
    CHECK(m0.quad == doctest::Approx(1.0).epsilon(1e-8));
    for (int m : {2, 4, 6}) {
        BatmanMoment bm = batman_moment(m);
        CHECK(bm.exact == bm.series);
        CHECK(std::fabs(bm.quad - (double)bm.exact) <=
              1e-6 * (double)bm.exact);
    }
    CHECK(batman_moment(2).exact == Rat(1));
    CHECK(batman_moment(4).exact == Rat(3));
    CHECK(batman_moment(6).exact == Rat(15));
    // odd m: the signed Catalan sum is nonzero but the even density kills
    // the integral
    CHECK(batman_moment(3).exact == Rat(-1));
    CHECK(std::fabs(batman_moment(3).quad) < 1e-8);
    CHECK(std::fabs(batman_moment(5).quad) < 1e-8);
}

TEST_CASE("histogram q=7 four bins") {
    Field F = Field::build(7, 1);
    auto sw = sweep(F, Family::F21);
    EmpiricalHistogram h = ks_and_histogram(sw, Family::F21, 7, 4);
    CHECK(h.total == 7);
    CHECK(h.counts == std::vector<long long>{1, 0, 5, 1});
    CHECK(h.ks >= 0.0);
    CHECK(h.ks <= 1.0);
}

TEST_CASE("clausen even moment check gates") {
    Field F = Field::build(11, 1);
    CurveCensus cen = census(F);
    ClassNumberTable tab = ClassNumberTable::tabulate(4 * 11);
    ClausenMomentCheck c = clausen_even_moment_check(F, cen, 2, 1, tab);
    if (c.applicable) {
        CHECK(c.plain_ok);
        CHECK(c.twisted_ok);
        CHECK(c.bound_ok);
    } else {
        CHECK(!c.reason.empty());
    }
}
