#pragma once

#include <utility>
#include <vector>

#include "ffhyper/field.hpp"

namespace ffh {

enum class CurveFamily { Legendre, Clausen };

struct TraceRecord {
    std::int64_t lambda = 0;
    CurveFamily family = CurveFamily::Legendre;
    std::int64_t a = 0;           // trace of Frobenius
    std::int64_t j_invariant = 0; // valid for the Legendre family
    bool has_j = false;
};

// a = -sum_x phi(x(x-1)(x-lambda)); lambda not in {0,1}.
TraceRecord legendre_trace(const Field& F, std::int64_t lambda);

// a = -sum_x phi((x-1)(x^2+lambda)); lambda not in {0,-1}.
TraceRecord clausen_trace(const Field& F, std::int64_t lambda);

// |E(F_q)| for y^2 = x^3 + a2 x^2 + a4 x + a6, counted naively.
std::int64_t naive_point_count(const Field& F, std::int64_t a2,
                               std::int64_t a4, std::int64_t a6);

// Verifies q+1-|E| = phi(d) (q+1-|E_d|) for the twist y^2 = d*f(x).
bool twist_trace_check(const Field& F, std::int64_t a2, std::int64_t a4,
                       std::int64_t a6, std::int64_t d);

// (Z2xZ2 subgroup, Z4xZ4 subgroup) for E_lambda^Leg; the Z4xZ4 flag uses
// the square criterion for q = 1 mod 4.
std::pair<bool, bool> torsion_flags(const Field& F, std::int64_t lambda);

// Same flags from full group enumeration (#E[2], #E[4] over F_q).
std::pair<bool, bool> torsion_flags_bruteforce(const Field& F,
                                               std::int64_t lambda);

struct CurveClass {
    std::int64_t rep_a = 0, rep_b = 0;  // short Weierstrass representative
    std::int64_t trace = 0;
    bool full_2_torsion = false;
    bool z4z4 = false;
    std::int64_t member_count = 0;
    std::int64_t j_invariant = 0;
};

struct CurveCensus {
    std::int64_t q = 0;
    std::vector<CurveClass> classes;
    std::int64_t equations = 0;  // nonsingular (A,B) pairs enumerated
};

// Brute-force F_q-isomorphism census of y^2 = x^3 + Ax + B.
CurveCensus census(const Field& F, int threads = 1);

// Depressed short-Weierstrass model of E_lambda^Leg.
std::pair<std::int64_t, std::int64_t> legendre_short_model(const Field& F,
                                                           std::int64_t lambda);

// Canonical (A,B) under (A,B) ~ (u^4 A, u^6 B).
std::pair<std::int64_t, std::int64_t> canonical_model(const Field& F,
                                                      std::int64_t A,
                                                      std::int64_t B);

// L(lambda): all beta with E_beta^Leg isomorphic to E_lambda^Leg over F_q.
std::vector<std::int64_t> legendre_class(const Field& F, std::int64_t lambda);

// L(s,q): all lambda (not 0,-1) with Clausen trace +-s.
std::vector<std::int64_t> clausen_lambda_set(const Field& F, std::int64_t s);

// 1 + q^2 + 19q + q^2 * 3F2(-lambda), through the Clausen trace.
std::int64_t k3_prediction(const Field& F, std::int64_t lambda);

}  // namespace ffh
