#include "ffhyper/curves.hpp"

#include <algorithm>
#include <map>
#include <optional>
#include <stdexcept>

#include "ffhyper/parallel.hpp"

namespace ffh {

TraceRecord legendre_trace(const Field& F, std::int64_t lambda) {
    if (lambda == 0 || lambda == 1)
        throw std::domain_error("Legendre curve is singular at lambda in {0,1}");
    TraceRecord rec;
    rec.lambda = lambda;
    rec.family = CurveFamily::Legendre;
    std::int64_t s = 0;
    if (F.r == 1) {
        const std::int64_t p = F.p;
        for (std::int64_t x = 0; x < p; ++x) {
            std::int64_t x1 = x ? x - 1 : p - 1;
            std::int64_t xl = x >= lambda ? x - lambda : x - lambda + p;
            s += F.phi_[x] * F.phi_[x1] * F.phi_[xl];
        }
    } else {
        for (std::int64_t x = 0; x < F.q; ++x)
            s += F.phi_[x] * F.phi_[F.sub(x, 1)] * F.phi_[F.sub(x, lambda)];
    }
    rec.a = -s;
    // j = 2^8 (l^2 - l + 1)^3 / (l^2 (l-1)^2)
    std::int64_t l2 = F.mul(lambda, lambda);
    std::int64_t num = F.add(F.sub(l2, lambda), 1);
    num = F.mul(F.mul(num, num), num);
    std::int64_t lm1 = F.sub(lambda, 1);
    std::int64_t den = F.mul(l2, F.mul(lm1, lm1));
    std::int64_t c256 = 1;
    for (int i = 0; i < 8; ++i) c256 = F.add(c256, c256);
    rec.j_invariant = F.mul(F.mul(c256, num), F.inv(den));
    rec.has_j = true;
    return rec;
}

TraceRecord clausen_trace(const Field& F, std::int64_t lambda) {
    if (lambda == 0 || lambda == F.minus_one())
        throw std::domain_error("Clausen curve is singular at lambda in {0,-1}");
    TraceRecord rec;
    rec.lambda = lambda;
    rec.family = CurveFamily::Clausen;
    std::int64_t s = 0;
    if (F.r == 1) {
        const std::int64_t p = F.p;
        for (std::int64_t x = 0; x < p; ++x) {
            std::int64_t x1 = x ? x - 1 : p - 1;
            std::int64_t x2l = (x * x + lambda) % p;
            s += F.phi_[x1] * F.phi_[x2l];
        }
    } else {
        for (std::int64_t x = 0; x < F.q; ++x)
            s += F.phi_[F.sub(x, 1)] * F.phi_[F.add(F.mul(x, x), lambda)];
    }
    rec.a = -s;
    return rec;
}

std::int64_t naive_point_count(const Field& F, std::int64_t a2,
                               std::int64_t a4, std::int64_t a6) {
    std::int64_t n = 1;  // point at infinity
    for (std::int64_t x = 0; x < F.q; ++x) {
        std::int64_t f = F.add(F.mul(F.add(F.mul(F.add(x, a2), x), a4), x), a6);
        n += 1 + F.phi_[f];
    }
    return n;
}

namespace {

// Small nonnegative constants 0..p-1 encode themselves as field elements.
std::int64_t cst(const Field& F, std::int64_t c) { return c % F.p; }

bool cubic_nonsingular(const Field& F, std::int64_t a2, std::int64_t a4,
                       std::int64_t a6) {
    // discriminant of x^3 + a2 x^2 + a4 x + a6 (nonzero iff distinct roots)
    // 18 a2 a4 a6 - 4 a2^3 a6 + a2^2 a4^2 - 4 a4^3 - 27 a6^2
    auto m = [&](std::int64_t a, std::int64_t b) { return F.mul(a, b); };
    std::int64_t t1 = m(cst(F, 18), m(m(a2, a4), a6));
    std::int64_t t2 = m(cst(F, 4), m(m(m(a2, a2), a2), a6));
    std::int64_t t3 = m(m(a2, a2), m(a4, a4));
    std::int64_t t4 = m(cst(F, 4), m(m(a4, a4), a4));
    std::int64_t t5 = m(cst(F, 27), m(a6, a6));
    std::int64_t disc = F.sub(F.add(F.sub(t1, t2), t3), F.add(t4, t5));
    return disc != 0;
}

struct Point {
    std::int64_t x = 0, y = 0;
    bool inf = true;
};

// Affine addition on y^2 = x^3 + Ax + B.
Point pt_add(const Field& F, std::int64_t A, const Point& P, const Point& Q) {
    if (P.inf) return Q;
    if (Q.inf) return P;
    if (P.x == Q.x) {
        if (F.add(P.y, Q.y) == 0) return {};
        // doubling
        std::int64_t num = F.add(F.mul(3 % F.p, F.mul(P.x, P.x)), A);
        std::int64_t den = F.add(P.y, P.y);
        std::int64_t s = F.mul(num, F.inv(den));
        std::int64_t x3 = F.sub(F.mul(s, s), F.add(P.x, Q.x));
        std::int64_t y3 = F.sub(F.mul(s, F.sub(P.x, x3)), P.y);
        return {x3, y3, false};
    }
    std::int64_t s = F.mul(F.sub(Q.y, P.y), F.inv(F.sub(Q.x, P.x)));
    std::int64_t x3 = F.sub(F.mul(s, s), F.add(P.x, Q.x));
    std::int64_t y3 = F.sub(F.mul(s, F.sub(P.x, x3)), P.y);
    return {x3, y3, false};
}

std::optional<std::int64_t> field_sqrt(const Field& F, std::int64_t x) {
    if (x == 0) return 0;
    std::int64_t k = F.dlog_[x];
    if (k % 2) return std::nullopt;
    return F.exp_[k / 2];
}

std::vector<Point> enumerate_points(const Field& F, std::int64_t A,
                                    std::int64_t B) {
    std::vector<Point> pts;
    pts.push_back({});  // infinity
    for (std::int64_t x = 0; x < F.q; ++x) {
        std::int64_t f = F.add(F.mul(F.add(F.mul(x, x), A), x), B);
        if (f == 0) {
            pts.push_back({x, 0, false});
        } else if (F.phi_[f] == 1) {
            std::int64_t y = *field_sqrt(F, f);
            pts.push_back({x, y, false});
            pts.push_back({x, F.neg(y), false});
        }
    }
    return pts;
}

// #E[4](F_q) == 16 by quadrupling every rational point.
bool has_z4z4_short(const Field& F, std::int64_t A, std::int64_t B) {
    auto pts = enumerate_points(F, A, B);
    int killed = 0;
    for (const auto& P : pts) {
        Point Q = pt_add(F, A, P, P);
        Q = pt_add(F, A, Q, Q);
        if (Q.inf) ++killed;
    }
    return killed == 16;
}

int cubic_root_count(const Field& F, std::int64_t A, std::int64_t B) {
    int roots = 0;
    for (std::int64_t x = 0; x < F.q; ++x)
        if (F.add(F.mul(F.add(F.mul(x, x), A), x), B) == 0) ++roots;
    return roots;
}

std::int64_t j_invariant_short(const Field& F, std::int64_t A,
                               std::int64_t B) {
    // j = 1728 * 4A^3 / (4A^3 + 27B^2)
    std::int64_t a3 = F.mul(cst(F, 4), F.mul(F.mul(A, A), A));
    std::int64_t den = F.add(a3, F.mul(cst(F, 27), F.mul(B, B)));
    return F.mul(F.mul(cst(F, 1728), a3), F.inv(den));
}

}  // namespace

bool twist_trace_check(const Field& F, std::int64_t a2, std::int64_t a4,
                       std::int64_t a6, std::int64_t d) {
    if (d == 0) throw std::domain_error("twist by zero");
    if (!cubic_nonsingular(F, a2, a4, a6))
        throw std::domain_error("singular cubic");
    std::int64_t n = naive_point_count(F, a2, a4, a6);
    // E_d: y^2 = d x^3 + d a2 x^2 + d a4 x + d a6
    std::int64_t nd = 1;
    for (std::int64_t x = 0; x < F.q; ++x) {
        std::int64_t f =
            F.add(F.mul(F.add(F.mul(F.add(x, a2), x), a4), x), a6);
        nd += 1 + F.phi_[F.mul(d, f)];
    }
    std::int64_t lhs = F.q + 1 - n;
    std::int64_t rhs = F.phi_[d] * (F.q + 1 - nd);
    return lhs == rhs;
}

std::pair<bool, bool> torsion_flags(const Field& F, std::int64_t lambda) {
    if (lambda == 0 || lambda == 1)
        throw std::domain_error("singular lambda");
    bool z4 = F.q % 4 == 1 && F.phi_[lambda] == 1 &&
              F.phi_[F.sub(1, lambda)] == 1;
    return {true, z4};
}

std::pair<std::int64_t, std::int64_t> legendre_short_model(
    const Field& F, std::int64_t lambda) {
    // depress x^3 - (1+lambda) x^2 + lambda x
    std::int64_t a2 = F.neg(F.add(1, lambda));
    std::int64_t a4 = lambda;
    std::int64_t inv3 = F.inv(3 % F.p);
    std::int64_t inv27 = F.mul(inv3, F.mul(inv3, inv3));
    std::int64_t A = F.sub(a4, F.mul(F.mul(a2, a2), inv3));
    std::int64_t a2cubed = F.mul(F.mul(a2, a2), a2);
    std::int64_t B = F.sub(F.mul(F.add(a2cubed, a2cubed), inv27),
                           F.mul(F.mul(a2, a4), inv3));
    return {A, B};
}

std::pair<bool, bool> torsion_flags_bruteforce(const Field& F,
                                               std::int64_t lambda) {
    auto [A, B] = legendre_short_model(F, lambda);
    return {cubic_root_count(F, A, B) == 3, has_z4z4_short(F, A, B)};
}

std::pair<std::int64_t, std::int64_t> canonical_model(const Field& F,
                                                      std::int64_t A,
                                                      std::int64_t B) {
    std::int64_t bestA = A, bestB = B;
    std::int64_t n = F.q - 1;
    std::int64_t ka = A ? F.dlog_[A] : -1;
    std::int64_t kb = B ? F.dlog_[B] : -1;
    for (std::int64_t k = 0; k < n; ++k) {
        std::int64_t cA = A ? F.exp_[(ka + 4 * k) % n] : 0;
        std::int64_t cB = B ? F.exp_[(kb + 6 * k) % n] : 0;
        if (cA < bestA || (cA == bestA && cB < bestB)) {
            bestA = cA;
            bestB = cB;
        }
    }
    return {bestA, bestB};
}

CurveCensus census(const Field& F, int threads) {
    if (F.q > 2500) throw std::length_error("census limited to q <= 2500");
    CurveCensus out;
    out.q = F.q;

    // canonical key -> member count, accumulated per worker over disjoint
    // A-ranges and merged into an ordered map
    int workers = std::max(threads, 1);
    std::int64_t chunk = (F.q + workers - 1) / workers;
    std::vector<std::map<std::int64_t, std::int64_t>> partial(workers);
    parallel_for(F.q, workers, [&](std::int64_t lo, std::int64_t hi) {
        auto& acc = partial[size_t(lo / chunk)];
        for (std::int64_t A = lo; A < hi; ++A) {
            for (std::int64_t B = 0; B < F.q; ++B) {
                if (!cubic_nonsingular(F, 0, A, B)) continue;
                auto [cA, cB] = canonical_model(F, A, B);
                acc[cA * F.q + cB] += 1;
            }
        }
    });
    std::map<std::int64_t, std::int64_t> merged;
    for (auto& m : partial)
        for (auto& [k, v] : m) merged[k] += v;

    for (auto& [key, count] : merged) {
        CurveClass c;
        c.rep_a = key / F.q;
        c.rep_b = key % F.q;
        c.member_count = count;
        out.equations += count;
        c.trace = F.q + 1 - naive_point_count(F, 0, c.rep_a, c.rep_b);
        c.full_2_torsion = cubic_root_count(F, c.rep_a, c.rep_b) == 3;
        c.z4z4 = has_z4z4_short(F, c.rep_a, c.rep_b);
        c.j_invariant = j_invariant_short(F, c.rep_a, c.rep_b);
        out.classes.push_back(c);
    }
    return out;
}

std::vector<std::int64_t> legendre_class(const Field& F, std::int64_t lambda) {
    auto [A, B] = legendre_short_model(F, lambda);
    auto key = canonical_model(F, A, B);
    std::vector<std::int64_t> out;
    for (std::int64_t beta = 0; beta < F.q; ++beta) {
        if (beta == 0 || beta == 1) continue;
        auto [A2, B2] = legendre_short_model(F, beta);
        if (canonical_model(F, A2, B2) == key) out.push_back(beta);
    }
    return out;
}

std::vector<std::int64_t> clausen_lambda_set(const Field& F, std::int64_t s) {
    std::vector<std::int64_t> out;
    for (std::int64_t lam = 0; lam < F.q; ++lam) {
        if (lam == 0 || lam == F.minus_one()) continue;
        std::int64_t a = clausen_trace(F, lam).a;
        if (a == s || a == -s) out.push_back(lam);
    }
    return out;
}

std::int64_t k3_prediction(const Field& F, std::int64_t lambda) {
    if (lambda == 0 || lambda == F.minus_one())
        throw std::domain_error("singular lambda");
    std::int64_t mu = F.neg(lambda);
    std::int64_t a = clausen_trace(F, F.mul(mu, F.inv(F.sub(1, mu)))).a;
    std::int64_t phi_factor = F.phi_[F.sub(1, mu)];
    std::int64_t scaled = phi_factor * (a * a - F.q);
    return 1 + F.q * F.q + 19 * F.q + scaled;
}

}  // namespace ffh
