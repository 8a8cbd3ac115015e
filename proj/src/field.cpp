#include "ffhyper/field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace ffh {

bool is_prime(std::int64_t n) {
    if (n < 2) return false;
    for (std::int64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

std::vector<std::int64_t> prime_factors(std::int64_t n) {
    std::vector<std::int64_t> out;
    for (std::int64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

namespace {

using Poly = std::vector<std::int64_t>;  // c_0..c_deg over F_p

Poly decode(std::int64_t x, std::int64_t p, int r) {
    Poly c(r, 0);
    for (int i = 0; i < r && x; ++i) {
        c[i] = x % p;
        x /= p;
    }
    return c;
}

std::int64_t encode(const Poly& c, std::int64_t p) {
    std::int64_t x = 0;
    for (int i = int(c.size()) - 1; i >= 0; --i) x = x * p + c[i];
    return x;
}

int degree(const Poly& a) {
    for (int i = int(a.size()) - 1; i >= 0; --i)
        if (a[i]) return i;
    return -1;
}

Poly poly_mod(Poly a, const Poly& f, std::int64_t p) {
    int df = degree(f);
    for (int i = int(a.size()) - 1; i >= df; --i) {
        if (!a[i]) continue;
        std::int64_t c = a[i];  // f monic
        for (int j = 0; j <= df; ++j) {
            a[i - df + j] = (a[i - df + j] - c * f[j]) % p;
            if (a[i - df + j] < 0) a[i - df + j] += p;
        }
    }
    a.resize(df);
    return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& f, std::int64_t p) {
    Poly c(a.size() + b.size(), 0);
    for (size_t i = 0; i < a.size(); ++i) {
        if (!a[i]) continue;
        for (size_t j = 0; j < b.size(); ++j)
            c[i + j] = (c[i + j] + a[i] * b[j]) % p;
    }
    return poly_mod(std::move(c), f, p);
}

Poly poly_powmod(Poly base, std::int64_t e, const Poly& f, std::int64_t p) {
    Poly acc(1, 1);
    while (e) {
        if (e & 1) acc = poly_mulmod(acc, base, f, p);
        base = poly_mulmod(base, base, f, p);
        e >>= 1;
    }
    return acc;
}

Poly poly_gcd(Poly a, Poly b, std::int64_t p) {
    auto modinv = [p](std::int64_t x) {
        std::int64_t acc = 1, e = p - 2;
        while (e) {
            if (e & 1) acc = acc * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return acc;
    };
    while (degree(b) >= 0) {
        // a mod b
        int db = degree(b);
        std::int64_t lead = modinv(b[db]);
        for (int i = degree(a); i >= db; --i) {
            if (!a[i]) continue;
            std::int64_t c = a[i] * lead % p;
            for (int j = 0; j <= db; ++j) {
                a[i - db + j] = (a[i - db + j] - c * b[j]) % p;
                if (a[i - db + j] < 0) a[i - db + j] += p;
            }
        }
        a.resize(db);
        std::swap(a, b);
    }
    return a;
}

// Rabin test: f of degree r is irreducible iff x^{p^r} = x mod f and
// gcd(x^{p^{r/l}} - x, f) = 1 for every prime l | r.
bool is_irreducible(const Poly& f, std::int64_t p, int r) {
    Poly x{0, 1};
    Poly t = x;
    std::vector<Poly> frob(r + 1);  // frob[i] = x^{p^i} mod f
    frob[0] = poly_mod(x, f, p);
    for (int i = 1; i <= r; ++i)
        frob[i] = poly_powmod(frob[i - 1], p, f, p);
    Poly xr = frob[r];
    xr.resize(std::max<size_t>(xr.size(), 2));
    if (degree(xr) != 1 || xr[1] != 1 || xr[0] != 0) return false;
    for (std::int64_t l : prime_factors(r)) {
        Poly d = frob[r / l];
        d.resize(std::max<size_t>(d.size(), 2));
        d[1] = (d[1] - 1 + p) % p;
        if (degree(poly_gcd(d, f, p)) != 0) return false;
    }
    return true;
}

}  // namespace

Field Field::build(std::int64_t p, int r, std::int64_t cap) {
    if (!is_prime(p)) throw std::invalid_argument("p is not prime");
    if (p < 5) throw std::invalid_argument("characteristic must be >= 5");
    if (r < 1) throw std::invalid_argument("extension degree must be >= 1");
    std::int64_t q = 1;
    for (int i = 0; i < r; ++i) {
        q *= p;
        if (q > cap) throw std::length_error("field size exceeds cap");
    }

    Field F;
    F.p = p;
    F.r = r;
    F.q = q;

    if (r == 1) {
        F.modulus = {0, 1};  // x - 0 is not monic-irreducible of deg 1 with
                             // zero constant? deg-1 moduli are all fine; use x.
    } else {
        // Smallest monic irreducible, coefficient vectors compared leading
        // coefficient first.
        std::int64_t count = 1;
        for (int i = 0; i < r; ++i) count *= p;
        bool found = false;
        for (std::int64_t k = 0; k < count && !found; ++k) {
            Poly f(r + 1, 0);
            f[r] = 1;
            // Constant term is the last lexicographic key, so it is k's
            // least significant base-p digit.
            std::int64_t t = k;
            for (int i = 0; i < r; ++i) {
                f[i] = t % p;
                t /= p;
            }
            if (is_irreducible(f, p, r)) {
                F.modulus = f;
                found = true;
            }
        }
        if (!found) throw std::logic_error("no irreducible polynomial found");
    }

    // Generator: least element of order q-1.
    auto factors = prime_factors(q - 1);
    F.g = 0;
    for (std::int64_t x = 2; x < q; ++x) {
        bool primitive = true;
        for (std::int64_t l : factors) {
            // pow without dlog tables
            std::int64_t acc = 1, base = x, e = (q - 1) / l;
            while (e) {
                if (e & 1) acc = F.mul_poly(acc, base);
                base = F.mul_poly(base, base);
                e >>= 1;
            }
            if (acc == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) {
            F.g = x;
            break;
        }
    }
    if (F.g == 0) throw std::logic_error("no generator found");

    F.exp_.resize(q - 1);
    F.dlog_.assign(q, -1);
    std::int64_t cur = 1;
    for (std::int64_t k = 0; k < q - 1; ++k) {
        F.exp_[k] = cur;
        if (F.dlog_[cur] != -1) throw std::logic_error("generator order too small");
        F.dlog_[cur] = k;
        cur = F.mul_poly(cur, F.g);
    }
    if (cur != 1) throw std::logic_error("generator power table did not close");

    F.phi_.assign(q, 0);
    for (std::int64_t k = 0; k < q - 1; ++k)
        F.phi_[F.exp_[k]] = (k % 2 == 0) ? 1 : -1;

    // Absolute trace tr(x) = sum_{i<r} x^{p^i}.
    F.trace_.assign(q, 0);
    if (r == 1) {
        for (std::int64_t x = 0; x < q; ++x) F.trace_[x] = std::int32_t(x);
    } else {
        for (std::int64_t x = 1; x < q; ++x) {
            std::int64_t k = F.dlog_[x];
            std::int64_t t = 0;
            std::int64_t ki = k;
            for (int i = 0; i < r; ++i) {
                t = F.add(t, F.exp_[ki]);
                ki = ki * p % (q - 1);
            }
            if (t >= p) throw std::logic_error("trace not in prime field");
            F.trace_[x] = std::int32_t(t);
        }
    }
    return F;
}

std::int64_t Field::mul_poly(std::int64_t a, std::int64_t b) const {
    if (r == 1) return a * b % p;
    Poly pa = decode(a, p, r), pb = decode(b, p, r);
    return encode(poly_mulmod(pa, pb, modulus, p), p);
}

std::int64_t Field::add(std::int64_t a, std::int64_t b) const {
    if (r == 1) {
        std::int64_t s = a + b;
        return s >= p ? s - p : s;
    }
    std::int64_t out = 0, mult = 1;
    for (int i = 0; i < r; ++i) {
        std::int64_t s = a % p + b % p;
        if (s >= p) s -= p;
        out += s * mult;
        mult *= p;
        a /= p;
        b /= p;
    }
    return out;
}

std::int64_t Field::neg(std::int64_t a) const {
    if (r == 1) return a ? p - a : 0;
    std::int64_t out = 0, mult = 1;
    for (int i = 0; i < r; ++i) {
        std::int64_t d = a % p;
        out += (d ? p - d : 0) * mult;
        mult *= p;
        a /= p;
    }
    return out;
}

std::int64_t Field::sub(std::int64_t a, std::int64_t b) const {
    if (r == 1) {
        std::int64_t s = a - b;
        return s < 0 ? s + p : s;
    }
    return add(a, neg(b));
}

std::int64_t Field::mul(std::int64_t a, std::int64_t b) const {
    if (a == 0 || b == 0) return 0;
    std::int64_t k = dlog_[a] + dlog_[b];
    if (k >= q - 1) k -= q - 1;
    return exp_[k];
}

std::int64_t Field::inv(std::int64_t a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    std::int64_t k = dlog_[a];
    return exp_[k == 0 ? 0 : q - 1 - k];
}

std::int64_t Field::pow(std::int64_t a, std::int64_t e) const {
    if (a == 0) return e == 0 ? 1 : 0;
    std::int64_t k = dlog_[a] % (q - 1) * (e % (q - 1)) % (q - 1);
    if (k < 0) k += q - 1;
    return exp_[k];
}

cplx Field::psi(std::int64_t x) const {
    double ang = 2.0 * std::numbers::pi * trace_[x] / double(p);
    return {std::cos(ang), std::sin(ang)};
}

cplx char_eval(const Field& F, std::int64_t j, std::int64_t x) {
    if (x < 0 || x >= F.q) throw std::invalid_argument("element out of range");
    if (x == 0) return 0.0;
    double ang = 2.0 * std::numbers::pi * double(j % (F.q - 1)) *
                 double(F.dlog_[x]) / double(F.q - 1);
    return {std::cos(ang), std::sin(ang)};
}

cplx jacobi_sum_direct(const Field& F, std::int64_t ja, std::int64_t jb) {
    cplx acc = 0.0;
    for (std::int64_t x = 0; x < F.q; ++x) {
        std::int64_t y = F.sub(1, x);
        if (x == 0 || y == 0) continue;
        acc += char_eval(F, ja, x) * char_eval(F, jb, y);
    }
    return acc;
}

cplx jacobi_sum(const Field& F, const GaussSumTable& gs, std::int64_t ja,
                std::int64_t jb) {
    std::int64_t n = F.q - 1;
    ja %= n;
    jb %= n;
    if (ja == 0 && jb == 0) return double(F.q - 2);
    if (ja == 0 || jb == 0) return -1.0;
    std::int64_t jab = (ja + jb) % n;
    if (jab == 0) {
        // J(A, conj(A)) = -A(-1)
        return -char_eval(F, ja, F.minus_one());
    }
    return gs.values[ja] * gs.values[jb] / gs.values[jab];
}

cplx binomial_norm(const Field& F, const GaussSumTable& gs, std::int64_t ja,
                   std::int64_t jb) {
    std::int64_t n = F.q - 1;
    std::int64_t jb_conj = (n - jb % n) % n;
    cplx b_minus1 = char_eval(F, jb, F.minus_one());
    return b_minus1 / double(F.q) * jacobi_sum(F, gs, ja % n, jb_conj);
}

}  // namespace ffh
