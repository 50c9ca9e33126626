#include "taurank/curve.hpp"

#include <algorithm>

namespace taurank {

namespace {

Integer pow_int(const Integer& b, unsigned long e) {
    Integer r;
    mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
    return r;
}

Integer mod_floor(const Integer& a, const Integer& m) {
    Integer r = a % m;
    if (r < 0) r += m;
    return r;
}

Integer divexact(const Integer& a, const Integer& b, const char* what) {
    if (!mpz_divisible_p(a.get_mpz_t(), b.get_mpz_t())) throw DomainError(what);
    Integer r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

// Kraus' local condition at 2 or 3 for a candidate pair (c4, c6).
bool kraus_ok(const Integer& c4, const Integer& c6, unsigned long q) {
    if (q == 3) {
        if (c6 == 0) return true;
        const unsigned long v = valuation(c6, Integer(3));
        return v != 1 && v != 2;
    }
    if (mod_floor(c6, 4) == 3) return true;
    const bool c4_ok = c4 == 0 || valuation(c4, Integer(2)) >= 4;
    const Integer r = mod_floor(c6, 32);
    return c4_ok && (r == 0 || r == 8);
}

unsigned long val_or_big(const Integer& n, const Integer& q) {
    return n == 0 ? 1000000UL : valuation(n, q);
}

}  // namespace

std::string WeierstrassCurve::to_string() const {
    return "[" + a1.get_str() + "," + a2.get_str() + "," + a3.get_str() + "," + a4.get_str() + "," +
           a6.get_str() + "]";
}

WeierstrassCurve make_curve(long long a1, long long a2, long long a3, long long a4, long long a6) {
    return {make_integer(a1), make_integer(a2), make_integer(a3), make_integer(a4), make_integer(a6)};
}

CurveInvariants compute_invariants(const WeierstrassCurve& E) {
    CurveInvariants inv;
    const auto& [a1, a2, a3, a4, a6] = E;
    inv.b2 = a1 * a1 + 4 * a2;
    inv.b4 = 2 * a4 + a1 * a3;
    inv.b6 = a3 * a3 + 4 * a6;
    inv.b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 - a4 * a4;
    const Integer& b2 = inv.b2;
    const Integer& b4 = inv.b4;
    const Integer& b6 = inv.b6;
    inv.c4 = b2 * b2 - 24 * b4;
    inv.c6 = -b2 * b2 * b2 + 36 * b2 * b4 - 216 * b6;
    inv.disc = -b2 * b2 * inv.b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
    if (inv.disc == 0) throw SingularCurveError("singular curve " + E.to_string());
    inv.j = make_rational(inv.c4 * inv.c4 * inv.c4, inv.disc);
    return inv;
}

WeierstrassCurve curve_from_c4c6(const Integer& c4, const Integer& c6) {
    // b2 = -c6 mod 12, centred in [-5, 6]
    Integer b2 = mod_floor(-c6, 12);
    if (b2 > 6) b2 -= 12;
    const char* msg = "curve_from_c4c6: invariants fail Kraus' conditions";
    const Integer b4 = divexact(b2 * b2 - c4, 24, msg);
    const Integer b6 = divexact(-b2 * b2 * b2 + 36 * b2 * b4 - c6, 216, msg);
    WeierstrassCurve E;
    E.a1 = mod_floor(b2, 2);
    E.a3 = mod_floor(b6, 2);
    E.a2 = divexact(b2 - E.a1, 4, msg);
    E.a4 = divexact(b4 - E.a1 * E.a3, 2, msg);
    E.a6 = divexact(b6 - E.a3, 4, msg);
    return E;
}

MinimalModel minimal_model(const WeierstrassCurve& E) {
    const CurveInvariants inv = compute_invariants(E);
    MinimalModel out;
    Integer c4 = inv.c4;
    Integer c6 = inv.c6;
    Integer disc = inv.disc;

    const Integer g = gcd(c4, c6);
    if (g != 1 && g != -1) {
        for (const auto& pp : factor(g).factors) {
            const Integer& q = pp.prime;
            unsigned long d = std::min({val_or_big(c4, q) / 4, val_or_big(c6, q) / 6, valuation(disc, q) / 12});
            if (q == 2 || q == 3) {
                const unsigned long qs = q.get_ui();
                while (d > 0) {
                    const Integer c4s = c4 / pow_int(q, 4 * d);
                    const Integer c6s = c6 / pow_int(q, 6 * d);
                    if (kraus_ok(c4s, c6s, qs)) break;
                    --d;
                }
            }
            if (d == 0) continue;
            c4 /= pow_int(q, 4 * d);
            c6 /= pow_int(q, 6 * d);
            disc /= pow_int(q, 12 * d);
            out.scaling.push_back({q, d});
        }
    }
    out.curve = curve_from_c4c6(c4, c6);
    out.disc_min = disc;
    return out;
}

WeierstrassCurve quadratic_twist(const WeierstrassCurve& E, const Integer& d) {
    if (d == 0 || !is_squarefree(d)) throw DomainError("quadratic_twist: d must be squarefree and nonzero");
    const CurveInvariants inv = compute_invariants(E);
    WeierstrassCurve T;
    T.a1 = 0;
    T.a3 = 0;
    T.a2 = d * inv.b2;
    T.a4 = 8 * d * d * inv.b4;
    T.a6 = 16 * d * d * d * inv.b6;
    return minimal_model(T).curve;
}

WeierstrassCurve curve_from_j(const Rational& j) {
    if (j == 0) return make_curve(0, 0, 1, 0, 0);
    if (j == 1728) return make_curve(0, 0, 0, 1, 0);
    const Integer n = j.get_num();
    const Integer d = j.get_den();
    const Integer m = n - 1728 * d;
    WeierstrassCurve E;
    E.a1 = E.a2 = E.a3 = 0;
    E.a4 = -3 * n * m * d * d;
    E.a6 = -2 * n * m * m * d * d * d;
    return minimal_model(E).curve;
}

WeierstrassCurve integral_model(const std::array<Rational, 5>& a) {
    static constexpr unsigned long weight[5] = {1, 2, 3, 4, 6};
    Integer den_lcm = 1;
    for (const auto& x : a) den_lcm = lcm(den_lcm, x.get_den());
    Integer u = 1;
    if (den_lcm != 1) {
        for (const auto& pp : factor(den_lcm).factors) {
            unsigned long e = 0;
            for (int i = 0; i < 5; ++i) {
                if (a[i] == 0) continue;
                const long v = valuation(a[i], pp.prime);
                if (v < 0) {
                    const unsigned long need = (static_cast<unsigned long>(-v) + weight[i] - 1) / weight[i];
                    e = std::max(e, need);
                }
            }
            u *= pow_int(pp.prime, e);
        }
    }
    Integer out[5];
    for (int i = 0; i < 5; ++i) {
        const Rational scaled = a[i] * Rational(pow_int(u, weight[i]));
        if (!is_integral(scaled)) throw DomainError("integral_model: scaling failed");
        out[i] = scaled.get_num();
    }
    return {out[0], out[1], out[2], out[3], out[4]};
}

Integer point_count_mod(const WeierstrassCurve& E, const Integer& q) {
    if (!is_prime(q)) throw DomainError("point_count_mod: modulus must be prime");
    const CurveInvariants inv = compute_invariants(E);
    if (inv.disc % q == 0) throw DomainError("point_count_mod: bad reduction at " + q.get_str());
    if (!q.fits_ulong_p()) throw DomainError("point_count_mod: prime too large for enumeration");
    const unsigned long qs = q.get_ui();
    if (qs == 2) {
        Integer count = 1;
        for (long x = 0; x < 2; ++x) {
            for (long y = 0; y < 2; ++y) {
                const Integer lhs = y * y + E.a1 * x * y + E.a3 * y;
                const Integer rhs = x * x * x + E.a2 * x * x + E.a4 * x + E.a6;
                if (mod_floor(lhs - rhs, 2) == 0) ++count;
            }
        }
        return count;
    }
    // (2y + a1 x + a3)^2 = 4x^3 + b2 x^2 + 2 b4 x + b6
    const Integer c3 = 4, c2 = mod_floor(inv.b2, q), c1 = mod_floor(2 * inv.b4, q), c0 = mod_floor(inv.b6, q);
    Integer count = q + 1;
    Integer f;
    for (unsigned long x = 0; x < qs; ++x) {
        const Integer X(x);
        f = ((c3 * X + c2) * X + c1) * X + c0;
        count += mpz_legendre(Integer(f % q).get_mpz_t(), q.get_mpz_t());
    }
    return count;
}

Integer trace_of_frobenius(const WeierstrassCurve& E, const Integer& q) { return q + 1 - point_count_mod(E, q); }

bool is_ordinary(const WeierstrassCurve& E, const Integer& q) {
    const CurveInvariants inv = compute_invariants(E);
    if (inv.disc % q == 0) return false;
    return trace_of_frobenius(E, q) % q != 0;
}

bool isomorphic_over_Q(const WeierstrassCurve& E, const WeierstrassCurve& F) {
    const CurveInvariants a = compute_invariants(minimal_model(E).curve);
    const CurveInvariants b = compute_invariants(minimal_model(F).curve);
    return a.c4 == b.c4 && a.c6 == b.c6;
}

}  // namespace taurank
