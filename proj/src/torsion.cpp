#include "taurank/torsion.hpp"

#include "taurank/localdata.hpp"

namespace taurank {

using poly::ZPoly;

bool on_curve(const WeierstrassCurve& E, const RationalPoint& P) {
    if (P.infinity) return true;
    const Rational &x = P.x, &y = P.y;
    const Rational lhs = y * y + Rational(E.a1) * x * y + Rational(E.a3) * y;
    const Rational rhs = x * x * x + Rational(E.a2) * x * x + Rational(E.a4) * x + Rational(E.a6);
    return lhs == rhs;
}

RationalPoint negate(const WeierstrassCurve& E, const RationalPoint& P) {
    if (P.infinity) return P;
    return RationalPoint::affine(P.x, -P.y - Rational(E.a1) * P.x - Rational(E.a3));
}

RationalPoint add(const WeierstrassCurve& E, const RationalPoint& P, const RationalPoint& Q) {
    if (P.infinity) return Q;
    if (Q.infinity) return P;
    const Rational a1(E.a1), a2(E.a2), a3(E.a3), a4(E.a4), a6(E.a6);
    Rational lambda, nu;
    if (P.x == Q.x) {
        const Rational denom = P.y + Q.y + a1 * Q.x + a3;
        if (denom == 0) return RationalPoint::origin();
        const Rational& x = P.x;
        const Rational& y = P.y;
        const Rational d = 2 * y + a1 * x + a3;
        lambda = (3 * x * x + 2 * a2 * x + a4 - a1 * y) / d;
        nu = (-x * x * x + a4 * x + 2 * a6 - a3 * y) / d;
    } else {
        const Rational dx = Q.x - P.x;
        lambda = (Q.y - P.y) / dx;
        nu = (P.y * Q.x - Q.y * P.x) / dx;
    }
    const Rational x3 = lambda * lambda + a1 * lambda - a2 - P.x - Q.x;
    const Rational y3 = -(lambda + a1) * x3 - nu - a3;
    return RationalPoint::affine(x3, y3);
}

RationalPoint multiply(const WeierstrassCurve& E, long n, const RationalPoint& P) {
    RationalPoint base = n < 0 ? negate(E, P) : P;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    RationalPoint acc = RationalPoint::origin();
    while (k) {
        if (k & 1) acc = add(E, acc, base);
        base = add(E, base, base);
        k >>= 1;
    }
    return acc;
}

unsigned point_order(const WeierstrassCurve& E, const RationalPoint& P, unsigned limit) {
    RationalPoint acc = P;
    for (unsigned k = 1; k <= limit; ++k) {
        if (acc.infinity) return k;
        acc = add(E, acc, P);
    }
    return 0;
}

ZPoly division_polynomial(const WeierstrassCurve& E, unsigned n) {
    const CurveInvariants inv = compute_invariants(E);
    const Integer &b2 = inv.b2, &b4 = inv.b4, &b6 = inv.b6, &b8 = inv.b8;
    const ZPoly psi3{b8, 3 * b6, 3 * b4, b2, 3};
    if (n == 3) return psi3;
    const ZPoly F{b6, 2 * b4, b2, 4};
    const ZPoly f4{b4 * b8 - b6 * b6, b2 * b8 - b4 * b6, 10 * b8, 10 * b6, 5 * b4, b2, 2};
    const ZPoly F2 = poly::mul(F, F);
    const ZPoly psi3_cubed = poly::power(psi3, 3);
    const ZPoly psi5 = poly::sub(poly::mul(F2, f4), psi3_cubed);
    if (n == 5) return psi5;
    if (n == 7) return poly::sub(poly::mul(psi5, psi3_cubed), poly::mul(F2, poly::power(f4, 3)));
    throw DomainError("division_polynomial: only n = 3, 5, 7 are provided");
}

bool divisible_by_7_filter(const WeierstrassCurve& E, std::vector<std::pair<Integer, Integer>>* evidence) {
    const Integer disc = compute_invariants(E).disc;
    for (Integer q = 2; q < 100; q = next_prime(q)) {
        if (disc % q == 0) continue;
        const Integer n = point_count_mod(E, q);
        if (evidence) evidence->emplace_back(q, n);
        if (n % 7 != 0) return false;
    }
    return true;
}

TorsionCertificate rational_7_torsion(const WeierstrassCurve& E) {
    TorsionCertificate cert;
    if (!divisible_by_7_filter(E, &cert.filter_evidence)) return cert;
    const CurveInvariants inv = compute_invariants(E);
    const ZPoly F{inv.b6, 2 * inv.b4, inv.b2, 4};
    for (const auto& x : rational_roots(division_polynomial(E, 7))) {
        Rational s;
        if (!rational_sqrt(poly::eval(F, x), s)) continue;
        const Rational base = -(Rational(E.a1) * x + Rational(E.a3));
        for (const Rational& y : {Rational((base + s) / 2), Rational((base - s) / 2)}) {
            const RationalPoint P = RationalPoint::affine(x, y);
            if (!on_curve(E, P)) continue;
            if (point_order(E, P, 7) == 7) {
                cert.has_7_torsion = true;
                cert.witness = P;
                return cert;
            }
        }
    }
    return cert;
}

bool hasse_forces_bad_at_2(const WeierstrassCurve& E, const TorsionCertificate& cert) {
    if (!cert.has_7_torsion) throw DomainError("hasse_forces_bad_at_2: no 7-torsion certificate");
    const LocalData ld = reduction_type(minimal_model(E).curve, Integer(2));
    if (!is_multiplicative(ld.reduction)) {
        throw DomainError("inconsistent 7-torsion certificate: reduction at 2 is " + to_string(ld.reduction));
    }
    return true;
}

F2Scan exhaustive_f2_scan() {
    F2Scan scan;
    for (unsigned mask = 0; mask < 32; ++mask) {
        ++scan.tuples;
        const WeierstrassCurve E = make_curve(mask & 1, (mask >> 1) & 1, (mask >> 2) & 1, (mask >> 3) & 1,
                                              (mask >> 4) & 1);
        Integer disc;
        try {
            disc = compute_invariants(E).disc;
        } catch (const SingularCurveError&) {
            continue;
        }
        if (disc % 2 == 0) continue;
        ++scan.nonsingular;
        const unsigned n = point_count_mod(E, Integer(2)).get_ui();
        if (n > scan.max_points) scan.max_points = n;
    }
    return scan;
}

Integer hasse_upper_bound(const Integer& q) {
    Integer r;
    const Integer four_q = 4 * q;
    mpz_sqrt(r.get_mpz_t(), four_q.get_mpz_t());
    return q + 1 + r;
}

}  // namespace taurank
