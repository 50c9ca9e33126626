#include "taurank/x07.hpp"

#include "taurank/poly.hpp"

#include <algorithm>

namespace taurank {

namespace {

using poly::ZPoly;

const ZPoly& quad_13() {
    static const ZPoly f{49, 13, 1};
    return f;
}

// (t^2+13t+49)(t^2+245t+2401)^3
const ZPoly& j1_numerator() {
    static const ZPoly f = poly::mul(quad_13(), poly::power(ZPoly{2401, 245, 1}, 3));
    return f;
}

// (t^2+13t+49)(t^2+5t+1)^3
const ZPoly& j2_numerator() {
    static const ZPoly f = poly::mul(quad_13(), poly::power(ZPoly{1, 5, 1}, 3));
    return f;
}

Rational t_power(const Rational& t, unsigned e) {
    Integer n, d;
    mpz_pow_ui(n.get_mpz_t(), t.get_num().get_mpz_t(), e);
    mpz_pow_ui(d.get_mpz_t(), t.get_den().get_mpz_t(), e);
    return make_rational(n, d);
}

}  // namespace

IsogenyPoint j_pair_from_t(const Rational& t) {
    if (t == 0) throw DomainError("j_pair_from_t: t = 0 is a cusp");
    IsogenyPoint pt;
    pt.t = t;
    pt.j1 = poly::eval(j1_numerator(), t) / t_power(t, 7);
    pt.j2 = poly::eval(j2_numerator(), t) / t;
    return pt;
}

std::vector<Rational> t_values_for_j(const Rational& j) {
    // den * N1(t) - num * t^7 = 0
    ZPoly f = poly::scale(j1_numerator(), j.get_den());
    f[7] -= j.get_num();
    std::vector<Rational> out;
    for (const auto& t : rational_roots(f)) {
        if (t == 0) continue;
        if (j_pair_from_t(t).j1 == j) out.push_back(t);
    }
    return out;
}

bool has_rational_7_isogeny(const Rational& j) { return !t_values_for_j(j).empty(); }

bool has_rational_7_isogeny(const WeierstrassCurve& E) { return has_rational_7_isogeny(compute_invariants(E).j); }

std::vector<Rational> isogenous_j_values(const Rational& j) {
    const auto ts = t_values_for_j(j);
    if (ts.empty()) throw DomainError("isogenous_j_values: no rational 7-isogeny");
    std::vector<Rational> out;
    for (const auto& t : ts) out.push_back(j_pair_from_t(t).j2);
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<Rational> isogenous_j_values(const WeierstrassCurve& E) {
    return isogenous_j_values(compute_invariants(E).j);
}

std::vector<WeierstrassCurve> isogenous_curves(const WeierstrassCurve& E) {
    const MinimalModel mm = minimal_model(E);
    std::vector<WeierstrassCurve> out;
    for (const auto& j : isogenous_j_values(compute_invariants(mm.curve).j)) {
        const MinimalModel rep = minimal_model(curve_from_j(j));
        for (const auto& d : squarefree_divisors(2 * mm.disc_min * rep.disc_min, true)) {
            const WeierstrassCurve T = d == 1 ? rep.curve : quadratic_twist(rep.curve, d);
            const Integer bad = mm.disc_min * compute_invariants(T).disc;
            bool match = true;
            for (Integer l = 3; l < 200 && match; l = next_prime(l)) {
                if (bad % l == 0) continue;
                match = trace_of_frobenius(mm.curve, l) == trace_of_frobenius(T, l);
            }
            if (match) {
                out.push_back(T);
                break;
            }
        }
    }
    return out;
}

IntegralPointTable integral_points_x07() {
    // Integral j2 forces t = a/b with b | a^8, so t is an integer, and then
    // t | N2(0) = 49.  Integral j1 forces t^7 | N1(t), so t | 7^14.
    Integer bound1, bound2;
    mpz_ui_pow_ui(bound1.get_mpz_t(), 7, 14);
    bound2 = 49;
    IntegralPointTable table;
    for (const auto& d : divisors(bound1)) {
        if (bound2 % d != 0) continue;
        for (const Integer& t : {Integer(-d), d}) {
            const IsogenyPoint pt = j_pair_from_t(Rational(t));
            if (!is_integral(pt.j1) || !is_integral(pt.j2)) continue;
            table.entries.push_back({t, pt.j1.get_num(), pt.j2.get_num(), t * t == 49});
        }
    }
    std::sort(table.entries.begin(), table.entries.end(),
              [](const IntegralPoint& a, const IntegralPoint& b) { return a.t < b.t; });
    return table;
}

}  // namespace taurank
