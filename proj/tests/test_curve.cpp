#include "taurank/classify.hpp"
#include "taurank/curve.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace taurank;

namespace {

bool singular(const WeierstrassCurve& E) {
    try {
        compute_invariants(E);
        return false;
    } catch (const SingularCurveError&) {
        return true;
    }
}

WeierstrassCurve random_curve(std::mt19937_64& rng, long bound) {
    std::uniform_int_distribution<long> d(-bound, bound);
    for (;;) {
        WeierstrassCurve E{d(rng), d(rng), d(rng), d(rng), d(rng)};
        if (!singular(E)) return E;
    }
}

// (x, y) -> (u^2 x + r, u^3 y + u^2 s x + t)
WeierstrassCurve change_coords(const WeierstrassCurve& E, const Integer& u, const Integer& r, const Integer& s,
                               const Integer& t) {
    // Apply the inverse substitution so the result has coefficients u^i a_i'.
    const Integer a1 = E.a1, a2 = E.a2, a3 = E.a3, a4 = E.a4, a6 = E.a6;
    WeierstrassCurve F;
    F.a1 = a1 + 2 * s;
    F.a2 = a2 - s * a1 + 3 * r - s * s;
    F.a3 = a3 + r * a1 + 2 * t;
    F.a4 = a4 - s * a3 + 2 * r * a2 - (t + r * s) * a1 + 3 * r * r - 2 * s * t;
    F.a6 = a6 + r * a4 + r * r * a2 + r * r * r - t * a3 - t * t - r * t * a1;
    F.a1 *= u;
    F.a2 *= u * u;
    F.a3 *= u * u * u;
    F.a4 *= u * u * u * u;
    F.a6 *= u * u * u * u * u * u;
    return F;
}

}  // namespace

TEST_CASE("invariants of small curves") {
    const auto inv = compute_invariants(make_curve(0, 0, 1, -1, 0));
    CHECK(inv.c4 == 48);
    CHECK(inv.c6 == -216);
    CHECK(inv.disc == 37);
    CHECK(inv.j == Rational(110592, 37));

    const auto j0 = compute_invariants(make_curve(0, 0, 0, 0, 1));
    CHECK(j0.c4 == 0);
    CHECK(j0.j == 0);

    const auto j1728 = compute_invariants(make_curve(0, 0, 0, 1, 0));
    CHECK(j1728.c6 == 0);
    CHECK(j1728.j == 1728);

    CHECK_THROWS_AS(compute_invariants(make_curve(0, 0, 0, 0, 0)), SingularCurveError);
    CHECK_THROWS_AS(compute_invariants(make_curve(0, 0, 0, -3, 2)), SingularCurveError);
}

TEST_CASE("invariant identities on random curves") {
    std::mt19937_64 rng(1);
    for (int i = 0; i < 1000; ++i) {
        const auto E = random_curve(rng, 1000);
        const auto inv = compute_invariants(E);
        REQUIRE(4 * inv.b8 == inv.b2 * inv.b6 - inv.b4 * inv.b4);
        REQUIRE(1728 * inv.disc == inv.c4 * inv.c4 * inv.c4 - inv.c6 * inv.c6);
        REQUIRE(inv.j * inv.disc == Rational(inv.c4 * inv.c4 * inv.c4));
    }
}

TEST_CASE("minimal model examples") {
    const auto E = make_curve(0, 0, 1, -1, 0);
    const auto big = change_coords(E, 2, 0, 0, 0);
    CHECK(compute_invariants(big).disc == 37 * (Integer(1) << 12));
    const auto m = minimal_model(big);
    CHECK(m.disc_min == 37);
    CHECK(m.curve == E);
    REQUIRE(m.scaling.size() == 1);
    CHECK(m.scaling[0] == PrimePower{2, 1});

    CHECK(minimal_model(E).disc_min == 37);
    CHECK(minimal_model(E).curve == E);

    // y^2 = x^3 + 2^12 is (x,y) -> (16x, 64y) of y^2 = x^3 + 1, so u = 4.
    const auto naive = make_curve(0, 0, 0, 0, 4096);
    const auto nm = minimal_model(naive);
    const auto v_naive = valuation(compute_invariants(naive).disc, Integer(2));
    const auto v_min = valuation(nm.disc_min, Integer(2));
    CHECK(v_naive - v_min == 24);
    CHECK(nm.curve == make_curve(0, 0, 0, 0, 1));
    CHECK(nm.disc_min == -432);
}

TEST_CASE("minimal model is idempotent and moves v by multiples of 12") {
    std::mt19937_64 rng(2);
    std::uniform_int_distribution<long> small(-3, 3), scale(1, 6);
    for (int i = 0; i < 300; ++i) {
        const auto E = random_curve(rng, 50);
        const auto F = change_coords(E, scale(rng), small(rng), small(rng), small(rng));
        const auto mF = minimal_model(F);
        const auto mE = minimal_model(E);
        REQUIRE(mF.curve == mE.curve);
        REQUIRE(minimal_model(mF.curve).curve == mF.curve);
        const Integer dF = compute_invariants(F).disc;
        for (const auto& pp : factor(dF).factors) {
            const auto dv = valuation(dF, pp.prime) - valuation(mF.disc_min, pp.prime);
            REQUIRE(dv % 12 == 0);
        }
        REQUIRE(mF.curve.a1 >= 0);
        REQUIRE(mF.curve.a1 <= 1);
        REQUIRE(mF.curve.a3 >= 0);
        REQUIRE(mF.curve.a3 <= 1);
        REQUIRE(abs(mF.curve.a2) <= 1);
    }
}

TEST_CASE("curve from c4 c6 and from j") {
    const auto inv = compute_invariants(make_curve(1, -1, 1, -3, 3));
    CHECK(curve_from_c4c6(inv.c4, inv.c6) == make_curve(1, -1, 1, -3, 3));
    CHECK_THROWS_AS(curve_from_c4c6(1, 1), DomainError);

    for (const Rational& j : {Rational(0), Rational(1728), Rational(999), Rational(21609), Rational(-5, 7),
                              Rational(110592, 37)}) {
        CHECK(compute_invariants(curve_from_j(j)).j == j);
    }
}

TEST_CASE("quadratic twists") {
    const auto E = make_curve(0, 0, 1, -1, 0);
    const auto T1 = quadratic_twist(E, 1);
    CHECK(compute_invariants(T1).j == compute_invariants(E).j);
    CHECK(minimal_model(T1).disc_min == 37);
    CHECK_THROWS_AS(quadratic_twist(E, 12), DomainError);
    CHECK_THROWS_AS(quadratic_twist(E, 0), DomainError);

    const auto base = minimal_twist(curve_from_j(Rational(999))).curve;
    const auto T = quadratic_twist(base, -7);
    const Integer disc = minimal_model(T).disc_min;
    const Integer p37_8 = Integer(-1) * 117649 * Integer("3512479453921");
    const Integer p37_2 = Integer(-1) * 117649 * 1369;
    CHECK((disc == p37_8 || disc == p37_2));
}

TEST_CASE("twisting twice returns an isomorphic curve") {
    std::mt19937_64 rng(3);
    const long ds[] = {-1, 2, -3, 5, -7, 10, 13, -15};
    for (int i = 0; i < 100; ++i) {
        const auto E = random_curve(rng, 200);
        const long d = ds[i % 8];
        const auto T = quadratic_twist(E, d);
        REQUIRE(compute_invariants(T).j == compute_invariants(E).j);
        REQUIRE(isomorphic_over_Q(quadratic_twist(T, d), E));
    }
}

TEST_CASE("point counts") {
    const auto E = make_curve(0, 0, 1, -1, 0);
    CHECK(point_count_mod(E, 2) == 5);
    CHECK(trace_of_frobenius(E, 5) == -2);
    CHECK(is_ordinary(E, 5));
    CHECK_THROWS_AS(point_count_mod(E, 37), DomainError);
    CHECK(point_count_mod(E, 3) == 7);
}

namespace {

Integer brute_count(const WeierstrassCurve& E, long q) {
    Integer n = 1;
    for (long x = 0; x < q; ++x)
        for (long y = 0; y < q; ++y) {
            const Integer lhs = y * y + E.a1 * x * y + E.a3 * y;
            const Integer rhs = Integer(x) * x * x + E.a2 * x * x + E.a4 * x + E.a6;
            if ((lhs - rhs) % q == 0) ++n;
        }
    return n;
}

}  // namespace

TEST_CASE("point counts match enumeration and the Hasse bound") {
    std::mt19937_64 rng(4);
    for (int i = 0; i < 40; ++i) {
        const auto E = random_curve(rng, 100);
        const Integer disc = compute_invariants(E).disc;
        for (Integer q = 2; q <= 97; q = next_prime(q)) {
            if (disc % q == 0) continue;
            const Integer n = point_count_mod(E, q);
            const double qd = q.get_d();
            REQUIRE(std::abs(qd + 1 - n.get_d()) <= 2 * std::sqrt(qd));
            if (q < 30) REQUIRE(n == brute_count(E, q.get_si()));
        }
    }
}
