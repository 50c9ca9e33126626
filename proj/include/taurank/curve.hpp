#pragma once

// Weierstrass models over Q.
//
//   y^2 + a1 xy + a3 y = x^3 + a2 x^2 + a4 x + a6
//
// Invariants follow the usual b/c/Delta conventions; minimal models come from
// the Laska-Kraus-Connell descent on (c4, c6).

#include "taurank/arith.hpp"

#include <array>
#include <string>
#include <vector>

namespace taurank {

class SingularCurveError : public DomainError {
public:
    using DomainError::DomainError;
};

struct WeierstrassCurve {
    Integer a1, a2, a3, a4, a6;

    std::array<Integer, 5> coeffs() const { return {a1, a2, a3, a4, a6}; }
    /// "[a1,a2,a3,a4,a6]"
    std::string to_string() const;
    bool operator==(const WeierstrassCurve&) const = default;
};

WeierstrassCurve make_curve(long long a1, long long a2, long long a3, long long a4, long long a6);

struct CurveInvariants {
    Integer b2, b4, b6, b8;
    Integer c4, c6;
    Integer disc;
    Rational j;
};

struct MinimalModel {
    WeierstrassCurve curve;
    Integer disc_min;
    /// Primes q at which the input was scaled down, with the exponent of q in u.
    std::vector<PrimePower> scaling;
};

/// Throws SingularCurveError when the discriminant vanishes.
CurveInvariants compute_invariants(const WeierstrassCurve& E);

/// Globally minimal, reduced model (a1, a3 in {0,1}, a2 in {-1,0,1}).
MinimalModel minimal_model(const WeierstrassCurve& E);

/// Integral model with the given invariants, if (c4, c6) satisfy Kraus'
/// conditions; throws DomainError otherwise.
WeierstrassCurve curve_from_c4c6(const Integer& c4, const Integer& c6);

/// Minimal model of E_d, the twist by a squarefree d != 0.
WeierstrassCurve quadratic_twist(const WeierstrassCurve& E, const Integer& d);

/// Minimal model of some curve with the given j-invariant.
WeierstrassCurve curve_from_j(const Rational& j);

/// Scales rational coefficients (x, y) -> (x/u^2, y/u^3) to an integral model.
WeierstrassCurve integral_model(const std::array<Rational, 5>& a);

/// #E(F_q) for a prime q with q not dividing the discriminant of this model.
Integer point_count_mod(const WeierstrassCurve& E, const Integer& q);

/// a_q = q + 1 - #E(F_q).
Integer trace_of_frobenius(const WeierstrassCurve& E, const Integer& q);

/// Good reduction at q with a_q not divisible by q.
bool is_ordinary(const WeierstrassCurve& E, const Integer& q);

/// True when E and E' are isomorphic over Q (same c4, c6 up to u^4, u^6).
bool isomorphic_over_Q(const WeierstrassCurve& E, const WeierstrassCurve& F);

}  // namespace taurank
