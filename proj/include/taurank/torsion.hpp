#pragma once

// Rational 7-torsion via the 7-division polynomial, plus the group law over Q
// and the exhaustive look at curves over F_2.

#include "taurank/arith.hpp"
#include "taurank/curve.hpp"
#include "taurank/poly.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace taurank {

struct RationalPoint {
    bool infinity = true;
    Rational x, y;

    static RationalPoint origin() { return {}; }
    static RationalPoint affine(const Rational& x, const Rational& y) { return {false, x, y}; }
    bool operator==(const RationalPoint&) const = default;
};

bool on_curve(const WeierstrassCurve& E, const RationalPoint& P);
RationalPoint negate(const WeierstrassCurve& E, const RationalPoint& P);
RationalPoint add(const WeierstrassCurve& E, const RationalPoint& P, const RationalPoint& Q);
RationalPoint multiply(const WeierstrassCurve& E, long n, const RationalPoint& P);
/// Order of P if it is at most `limit`, otherwise 0.
unsigned point_order(const WeierstrassCurve& E, const RationalPoint& P, unsigned limit);

/// psi_3, psi_5, psi_7 as polynomials in x.
poly::ZPoly division_polynomial(const WeierstrassCurve& E, unsigned n);

struct TorsionCertificate {
    bool has_7_torsion = false;
    std::optional<RationalPoint> witness;
    std::vector<std::pair<Integer, Integer>> filter_evidence;  // (q, #E(F_q))
};

/// 7 | #E(F_q) for every good q < 100.  False proves there is no rational
/// 7-torsion; `evidence` collects the counts examined.
bool divisible_by_7_filter(const WeierstrassCurve& E, std::vector<std::pair<Integer, Integer>>* evidence = nullptr);

TorsionCertificate rational_7_torsion(const WeierstrassCurve& E);

/// For a curve with rational 7-torsion, checks that the reduction at 2 is
/// multiplicative.  Throws DomainError if the certificate is negative or the
/// reduction at 2 is not multiplicative.
bool hasse_forces_bad_at_2(const WeierstrassCurve& E, const TorsionCertificate& cert);

struct F2Scan {
    unsigned tuples = 0;
    unsigned nonsingular = 0;
    unsigned max_points = 0;
};

/// Runs over all 32 coefficient tuples in F_2^5.
F2Scan exhaustive_f2_scan();

/// floor((sqrt(q)+1)^2) = q + 1 + floor(2 sqrt(q)).
Integer hasse_upper_bound(const Integer& q);

}  // namespace taurank
