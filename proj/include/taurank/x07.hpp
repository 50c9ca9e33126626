#pragma once

// X_0(7) as a rational curve: t -> (j1(t), j2(t)) with
//   j1 = (t^2+13t+49)(t^2+245t+2401)^3 / t^7
//   j2 = (t^2+13t+49)(t^2+5t+1)^3 / t
// and the involution t -> 49/t swapping the two coordinates.

#include "taurank/arith.hpp"
#include "taurank/curve.hpp"

#include <vector>

namespace taurank {

struct IsogenyPoint {
    Rational t;
    Rational j1;
    Rational j2;
};

struct IntegralPoint {
    Integer t;
    Integer j1;
    Integer j2;
    bool cm = false;
};

struct IntegralPointTable {
    std::vector<IntegralPoint> entries;
};

IsogenyPoint j_pair_from_t(const Rational& t);

/// All rational t != 0 with j1(t) = j, ascending.
std::vector<Rational> t_values_for_j(const Rational& j);

bool has_rational_7_isogeny(const Rational& j);
bool has_rational_7_isogeny(const WeierstrassCurve& E);

/// j-invariants of the curves 7-isogenous to a curve with invariant j.
std::vector<Rational> isogenous_j_values(const Rational& j);
std::vector<Rational> isogenous_j_values(const WeierstrassCurve& E);

/// The curves over Q that are 7-isogenous to E, as minimal models: for each
/// partner j, the twist of a model with that j whose traces match E's.
std::vector<WeierstrassCurve> isogenous_curves(const WeierstrassCurve& E);

/// Every t in Q^* with j1(t), j2(t) both integral.
IntegralPointTable integral_points_x07();

}  // namespace taurank
