#pragma once

// Dense univariate polynomials over Z, coefficients in ascending degree.
// Only what the root finder and the division polynomials need.

#include "taurank/arith.hpp"

#include <vector>

namespace taurank::poly {

using ZPoly = std::vector<Integer>;

void trim(ZPoly& f);
long degree(const ZPoly& f);  // -1 for the zero polynomial
bool is_zero(const ZPoly& f);

ZPoly add(const ZPoly& f, const ZPoly& g);
ZPoly sub(const ZPoly& f, const ZPoly& g);
ZPoly mul(const ZPoly& f, const ZPoly& g);
ZPoly scale(const ZPoly& f, const Integer& c);
ZPoly power(const ZPoly& f, unsigned e);
ZPoly derivative(const ZPoly& f);

Integer content(const ZPoly& f);
ZPoly primitive_part(const ZPoly& f);

/// lc(g)^(deg f - deg g + 1) * f mod g.
ZPoly pseudo_remainder(const ZPoly& f, const ZPoly& g);
/// Primitive gcd over Z[x] (sign normalized to a positive leading coefficient).
ZPoly gcd(const ZPoly& f, const ZPoly& g);
/// f / g when g divides f in Z[x]; throws DomainError otherwise.
ZPoly exact_divide(const ZPoly& f, const ZPoly& g);

Integer eval(const ZPoly& f, const Integer& x);
Rational eval(const ZPoly& f, const Rational& x);
/// Evaluation reduced into [0, m).
Integer eval_mod(const ZPoly& f, const Integer& x, const Integer& m);

}  // namespace taurank::poly
