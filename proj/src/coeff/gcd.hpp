#pragma once

#include "coeff/poly.hpp"

namespace qloop::coeff {

/// Greatest common divisor in Z[x^{+-1}, ...], normalized to a polynomial with
/// no monomial factor and a positive leading coefficient. gcd(0, 0) = 0.
/// Uses heuristic evaluation/interpolation; throws InternalError if it gives
/// up (not observed in practice).
IntPoly gcd(const IntPoly& f, const IntPoly& g);

/// Drops the monomial factor: returns p / x^{min exponents}.
IntPoly strip_monomial(const IntPoly& p);

}  // namespace qloop::coeff
