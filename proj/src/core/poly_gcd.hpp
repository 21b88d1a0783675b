#pragma once

#include "core/poly.hpp"

namespace genus_forge {

// Rescales p by a nonzero rational so that its coefficients are coprime
// integers and its leading coefficient is positive. The factor used is
// written to *factor when given.
MultiPoly normalize_integral(const MultiPoly& p, Rational* factor = nullptr);

// Greatest common divisor over Q, normalized as by normalize_integral.
MultiPoly poly_gcd(const MultiPoly& a, const MultiPoly& b);

}  // namespace genus_forge
