#pragma once

#include <vector>

#include "idemgeo/scalar.hpp"

namespace idemgeo {

/// Dense univariate polynomial, coefficients from degree 0 upwards. The zero
/// polynomial is the empty vector; other values carry no leading zeros.
using Poly = std::vector<Scalar>;

Poly poly_trim(Poly p);
int poly_degree(const Poly& p);  ///< -1 for the zero polynomial
Scalar poly_eval(const Poly& p, const Scalar& x);
Poly poly_derivative(const Poly& p, const ScalarDomain& domain);
Poly poly_monic(const Poly& p);
/// Quotient and remainder; throws DivisionByZero when b = 0.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b);
Poly poly_gcd(Poly a, Poly b, const ScalarDomain& domain);  ///< monic, or zero
bool poly_squarefree(const Poly& p, const ScalarDomain& domain);

/// True iff p has a root in the domain. Over F_p by scanning residues; over Q
/// by reducing to integer roots of a monic integer polynomial, isolated with
/// Sturm sequences at half-integer points.
bool poly_has_root(const Poly& p, const ScalarDomain& domain);

/// Cubic resolvent y^3 - b y^2 + (ac - 4d) y - (a^2 d - 4bd + c^2) of the monic
/// quartic x^4 + a x^3 + b x^2 + c x + d. Its roots are x1x2 + x3x4 and the
/// two other pairings.
Poly quartic_resolvent(const Poly& monic_quartic, const ScalarDomain& domain);

}  // namespace idemgeo
