#pragma once

#include "circlesym/character.hpp"
#include "circlesym/lift_polynomial.hpp"
#include "circlesym/localization/configuration.hpp"

namespace circlesym::localization {

/// Local datum of x^3 at a fixed component, as a polynomial in the lift l.
LiftPolynomial x3_local_datum(const Component& c);

/// Local datum of p_1(M) x at a fixed component.
LiftPolynomial p1x_local_datum(const Component& c);

/// Equivariant signature datum of a point or surface as a function of the
/// character variable. Throws UnsupportedComponent for 4-dim components.
CharacterFunction signature_local_datum(const Component& c);

LiftPolynomial sum_x3(const Configuration& cfg);
LiftPolynomial sum_p1x(const Configuration& cfg);
/// Throws UnsupportedComponent when cfg has a 4-dim component.
CharacterFunction sum_signature(const Configuration& cfg);

}  // namespace circlesym::localization
