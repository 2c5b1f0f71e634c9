#pragma once

#include <optional>

#include "kfc/cfk.hpp"
#include "kfc/knot_expr.hpp"
#include "kfc/laurent.hpp"

namespace kfc {

/// Staircase complex of an L-space knot with the given Alexander exponents.
/// Generators x0..xk with A(x_i) = n_i - n_0/2; for odd i,
///   del(x_i) = U^{n_{i-1} - n_i} x_{i-1} + x_{i+1}.
/// Maslov gradings start at M(x0) = 0.
CfkComplex staircase(const StaircaseExponents& e);

/// A reduced complex standing for the class of a knot, with the expression
/// it was built from.
struct ClassRep {
  CfkComplex complex;
  KnotExpr provenance;
};

/// Class representative of e:
///   U            one generator
///   T(p,q)       staircase of its Alexander polynomial
///   -K           dual
///   K + J        reduced tensor product
///   D            the trefoil staircase (D and T(2,3) have the same class)
///   C(K;p,q)     staircase of the cable, for K an L-space knot (after D is
///                replaced by T(2,3)) and q >= p(2g(K) - 1), the range where
///                the cable is again an L-space knot
/// Throws UnsupportedExpression for other cables.
ClassRep class_complex(const KnotExpr& e);

/// Alexander polynomial, normalized: D has polynomial 1, mirrors keep theirs
/// and sums multiply.
LaurentPoly alexander(const KnotExpr& e);

/// Staircase exponents of e when class_complex builds it as a single
/// staircase (unknot, torus knots, supported cables), else nullopt.
std::optional<StaircaseExponents> staircase_of(const KnotExpr& e);

}  // namespace kfc
