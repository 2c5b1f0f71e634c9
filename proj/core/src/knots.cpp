#include "kfc/knots.hpp"

#include "kfc/error.hpp"

namespace kfc {

CfkComplex staircase(const StaircaseExponents& e) {
  CfkComplex out;
  const int g = e.genus();
  int maslov = 0;
  for (std::size_t i = 0; i < e.size(); ++i) {
    if (i > 0) {
      // Odd generators sit one above the next even one and 2(n_{i-1} - n_i) - 1
      // below the previous one.
      maslov = (i % 2 == 1) ? maslov + 1 - 2 * (e[i - 1] - e[i]) : maslov - 1;
    }
    out.add_generator("x" + std::to_string(i), e[i] - g, maslov);
  }
  for (std::size_t i = 1; i < e.size(); i += 2) {
    out.toggle_arrow(i, i - 1, e[i - 1] - e[i]);
    out.toggle_arrow(i, i + 1, 0);
  }
  return out;
}

namespace {

const StaircaseExponents& trefoil_exponents() {
  static const StaircaseExponents e({2, 1, 0});
  return e;
}

std::optional<StaircaseExponents> exponents_of(const KnotExpr& e);

// Cable of an L-space knot with exponents inner; nullopt outside the L-space
// range q >= p(2g - 1), or for negative cables of the unknot (those are
// mirrored torus knots, not staircases).
std::optional<StaircaseExponents> cable_exponents(const StaircaseExponents& inner, int p, int q) {
  if (p == 1) return inner;
  const int g = inner.genus();
  if (g == 0) {
    if (q < 0 && q != -1) return std::nullopt;
    return staircase_exponents(torus_alexander(p, q));
  }
  if (q < p * (2 * g - 1)) return std::nullopt;
  try {
    return staircase_exponents(cable_alexander(inner.polynomial(), p, q));
  } catch (const NotStaircaseForm&) {
    return std::nullopt;
  }
}

std::optional<StaircaseExponents> exponents_of(const KnotExpr& e) {
  switch (e.kind()) {
    case KnotExpr::Kind::Unknot:
      return StaircaseExponents({0});
    case KnotExpr::Kind::WhiteheadDouble:
      return trefoil_exponents();
    case KnotExpr::Kind::Torus:
      return staircase_exponents(torus_alexander(e.p(), e.q()));
    case KnotExpr::Kind::Cable: {
      auto inner = exponents_of(e.inner());
      if (!inner) return std::nullopt;
      return cable_exponents(*inner, e.p(), e.q());
    }
    case KnotExpr::Kind::Sum:
    case KnotExpr::Kind::Mirror:
      return std::nullopt;
  }
  return std::nullopt;
}

CfkComplex build(const KnotExpr& e) {
  switch (e.kind()) {
    case KnotExpr::Kind::Unknot:
      return unknot_complex();
    case KnotExpr::Kind::WhiteheadDouble:
      return staircase(trefoil_exponents());
    case KnotExpr::Kind::Torus:
      return staircase(*exponents_of(e));
    case KnotExpr::Kind::Mirror:
      return dual(build(e.inner()));
    case KnotExpr::Kind::Sum:
      return reduce(tensor(build(e.left()), build(e.right())));
    case KnotExpr::Kind::Cable: {
      if (e.p() == 1) return build(e.inner());
      const KnotExpr& inner = e.inner();
      if (inner.kind() == KnotExpr::Kind::Sum || inner.kind() == KnotExpr::Kind::Mirror) {
        throw UnsupportedExpression("no class formula for cables of sums or mirrors: " + e.to_string());
      }
      const auto inner_exponents = exponents_of(inner);
      if (!inner_exponents) {
        throw UnsupportedExpression("companion of " + e.to_string() + " is not an L-space knot");
      }
      if (inner_exponents->genus() == 0 && e.q() < -1) {
        return dual(staircase(staircase_exponents(torus_alexander(e.p(), -e.q()))));
      }
      const auto result = cable_exponents(*inner_exponents, e.p(), e.q());
      if (!result) {
        const int g = inner_exponents->genus();
        throw UnsupportedExpression(e.to_string() + " is not an L-space knot (needs q >= " +
                                    std::to_string(e.p() * (2 * g - 1)) + ")");
      }
      return staircase(*result);
    }
  }
  throw UnsupportedExpression("unknown expression");
}

}  // namespace

ClassRep class_complex(const KnotExpr& e) { return {build(e), e}; }

std::optional<StaircaseExponents> staircase_of(const KnotExpr& e) { return exponents_of(e); }

LaurentPoly alexander(const KnotExpr& e) {
  switch (e.kind()) {
    case KnotExpr::Kind::Unknot:
    case KnotExpr::Kind::WhiteheadDouble:
      return LaurentPoly(1);
    case KnotExpr::Kind::Torus:
      return torus_alexander(e.p(), e.q());
    case KnotExpr::Kind::Mirror:
      return alexander(e.inner());
    case KnotExpr::Kind::Sum:
      return normalize_alexander(lp_mul(alexander(e.left()), alexander(e.right())));
    case KnotExpr::Kind::Cable:
      return cable_alexander(alexander(e.inner()), e.p(), e.q());
  }
  return LaurentPoly(1);
}

}  // namespace kfc
