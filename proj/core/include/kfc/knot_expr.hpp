#pragma once

#include <memory>
#include <string>
#include <string_view>

namespace kfc {

/// Knot expression tree.
///
///   expr := term ('+' term)*
///   term := '-' term | atom
///   atom := 'U' | 'D' | 'T(' int ',' int ')' | 'C(' expr ';' int ',' int ')' | '(' expr ')'
///
/// '+' is connected sum, '-' the mirror, 'D' the positive-clasped untwisted
/// Whitehead double of the right-handed trefoil.
class KnotExpr {
 public:
  enum class Kind { Unknot, Torus, Cable, Sum, Mirror, WhiteheadDouble };

  static KnotExpr unknot();
  /// Throws NotCoprime unless gcd(p, q) == 1, SemanticError unless p, q >= 1.
  static KnotExpr torus(int p, int q);
  /// (p, q) cable of inner. Throws SemanticError unless p >= 1, NotCoprime
  /// unless gcd(p, q) == 1.
  static KnotExpr cable(KnotExpr inner, int p, int q);
  static KnotExpr sum(KnotExpr left, KnotExpr right);
  static KnotExpr mirror(KnotExpr inner);
  static KnotExpr whitehead_double();

  Kind kind() const noexcept { return kind_; }
  /// Torus and cable parameters.
  int p() const noexcept { return p_; }
  int q() const noexcept { return q_; }
  /// Cable and mirror operand, or the left summand.
  const KnotExpr& inner() const { return *a_; }
  const KnotExpr& left() const { return *a_; }
  const KnotExpr& right() const { return *b_; }

  /// Text in the grammar above; parse(to_string()) == *this.
  std::string to_string() const;

  friend bool operator==(const KnotExpr& x, const KnotExpr& y);

 private:
  KnotExpr(Kind kind, int p, int q, std::shared_ptr<const KnotExpr> a,
           std::shared_ptr<const KnotExpr> b);

  Kind kind_;
  int p_ = 0;
  int q_ = 0;
  std::shared_ptr<const KnotExpr> a_;
  std::shared_ptr<const KnotExpr> b_;
};

/// Throws ParseError (line 1, 1-based column) on syntax errors and
/// SemanticError / NotCoprime on bad torus or cable parameters.
KnotExpr parse_knot(std::string_view text);

}  // namespace kfc
