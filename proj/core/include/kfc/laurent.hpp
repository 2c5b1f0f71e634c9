#pragma once

#include <cstdint>
#include <initializer_list>
#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace kfc {

/// Integer Laurent polynomial in one variable t. Finitely supported; zero
/// coefficients are never stored, so structural equality is coefficient-wise.
/// Coefficient arithmetic throws Overflow instead of wrapping.
class LaurentPoly {
 public:
  using Coefficient = std::int64_t;

  LaurentPoly() = default;
  /// Constant polynomial.
  explicit LaurentPoly(Coefficient c);
  /// From (exponent, coefficient) pairs; repeated exponents accumulate.
  LaurentPoly(std::initializer_list<std::pair<int, Coefficient>> terms);

  static LaurentPoly monomial(int exponent, Coefficient c = 1);

  bool is_zero() const noexcept { return terms_.empty(); }
  Coefficient coefficient(int exponent) const;
  /// Highest / lowest exponent. Undefined for the zero polynomial.
  int max_exponent() const;
  int min_exponent() const;
  std::size_t term_count() const noexcept { return terms_.size(); }
  /// Terms ordered by increasing exponent.
  const std::map<int, Coefficient>& terms() const noexcept { return terms_; }

  LaurentPoly& operator+=(const LaurentPoly& other);
  LaurentPoly& operator-=(const LaurentPoly& other);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  LaurentPoly operator-() const;
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  friend bool operator==(const LaurentPoly&, const LaurentPoly&) = default;

  /// Multiplies by t^k.
  LaurentPoly shifted(int k) const;

  /// Renders as "t^12 - t^11 + t^8 - 3t + 1", exponents descending.
  std::string to_string() const;
  /// Inverse of to_string; also accepts "2*t^3", "t^-1" and surrounding
  /// whitespace. Throws ParseError.
  static LaurentPoly parse(std::string_view text);

 private:
  void add_term(int exponent, Coefficient c);

  std::map<int, Coefficient> terms_;
};

/// Exact product.
LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q);

/// Every exponent e becomes n*e. Requires n >= 1.
LaurentPoly lp_substitute_power(const LaurentPoly& p, int n);

/// Returns q with q*den == num. Throws InexactDivision when no such Laurent
/// polynomial exists, and for den == 0.
LaurentPoly lp_divide_exact(const LaurentPoly& num, const LaurentPoly& den);

/// Multiplies by the unit +-t^k that makes the lowest exponent 0 and the
/// leading coefficient positive. Zero stays zero.
LaurentPoly normalize_alexander(const LaurentPoly& p);

/// (t^{pq} - 1)(t - 1) / ((t^p - 1)(t^q - 1)) with q replaced by |q|.
/// Throws NotCoprime unless p >= 1 and gcd(p, q) == 1.
LaurentPoly torus_alexander(int p, int q);

/// Alexander polynomial of the (p, q) cable: delta(t^p) * torus_alexander(p, q),
/// normalized. Throws NotCoprime unless p >= 1 and gcd(p, q) == 1.
LaurentPoly cable_alexander(const LaurentPoly& delta, int p, int q);

/// Exponents n_0 > n_1 > ... > n_k of an L-space knot's Alexander polynomial
/// sum_i (-1)^i t^{n_i}. Construction validates:
///   k even, n_k == 0, n_i + n_{k-i} == n_0 for every i.
class StaircaseExponents {
 public:
  /// Throws NotStaircaseForm when the sequence violates an invariant.
  explicit StaircaseExponents(std::vector<int> exponents);

  const std::vector<int>& values() const noexcept { return exponents_; }
  int operator[](std::size_t i) const { return exponents_[i]; }
  std::size_t size() const noexcept { return exponents_.size(); }
  /// k, the index of the last exponent.
  std::size_t k() const noexcept { return exponents_.size() - 1; }
  /// Seifert genus g = n_0 / 2.
  int genus() const noexcept { return exponents_.front() / 2; }

  LaurentPoly polynomial() const;

  friend bool operator==(const StaircaseExponents&, const StaircaseExponents&) = default;

 private:
  std::vector<int> exponents_;
};

/// Reads the staircase exponents off p (after normalize_alexander). Throws
/// NotStaircaseForm for coefficients outside {+1,-1}, broken alternation, an
/// even number of terms or a failed symmetry check.
StaircaseExponents staircase_exponents(const LaurentPoly& p);

}  // namespace kfc
