#include "kfc/laurent.hpp"

#include <cctype>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <sstream>

#include "kfc/error.hpp"

namespace kfc {

namespace {

using Coefficient = LaurentPoly::Coefficient;

Coefficient checked_add(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("coefficient overflow in addition");
  return r;
}

Coefficient checked_mul(Coefficient a, Coefficient b) {
  Coefficient r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("coefficient overflow in multiplication");
  return r;
}

int checked_exponent(long long e) {
  if (e > std::numeric_limits<int>::max() || e < std::numeric_limits<int>::min()) {
    throw Overflow("exponent overflow");
  }
  return static_cast<int>(e);
}

void require_coprime(int p, int q) {
  if (p < 1) throw NotCoprime("cable/torus parameter p must be >= 1, got " + std::to_string(p));
  if (std::gcd(p, q) != 1) {
    throw NotCoprime("parameters (" + std::to_string(p) + "," + std::to_string(q) +
                     ") are not coprime");
  }
}

// t^n - 1
LaurentPoly t_pow_minus_one(int n) { return LaurentPoly{{n, 1}, {0, -1}}; }

}  // namespace

LaurentPoly::LaurentPoly(Coefficient c) { add_term(0, c); }

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<int, Coefficient>> terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(int exponent, Coefficient c) {
  LaurentPoly p;
  p.add_term(exponent, c);
  return p;
}

void LaurentPoly::add_term(int exponent, Coefficient c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (!inserted) {
    it->second = checked_add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

LaurentPoly::Coefficient LaurentPoly::coefficient(int exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

int LaurentPoly::max_exponent() const { return terms_.rbegin()->first; }
int LaurentPoly::min_exponent() const { return terms_.begin()->first; }

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, c);
  return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& other) {
  for (const auto& [e, c] : other.terms_) add_term(e, checked_mul(c, -1));
  return *this;
}

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.add_term(e, checked_mul(c, -1));
  return r;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      r.add_term(checked_exponent(static_cast<long long>(ea) + eb), checked_mul(ca, cb));
    }
  }
  return r;
}

LaurentPoly LaurentPoly::shifted(int k) const {
  LaurentPoly r;
  for (const auto& [e, c] : terms_) r.terms_.emplace(checked_exponent(static_cast<long long>(e) + k), c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto [e, c] = *it;
    const Coefficient mag = c < 0 ? -c : c;
    if (first) {
      if (c < 0) out << '-';
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (e == 0) {
      out << mag;
      continue;
    }
    if (mag != 1) out << mag;
    out << 't';
    if (e != 1) out << '^' << e;
  }
  return out.str();
}

namespace {

class PolyScanner {
 public:
  explicit PolyScanner(std::string_view text) : text_(text) {}

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  bool peek_digit() {
    skip_space();
    return pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]));
  }
  long long number() {
    skip_space();
    const std::size_t start = pos_;
    long long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (__builtin_mul_overflow(value, 10LL, &value) ||
          __builtin_add_overflow(value, static_cast<long long>(text_[pos_] - '0'), &value)) {
        fail("integer literal too large");
      }
      ++pos_;
    }
    if (pos_ == start) fail("expected integer");
    return value;
  }
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, 1, pos_ + 1); }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

LaurentPoly LaurentPoly::parse(std::string_view text) {
  PolyScanner in(text);
  LaurentPoly result;
  if (in.at_end()) in.fail("empty polynomial");

  bool first = true;
  while (!in.at_end()) {
    Coefficient sign = 1;
    if (in.accept('-')) {
      sign = -1;
    } else if (!first) {
      if (!in.accept('+')) in.fail("expected '+' or '-'");
    } else {
      in.accept('+');
    }
    first = false;

    bool have_coef = false;
    Coefficient coef = 1;
    if (in.peek_digit()) {
      coef = in.number();
      have_coef = true;
      in.accept('*');
    }
    int exponent = 0;
    if (in.accept('t')) {
      exponent = 1;
      if (in.accept('^')) {
        const bool negative = in.accept('-');
        const long long e = in.number();
        exponent = checked_exponent(negative ? -e : e);
      }
    } else if (!have_coef) {
      in.fail("expected coefficient or 't'");
    }
    result.add_term(exponent, checked_mul(sign, coef));
  }
  return result;
}

LaurentPoly lp_mul(const LaurentPoly& p, const LaurentPoly& q) { return p * q; }

LaurentPoly lp_substitute_power(const LaurentPoly& p, int n) {
  if (n < 1) throw SemanticError("substitution power must be >= 1");
  LaurentPoly r;
  for (const auto& [e, c] : p.terms()) {
    r += LaurentPoly::monomial(checked_exponent(static_cast<long long>(e) * n), c);
  }
  return r;
}

LaurentPoly lp_divide_exact(const LaurentPoly& num, const LaurentPoly& den) {
  if (den.is_zero()) throw InexactDivision("division by the zero polynomial");
  if (num.is_zero()) return {};

  // Strip the unit t^k from both sides, then run ordinary long division.
  LaurentPoly rem = num.shifted(-num.min_exponent());
  const LaurentPoly d = den.shifted(-den.min_exponent());
  const int d_deg = d.max_exponent();
  const Coefficient d_lead = d.coefficient(d_deg);

  LaurentPoly quotient;
  while (!rem.is_zero() && rem.max_exponent() >= d_deg) {
    const int deg = rem.max_exponent();
    const Coefficient lead = rem.coefficient(deg);
    if (lead % d_lead != 0) break;
    const LaurentPoly term = LaurentPoly::monomial(deg - d_deg, lead / d_lead);
    quotient += term;
    rem -= term * d;
  }
  if (!rem.is_zero()) {
    throw InexactDivision("(" + num.to_string() + ") is not divisible by (" + den.to_string() + ")");
  }
  return quotient.shifted(num.min_exponent() - den.min_exponent());
}

LaurentPoly normalize_alexander(const LaurentPoly& p) {
  if (p.is_zero()) return p;
  LaurentPoly r = p.shifted(-p.min_exponent());
  if (r.coefficient(r.max_exponent()) < 0) r = -r;
  return r;
}

LaurentPoly torus_alexander(int p, int q) {
  require_coprime(p, q);
  const int aq = q < 0 ? -q : q;
  if (p == 1 || aq == 1) return LaurentPoly(1);
  const long long pq = static_cast<long long>(p) * aq;
  const LaurentPoly num = t_pow_minus_one(checked_exponent(pq)) * t_pow_minus_one(1);
  const LaurentPoly den = t_pow_minus_one(p) * t_pow_minus_one(aq);
  return normalize_alexander(lp_divide_exact(num, den));
}

LaurentPoly cable_alexander(const LaurentPoly& delta, int p, int q) {
  require_coprime(p, q);
  return normalize_alexander(lp_substitute_power(delta, p) * torus_alexander(p, q));
}

StaircaseExponents::StaircaseExponents(std::vector<int> exponents) : exponents_(std::move(exponents)) {
  if (exponents_.empty()) throw NotStaircaseForm("staircase exponent list is empty");
  for (std::size_t i = 1; i < exponents_.size(); ++i) {
    if (exponents_[i] >= exponents_[i - 1]) {
      throw NotStaircaseForm("staircase exponents must be strictly decreasing");
    }
  }
  if (exponents_.back() != 0) throw NotStaircaseForm("last staircase exponent must be 0");
  if (exponents_.size() % 2 == 0) throw NotStaircaseForm("staircase needs an odd number of terms");
  const std::size_t k = exponents_.size() - 1;
  for (std::size_t i = 0; i <= k; ++i) {
    if (exponents_[i] + exponents_[k - i] != exponents_.front()) {
      throw NotStaircaseForm("staircase exponents fail the symmetry n_i + n_{k-i} = 2g");
    }
  }
}

LaurentPoly StaircaseExponents::polynomial() const {
  LaurentPoly r;
  for (std::size_t i = 0; i < exponents_.size(); ++i) {
    r += LaurentPoly::monomial(exponents_[i], i % 2 == 0 ? 1 : -1);
  }
  return r;
}

StaircaseExponents staircase_exponents(const LaurentPoly& p) {
  if (p.is_zero()) throw NotStaircaseForm("zero polynomial");
  const LaurentPoly n = normalize_alexander(p);
  std::vector<int> exps;
  exps.reserve(n.term_count());
  Coefficient expected = 1;
  for (auto it = n.terms().rbegin(); it != n.terms().rend(); ++it) {
    if (it->second != expected) {
      throw NotStaircaseForm("coefficients of " + n.to_string() + " do not alternate +1/-1");
    }
    exps.push_back(it->first);
    expected = -expected;
  }
  return StaircaseExponents(std::move(exps));
}

}  // namespace kfc
