#include "kfc/knot_expr.hpp"

#include <cctype>
#include <charconv>
#include <numeric>

#include "kfc/error.hpp"

namespace kfc {

KnotExpr::KnotExpr(Kind kind, int p, int q, std::shared_ptr<const KnotExpr> a,
                   std::shared_ptr<const KnotExpr> b)
    : kind_(kind), p_(p), q_(q), a_(std::move(a)), b_(std::move(b)) {}

KnotExpr KnotExpr::unknot() { return KnotExpr(Kind::Unknot, 0, 0, nullptr, nullptr); }

KnotExpr KnotExpr::torus(int p, int q) {
  if (p < 1 || q < 1) {
    throw SemanticError("torus knot T(" + std::to_string(p) + "," + std::to_string(q) +
                        ") needs positive parameters; write -T(p,q) for the mirror");
  }
  if (std::gcd(p, q) != 1) {
    throw NotCoprime("T(" + std::to_string(p) + "," + std::to_string(q) + "): parameters are not coprime");
  }
  return KnotExpr(Kind::Torus, p, q, nullptr, nullptr);
}

KnotExpr KnotExpr::cable(KnotExpr inner, int p, int q) {
  if (p < 1) throw SemanticError("cable winding number must be positive, got " + std::to_string(p));
  if (std::gcd(p, q) != 1) {
    throw NotCoprime("cable (" + std::to_string(p) + "," + std::to_string(q) + "): parameters are not coprime");
  }
  return KnotExpr(Kind::Cable, p, q, std::make_shared<const KnotExpr>(std::move(inner)), nullptr);
}

KnotExpr KnotExpr::sum(KnotExpr left, KnotExpr right) {
  return KnotExpr(Kind::Sum, 0, 0, std::make_shared<const KnotExpr>(std::move(left)),
                  std::make_shared<const KnotExpr>(std::move(right)));
}

KnotExpr KnotExpr::mirror(KnotExpr inner) {
  return KnotExpr(Kind::Mirror, 0, 0, std::make_shared<const KnotExpr>(std::move(inner)), nullptr);
}

KnotExpr KnotExpr::whitehead_double() { return KnotExpr(Kind::WhiteheadDouble, 0, 0, nullptr, nullptr); }

std::string KnotExpr::to_string() const {
  switch (kind_) {
    case Kind::Unknot:
      return "U";
    case Kind::WhiteheadDouble:
      return "D";
    case Kind::Torus:
      return "T(" + std::to_string(p_) + "," + std::to_string(q_) + ")";
    case Kind::Cable:
      return "C(" + a_->to_string() + ";" + std::to_string(p_) + "," + std::to_string(q_) + ")";
    case Kind::Mirror:
      if (a_->kind_ == Kind::Sum) return "-(" + a_->to_string() + ")";
      return "-" + a_->to_string();
    case Kind::Sum: {
      std::string rhs = b_->to_string();
      if (b_->kind_ == Kind::Sum) rhs = "(" + rhs + ")";
      return a_->to_string() + " + " + rhs;
    }
  }
  return {};
}

bool operator==(const KnotExpr& x, const KnotExpr& y) {
  if (x.kind_ != y.kind_ || x.p_ != y.p_ || x.q_ != y.q_) return false;
  if ((x.a_ == nullptr) != (y.a_ == nullptr) || (x.b_ == nullptr) != (y.b_ == nullptr)) return false;
  if (x.a_ && !(*x.a_ == *y.a_)) return false;
  if (x.b_ && !(*x.b_ == *y.b_)) return false;
  return true;
}

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  KnotExpr parse() {
    KnotExpr e = expr();
    skip_space();
    if (pos_ < text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, 1, pos_ + 1); }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char ch) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  void expect(char ch) {
    if (!accept(ch)) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + ch + "' before end of input");
      fail(std::string("expected '") + ch + "', found '" + text_[pos_] + "'");
    }
  }

  int integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    int value = 0;
    const char* first = text_.data() + start + (start < text_.size() && text_[start] == '+' ? 1 : 0);
    auto [ptr, ec] = std::from_chars(first, text_.data() + pos_, value);
    if (ec != std::errc{} || ptr != text_.data() + pos_ || pos_ == start) {
      pos_ = start;
      fail("expected an integer");
    }
    return value;
  }

  KnotExpr expr() {
    KnotExpr e = term();
    while (accept('+')) e = KnotExpr::sum(std::move(e), term());
    return e;
  }

  KnotExpr term() {
    if (accept('-')) return KnotExpr::mirror(term());
    return atom();
  }

  KnotExpr atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("expected a knot before end of input");
    const std::size_t start = pos_;
    const char ch = text_[pos_++];
    switch (ch) {
      case 'U':
        return KnotExpr::unknot();
      case 'D':
        return KnotExpr::whitehead_double();
      case 'T': {
        expect('(');
        const int p = integer();
        expect(',');
        const int q = integer();
        expect(')');
        return semantic(start, [&] { return KnotExpr::torus(p, q); });
      }
      case 'C': {
        expect('(');
        KnotExpr inner = expr();
        expect(';');
        const int p = integer();
        expect(',');
        const int q = integer();
        expect(')');
        return semantic(start, [&] { return KnotExpr::cable(std::move(inner), p, q); });
      }
      case '(': {
        KnotExpr e = expr();
        expect(')');
        return e;
      }
      default:
        pos_ = start;
        fail("unexpected '" + std::string(1, ch) + "'");
    }
  }

  // Prefixes semantic errors with the position of the offending atom.
  template <class F>
  KnotExpr semantic(std::size_t start, F&& build) {
    try {
      return build();
    } catch (const NotCoprime& e) {
      throw NotCoprime(std::string(e.what()) + " (column " + std::to_string(start + 1) + ")");
    } catch (const SemanticError& e) {
      throw SemanticError(std::string(e.what()) + " (column " + std::to_string(start + 1) + ")");
    }
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

KnotExpr parse_knot(std::string_view text) { return Parser(text).parse(); }

}  // namespace kfc
