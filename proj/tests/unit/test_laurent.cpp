#include <random>

#include "doctest.h"
#include "kfc/error.hpp"
#include "kfc/laurent.hpp"
#include "oracles.hpp"

using kfc::LaurentPoly;

namespace {

LaurentPoly P(const char* s) { return LaurentPoly::parse(s); }

}  // namespace

TEST_CASE("construction drops zero coefficients") {
  LaurentPoly p{{2, 1}, {1, 0}, {0, 3}, {2, -1}};
  CHECK(p == LaurentPoly(3));
  CHECK(p.term_count() == 1);
  CHECK((P("t - 1") - P("t - 1")).is_zero());
}

TEST_CASE("rendering and parsing") {
  CHECK(P("t^12 - t^11 + t^8 - t^6 + t^4 - t + 1").to_string() == "t^12 - t^11 + t^8 - t^6 + t^4 - t + 1");
  CHECK(LaurentPoly().to_string() == "0");
  CHECK(P("-3t^2 + 2").coefficient(2) == -3);
  CHECK(P("2*t^3 - t^-1").coefficient(-1) == -1);
  CHECK(P("  1 ") == LaurentPoly(1));
  CHECK_THROWS_AS(P("t^"), kfc::ParseError);
  CHECK_THROWS_AS(P("t + + 1"), kfc::ParseError);
  CHECK_THROWS_AS(P("x"), kfc::ParseError);
}

TEST_CASE("lp_mul") {
  CHECK(kfc::lp_mul(P("t - 1"), P("t + 1")) == P("t^2 - 1"));
  const auto p = P("t^4 - 2t + 7");
  CHECK(kfc::lp_mul(LaurentPoly(1), p) == p);
  CHECK(kfc::lp_mul(LaurentPoly(), p).is_zero());
  // Multiply then divide returns the first factor.
  const auto a = P("t^2 - t + 1");
  const auto b = P("t^4 + t^3 - t - 1");
  CHECK(kfc::lp_divide_exact(kfc::lp_mul(a, b), b) == a);
}

TEST_CASE("lp_substitute_power") {
  CHECK(kfc::lp_substitute_power(P("t^2 - t + 1"), 2) == P("t^4 - t^2 + 1"));
  CHECK(kfc::lp_substitute_power(P("t^5 - 3"), 1) == P("t^5 - 3"));
  CHECK(kfc::lp_substitute_power(P("t - 1"), 3) == P("t^3 - 1"));
  CHECK_THROWS_AS(kfc::lp_substitute_power(P("t"), 0), kfc::SemanticError);
}

TEST_CASE("lp_divide_exact") {
  CHECK(kfc::lp_divide_exact(P("t^2 - 1"), P("t - 1")) == P("t + 1"));
  const auto num = kfc::lp_mul(P("t^6 - 1"), P("t - 1"));
  const auto den = kfc::lp_mul(P("t^2 - 1"), P("t^3 - 1"));
  CHECK(kfc::lp_divide_exact(num, den) == P("t^2 - t + 1"));
  CHECK_THROWS_AS(kfc::lp_divide_exact(P("t^2 - 1"), P("t^2 + 1")), kfc::InexactDivision);
  CHECK_THROWS_AS(kfc::lp_divide_exact(P("t"), LaurentPoly()), kfc::InexactDivision);
  CHECK(kfc::lp_divide_exact(P("t^-2 - 1"), P("t^-1 - 1")) == P("t^-1 + 1"));
}

TEST_CASE("torus_alexander") {
  CHECK(kfc::torus_alexander(3, 4) == P("t^6 - t^5 + t^3 - t + 1"));
  CHECK(kfc::torus_alexander(4, 5) == P("t^12 - t^11 + t^8 - t^6 + t^4 - t + 1"));
  CHECK(kfc::torus_alexander(1, 7) == LaurentPoly(1));
  CHECK(kfc::torus_alexander(2, -3) == kfc::torus_alexander(2, 3));
  CHECK_THROWS_AS(kfc::torus_alexander(2, 4), kfc::NotCoprime);
  CHECK_THROWS_AS(kfc::torus_alexander(0, 1), kfc::NotCoprime);
}

TEST_CASE("torus_alexander against direct evaluation") {
  for (int p = 2; p <= 7; ++p) {
    for (int q = p + 1; q <= 9; ++q) {
      if (std::gcd(p, q) != 1) continue;
      const auto poly = kfc::torus_alexander(p, q);
      CHECK(poly == kfc::torus_alexander(q, p));
      for (std::int64_t t : {2, 3, 5}) {
        if (t == 5 && p * q > 50) continue;  // 5^pq must fit in 128 bits
        CHECK(oracle::evaluate(poly, t) == oracle::torus_value(p, q, t));
      }
    }
  }
}

TEST_CASE("cable_alexander") {
  const auto trefoil = kfc::torus_alexander(2, 3);
  CHECK(kfc::cable_alexander(trefoil, 2, 3) == P("t^6 - t^5 + t^3 - t + 1"));
  CHECK(kfc::cable_alexander(LaurentPoly(1), 3, 5) == kfc::torus_alexander(3, 5));
  CHECK(kfc::cable_alexander(trefoil, 2, -1) == P("t^4 - t^2 + 1"));
  CHECK_THROWS_AS(kfc::cable_alexander(trefoil, 2, 4), kfc::NotCoprime);
  // Leading exponents of the (2,2m+1) cable of T(p,p+1) with p = 3, m = 5: 2p^2 - 2p + 2m = 22.
  const auto e = kfc::staircase_exponents(kfc::cable_alexander(kfc::torus_alexander(3, 4), 2, 11));
  CHECK(e[0] == 22);
}

TEST_CASE("staircase_exponents") {
  CHECK(kfc::staircase_exponents(P("t^2 - t + 1")).values() == std::vector<int>{2, 1, 0});
  CHECK(kfc::staircase_exponents(kfc::torus_alexander(4, 5)).values() == std::vector<int>{12, 11, 8, 6, 4, 1, 0});
  CHECK(kfc::staircase_exponents(LaurentPoly(1)).values() == std::vector<int>{0});
  CHECK(kfc::staircase_exponents(P("t^-1 - 1 + t")).values() == std::vector<int>{2, 1, 0});
  CHECK_THROWS_AS(kfc::staircase_exponents(P("t^2 + t + 1")), kfc::NotStaircaseForm);
  CHECK_THROWS_AS(kfc::staircase_exponents(P("t^2 - 2t + 1")), kfc::NotStaircaseForm);
  CHECK_THROWS_AS(kfc::staircase_exponents(P("t - 1")), kfc::NotStaircaseForm);
  CHECK_THROWS_AS(kfc::staircase_exponents(P("t^4 - t^3 + 1")), kfc::NotStaircaseForm);
  CHECK_THROWS_AS(kfc::StaircaseExponents({3, 1, 0}), kfc::NotStaircaseForm);
  CHECK_THROWS_AS(kfc::StaircaseExponents({2, 2, 0}), kfc::NotStaircaseForm);
  CHECK(kfc::StaircaseExponents({4, 2, 0}).genus() == 2);
}

TEST_CASE("torus staircases match the semigroup description") {
  for (int p = 2; p <= 7; ++p) {
    for (int q = p + 1; q <= 11; ++q) {
      if (std::gcd(p, q) != 1) continue;
      CAPTURE(p);
      CAPTURE(q);
      CHECK(kfc::staircase_exponents(kfc::torus_alexander(p, q)).values() == oracle::semigroup_staircase(p, q));
    }
  }
}

TEST_CASE("prefix of T(p,p+1) exponents") {
  for (int p = 3; p <= 9; ++p) {
    const auto e = kfc::staircase_exponents(kfc::torus_alexander(p, p + 1));
    CAPTURE(p);
    CHECK(e[0] == p * p - p);
    CHECK(e[1] == p * p - p - 1);
    CHECK(e[2] == p * p - 2 * p);
    CHECK(e[3] == p * p - 2 * p - 2);
  }
}

TEST_CASE("prefix of T(2,3;p,p+1) exponents") {
  for (int p = 2; p <= 8; ++p) {
    const auto e = kfc::staircase_exponents(kfc::cable_alexander(kfc::torus_alexander(2, 3), p, p + 1));
    CAPTURE(p);
    CHECK(e[0] == p * p + p);
    CHECK(e[1] == p * p + p - 1);
    CHECK(e[2] == p * p - 1);
  }
}

TEST_CASE("prefix of T(p,p+1;2,2m+1) exponents") {
  for (int p = 2; p <= 5; ++p) {
    for (int m = std::max(2, p * p - p - 1); m <= p * p - p + 4; ++m) {
      const auto e = kfc::staircase_exponents(kfc::cable_alexander(kfc::torus_alexander(p, p + 1), 2, 2 * m + 1));
      CAPTURE(p);
      CAPTURE(m);
      CHECK(e[0] == 2 * p * p - 2 * p + 2 * m);
      CHECK(e[1] == 2 * p * p - 2 * p + 2 * m - 1);
      CHECK(e[2] == 2 * p * p - 4 * p + 2 * m);
    }
  }
}

TEST_CASE("randomized division round trip") {
  std::mt19937 rng(20240611);
  std::uniform_int_distribution<int> coeff(-9, 9);
  std::uniform_int_distribution<int> len(1, 6);
  std::uniform_int_distribution<int> shift(-4, 4);
  const auto random_poly = [&] {
    LaurentPoly p;
    while (p.is_zero()) {
      const int n = len(rng);
      const int s = shift(rng);
      for (int k = 0; k < n; ++k) p += LaurentPoly::monomial(s + k, coeff(rng));
    }
    return p;
  };
  for (int trial = 0; trial < 200; ++trial) {
    const auto a = random_poly();
    const auto b = random_poly();
    CHECK(kfc::lp_divide_exact(kfc::lp_mul(a, b), b) == a);
    CHECK(LaurentPoly::parse(a.to_string()) == a);
  }
}

TEST_CASE("overflow is detected") {
  const auto big = LaurentPoly::monomial(0, std::int64_t{1} << 62);
  CHECK_THROWS_AS(big + big, kfc::Overflow);
  CHECK_THROWS_AS(kfc::lp_mul(big, LaurentPoly(4)), kfc::Overflow);
}
