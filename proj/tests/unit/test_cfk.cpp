#include <random>

#include "doctest.h"
#include "kfc/cfk.hpp"
#include "kfc/error.hpp"
#include "kfc/invariants.hpp"
#include "kfc/knots.hpp"
#include "oracles.hpp"

using kfc::CfkComplex;

namespace {

CfkComplex trefoil() { return kfc::staircase(kfc::StaircaseExponents({2, 1, 0})); }

CfkComplex knot(const char* expr) { return kfc::class_complex(kfc::parse_knot(expr)).complex; }

}  // namespace

TEST_CASE("generators and arrows") {
  CfkComplex c;
  const auto x = c.add_generator("x", 1, 0);
  const auto y = c.add_generator("y", 0, -1);
  CHECK_THROWS_AS(c.add_generator("x", 0, 0), kfc::SemanticError);
  CHECK_THROWS_AS(c.add_generator("", 0, 0), kfc::SemanticError);
  CHECK_THROWS_AS(c.add_generator("a b", 0, 0), kfc::SemanticError);
  c.toggle_arrow(y, x, 1);
  CHECK(c.has_arrow(y, x, 1));
  c.toggle_arrow("y", "x", 1);
  CHECK(c.arrows().empty());
  CHECK_THROWS_AS(c.toggle_arrow("y", "zz", 0), kfc::SemanticError);
  CHECK(c.min_alexander() == 0);
  CHECK(c.max_alexander() == 1);
}

TEST_CASE("validate") {
  SUBCASE("trefoil staircase is a knot complex") {
    const auto r = kfc::validate(trefoil(), true);
    CHECK(r.valid());
    CHECK(r.column_rank == 1U);
    CHECK(r.row_rank == 1U);
    CHECK(r.warnings.empty());
  }
  SUBCASE("unknot") { CHECK(kfc::validate(kfc::unknot_complex(), true).valid()); }
  SUBCASE("d^2 witness") {
    CfkComplex c;
    c.add_generator("x", 0, 2);
    c.add_generator("y", 0, 1);
    c.add_generator("z", 0, 0);
    c.toggle_arrow("x", "y", 0);
    c.toggle_arrow("y", "z", 0);
    const auto r = kfc::validate(c, false);
    CHECK(!r.valid());
    REQUIRE(r.d_squared_witnesses.size() == 1);
    CHECK(r.d_squared_witnesses[0] == std::pair<std::string, std::string>{"x", "z"});
  }
  SUBCASE("grading and filtration violations") {
    CfkComplex c;
    c.add_generator("x", 0, 0);
    c.add_generator("y", 2, -1);
    c.add_generator("z", 0, 0);
    c.toggle_arrow("x", "y", 0);   // raises A
    c.toggle_arrow("x", "z", 0);   // wrong Maslov
    c.toggle_arrow("z", "y", -1);  // negative U-power
    const auto r = kfc::validate(c, true);
    CHECK(!r.valid());
    CHECK(r.arrow_violations.size() >= 3);
    CHECK(!r.column_rank);
  }
  SUBCASE("rank two column is rejected as a knot class") {
    CfkComplex c;
    c.add_generator("x", 0, 0);
    c.add_generator("y", 0, 0);
    const auto r = kfc::validate(c, true);
    CHECK(!r.valid());
    CHECK(r.column_rank == 2U);
    CHECK(kfc::validate(c, false).valid());
  }
  SUBCASE("asymmetric gradings give a warning only") {
    CfkComplex c;
    c.add_generator("x", 1, 0);
    const auto r = kfc::validate(c, false);
    CHECK(r.valid());
    CHECK(!r.warnings.empty());
  }
}

TEST_CASE("tensor") {
  const auto t = trefoil();
  const auto u = kfc::unknot_complex();
  const auto tu = kfc::tensor(t, u);
  CHECK(tu.size() == 3);
  CHECK(kfc::grading_table(tu) == kfc::grading_table(t));
  CHECK(tu.arrows().size() == t.arrows().size());

  const auto tt = kfc::tensor(t, t);
  CHECK(tt.size() == 9);
  CHECK(kfc::validate(tt, true).valid());
  CHECK(tt.find("x1.x1"));
  const auto x11 = *tt.find("x1.x1");
  CHECK(tt.outgoing(x11).size() == 4);

  // Names stay unambiguous under nesting.
  const auto ttt = kfc::tensor(tt, t);
  CHECK(ttt.find("(x0.x1).x2"));
  CHECK(kfc::tensor_name("a", "b.c") == "a.(b.c)");

  const auto diff = kfc::tensor(t, kfc::dual(t));
  CHECK(diff.size() == 9);
  CHECK(kfc::epsilon(diff) == 0);
  CHECK(kfc::epsilon_oracle(diff) == 0);
}

TEST_CASE("direct sum") {
  const auto s = kfc::direct_sum(trefoil(), kfc::with_prefix(trefoil(), "k"));
  CHECK(s.size() == 6);
  CHECK(s.find("kx1"));
  CHECK(s.arrows().size() == 4);
  CHECK_THROWS_AS(kfc::direct_sum(trefoil(), trefoil()), kfc::SemanticError);
}

TEST_CASE("dual") {
  const auto d = kfc::dual(trefoil());
  // Standard model of -T(2,3): del(a) = b, del(c) = b with a = x2*, b = x1*,
  // c = U^-1 x0*, at (0,1), (0,0), (1,0).
  const auto a = *d.find("x2*");
  const auto b = *d.find("x1*");
  const auto c = *d.find("x0*");
  CHECK(d.generator(a).alexander == 1);
  CHECK(d.generator(b).alexander == 0);
  // U^-1 x0* sits at (1, A(x0*) + 1).
  CHECK(d.generator(c).alexander + 1 == 0);
  CHECK(d.has_arrow(a, b, 0));
  CHECK(d.has_arrow(c, b, 1));  // del(U^-1 x0*) = U^-1 U x1*
  CHECK(d.arrows().size() == 2);
  CHECK(kfc::validate(d, true).valid());

  CHECK(kfc::dual(kfc::unknot_complex()).size() == 1);
  CHECK(kfc::dual(kfc::dual(trefoil())) == trefoil());
  CHECK(kfc::dual_name("x*") == "x");
  CHECK(kfc::dual_name(kfc::dual_name("x")) == "x");
}

TEST_CASE("reduce") {
  SUBCASE("reduced staircases are unchanged") {
    for (const char* e : {"T(2,3)", "T(3,4)", "T(4,5)", "C(D;3,4)"}) {
      const auto c = knot(e);
      CHECK(kfc::reduce(c) == c);
    }
  }
  SUBCASE("acyclic pair cancels") {
    CfkComplex c;
    c.add_generator("x", 0, 1);
    c.add_generator("y", 0, 0);
    c.toggle_arrow("x", "y", 0);
    CHECK(kfc::reduce(c).empty());
  }
  SUBCASE("cancellation with a second arrow into the pair") {
    // del(w) = y, del(x) = y + U z. Cancelling w -> y leaves x with del(x) = U z.
    CfkComplex c;
    c.add_generator("w", 0, 1);
    c.add_generator("x", 0, 1);
    c.add_generator("y", 0, 0);
    c.add_generator("z", 1, 2);
    c.toggle_arrow("w", "y", 0);
    c.toggle_arrow("x", "y", 0);
    c.toggle_arrow("x", "z", 1);
    const auto r = kfc::reduce(c, {true});
    CHECK(r.size() == 2);
    REQUIRE(r.find("x"));
    CHECK(r.has_arrow(*r.find("x"), *r.find("z"), 1));
  }
  SUBCASE("zigzag through a cancelled pair") {
    // del(a) = y + U z, del(b) = y. Cancelling a -> y gives del(b) = U z.
    CfkComplex c;
    c.add_generator("a", 0, 1);
    c.add_generator("b", 0, 1);
    c.add_generator("y", 0, 0);
    c.add_generator("z", 1, 2);
    c.toggle_arrow("a", "y", 0);
    c.toggle_arrow("a", "z", 1);
    c.toggle_arrow("b", "y", 0);
    const auto r = kfc::reduce(c, {true});
    REQUIRE(r.size() == 2);
    REQUIRE(r.find("b"));
    CHECK(r.has_arrow(*r.find("b"), *r.find("z"), 1));
  }
  SUBCASE("squares stay and invariants are unchanged") {
    auto c = kfc::direct_sum(trefoil(), kfc::square_summand("s", 1, 1, 0, 0));
    c = kfc::direct_sum(c, kfc::square_summand("t", 2, 1, -1, 3));
    const auto r = kfc::reduce(c, {true});
    // Squares have no bidegree-(0,0) arrows, so they stay in the reduced model.
    CHECK(r.size() == c.size());
    CHECK(kfc::tau(r) == 1);
    CHECK(kfc::epsilon(r) == 1);
  }
  SUBCASE("trefoil minus trefoil") {
    const auto r = kfc::reduce(kfc::tensor(trefoil(), kfc::dual(trefoil())), {true});
    CHECK(kfc::tau(r) == 0);
    CHECK(kfc::epsilon(r) == 0);
  }
}

TEST_CASE("filtered basis change is an isomorphism") {
  auto c = kfc::direct_sum(trefoil(), kfc::square_summand("s", 1, 1, 0, -1));
  // x0 (A=1, M=0) and s.a (A=1, M=0): U^0 change.
  const auto x0 = *c.find("x0");
  const auto sa = *c.find("sa");
  const auto changed = kfc::filtered_basis_change(c, x0, sa, 0);
  CHECK(kfc::validate(changed, true).valid());
  CHECK(kfc::tau(changed) == 1);
  CHECK(kfc::epsilon(changed) == 1);
  CHECK(kfc::a1(changed) == 1);
  CHECK_THROWS_AS(kfc::filtered_basis_change(c, x0, sa, 1), kfc::SemanticError);
  CHECK_THROWS_AS(kfc::filtered_basis_change(c, x0, x0, 0), kfc::SemanticError);
}

TEST_CASE("square summand shape") {
  const auto s = kfc::square_summand("q", 2, 3, 1, 4);
  CHECK(kfc::validate(s, false).valid());
  CHECK(s.generator(*s.find("qa")).alexander == 3);
  CHECK(s.generator(*s.find("qc")).alexander == -2);
  CHECK(s.generator(*s.find("qd")).alexander == 0);
  CHECK(kfc::validate(s, true).column_rank == 0U);
  CHECK_THROWS_AS(kfc::square_summand("q", 0, 1, 0, 0), kfc::SemanticError);
}

TEST_CASE("serialization") {
  const auto t = trefoil();
  const std::string text = kfc::serialize(t);
  CHECK(text ==
        "cfk v1\n"
        "gen x2 A=-1 M=-2\n"
        "gen x1 A=0 M=-1\n"
        "gen x0 A=1 M=0\n"
        "arr x1 x2 u=0\n"
        "arr x1 x0 u=1\n");
  CHECK(kfc::serialize(kfc::deserialize(text)) == text);
  CHECK(kfc::deserialize(text) == t);

  SUBCASE("comments, blank lines and arrows before generators") {
    const auto c = kfc::deserialize("# model\n\ncfk v1\narr a b u=0\ngen a A=0 M=1\ngen b A=0 M=0\n");
    CHECK(c.size() == 2);
    CHECK(c.arrows().size() == 1);
  }
  SUBCASE("unknown generator") {
    try {
      kfc::deserialize("cfk v1\ngen a A=0 M=0\narr a b u=0\n");
      FAIL("expected a parse error");
    } catch (const kfc::ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(e.column() == 7);
    }
  }
  SUBCASE("malformed lines") {
    CHECK_THROWS_AS(kfc::deserialize("gen a A=0 M=0\n"), kfc::ParseError);
    CHECK_THROWS_AS(kfc::deserialize("cfk v1\ngen a A=x M=0\n"), kfc::ParseError);
    CHECK_THROWS_AS(kfc::deserialize("cfk v1\nnode a\n"), kfc::ParseError);
    CHECK_THROWS_AS(kfc::deserialize("cfk v1\ngen a A=0 M=0\ngen a A=1 M=0\n"), kfc::ParseError);
    CHECK_THROWS_AS(kfc::deserialize(""), kfc::ParseError);
  }
  SUBCASE("grading errors are left to validate") {
    const auto c = kfc::deserialize("cfk v1\ngen a A=0 M=0\ngen b A=0 M=0\narr a b u=0\n");
    CHECK(!kfc::validate(c, false).valid());
  }
}

TEST_CASE("grading table of a dual is mirrored") {
  for (const auto& e : oracle::catalog()) {
    const auto c = knot(e.c_str());
    const auto table = kfc::hfk_table(c);
    std::map<std::pair<int, int>, int> mirrored;
    for (const auto& [key, n] : table) mirrored[{-key.first, -key.second}] = n;
    CHECK(kfc::hfk_table(kfc::dual(c)) == mirrored);
  }
}
