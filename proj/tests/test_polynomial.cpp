#include <catch2/catch_amalgamated.hpp>

#include "hicalc/parser.hpp"
#include "hicalc/polynomial.hpp"

using hicalc::compute_error;
using hicalc::Exponents;
using hicalc::input_error;
using hicalc::parse_polynomial;
using hicalc::Polynomial;
using hicalc::ProjectivePoint;
using hicalc::Rational;

TEST_CASE("parser round-trips canonical strings", "[polynomial]") {
  CHECK(hicalc::to_string(parse_polynomial("x^2 + 2*x*y + y^2")) ==
        "x^2 + 2*x*y + y^2");
  CHECK(hicalc::to_string(parse_polynomial("y^2+x^2 + 2*y*x", {"x", "y"})) ==
        "x^2 + 2*x*y + y^2");
  CHECK(hicalc::to_string(parse_polynomial("x - x")) == "0");
  CHECK(hicalc::to_string(parse_polynomial("-(x - 3)*(x + 3)")) == "-x^2 + 9");
  CHECK(hicalc::to_string(parse_polynomial("1/2*x + 1/3")) == "1/2*x + 1/3");
  CHECK(hicalc::to_string(parse_polynomial("x^3 + x^2*z - y^2*z", {"x", "y", "z"})) ==
        "x^3 + x^2*z - y^2*z");
  // reordering terms changes neither the ring nor the canonical rendering
  // when the variable list is pinned
  CHECK(hicalc::to_string(parse_polynomial("x^3 - y^2*z + x^2*z", {"x", "y", "z"})) ==
        "x^3 + x^2*z - y^2*z");
}

TEST_CASE("variables are collected by first appearance, even with zero coefficient",
          "[polynomial]") {
  const Polynomial p = parse_polynomial("0*x + y*z");
  REQUIRE(p.variables() == std::vector<std::string>{"x", "y", "z"});
  CHECK(p.variable_count() == 3);
  CHECK(hicalc::to_string(p) == "y*z");
}

TEST_CASE("declared-variable parsing pins the ring", "[polynomial]") {
  const Polynomial p = parse_polynomial("y^2", {"x", "y", "z"});
  CHECK(p.variable_count() == 3);
  CHECK_THROWS_AS(parse_polynomial("x + q", {"x", "y"}), input_error);
  CHECK_THROWS_WITH(parse_polynomial("x + q", {"x", "y"}),
                    Catch::Matchers::ContainsSubstring("unknown variable"));
}

TEST_CASE("syntax errors carry line and column", "[polynomial]") {
  CHECK_THROWS_WITH(parse_polynomial("x +"),
                    Catch::Matchers::ContainsSubstring("syntax error"));
  CHECK_THROWS_WITH(parse_polynomial("x^"), Catch::Matchers::ContainsSubstring("column"));
  CHECK_THROWS_AS(parse_polynomial("(x"), input_error);
  CHECK_THROWS_AS(parse_polynomial(""), input_error);
  CHECK_THROWS_AS(parse_polynomial("x^65"), input_error);
  CHECK_THROWS_AS(parse_polynomial("x^-2"), input_error);
  CHECK_THROWS_AS(parse_polynomial("1/0"), input_error);
}

TEST_CASE("arithmetic is exact", "[polynomial]") {
  const Polynomial f = parse_polynomial("x + y");
  Polynomial p = f.pow(4);
  CHECK(p.coefficient(Exponents{2, 2}) == 6);
  CHECK(p.coefficient(Exponents{1, 3}) == 4);
  CHECK(p.total_degree() == 4);
  const Polynomial q = parse_polynomial("x - y");
  CHECK(hicalc::to_string(f * q) == "x^2 - y^2");
  CHECK((f - f).is_zero());
  CHECK((f - f).total_degree() == -1);
}

TEST_CASE("evaluation and shifting", "[polynomial]") {
  const Polynomial f = parse_polynomial("x^2*y - 3*x + 1/2");
  const Rational v = f.evaluate({Rational(2), Rational(-1)});
  CHECK(v == Rational(-4) - Rational(6) + Rational(1, 2) + Rational(0));
  // shift x -> x + 2 exactly: f(x+2, y)
  const Polynomial s = f.shift_variable(0, Rational(2));
  CHECK(s.evaluate({Rational(0), Rational(5)}) == f.evaluate({Rational(2), Rational(5)}));
  CHECK(s.evaluate({Rational(-2), Rational(3)}) == f.evaluate({Rational(0), Rational(3)}));
}

TEST_CASE("dehomogenize drops the chosen variable", "[polynomial]") {
  const Polynomial f = parse_polynomial("x^2*z + y^3 - z^3", {"x", "y", "z"});
  const Polynomial g = f.dehomogenize(2);
  CHECK(g.variable_count() == 2);
  CHECK(hicalc::to_string(g) == "y^3 + x^2 - 1");
}

TEST_CASE("homogeneity checks", "[polynomial]") {
  CHECK(hicalc::homogeneous_degree(parse_polynomial("x^3 + x*y^2")) == 3);
  CHECK(!hicalc::homogeneous_degree(parse_polynomial("x^3 + y^2")));
  CHECK(hicalc::weighted_degree(parse_polynomial("x^3 + y^5"), {5, 3}) == 15);
  CHECK(!hicalc::weighted_degree(parse_polynomial("x^3 + y^5"), {1, 1}));
}

TEST_CASE("projective points and localization", "[polynomial]") {
  CHECK_THROWS_AS(ProjectivePoint({Rational(0), Rational(0)}), input_error);

  const Polynomial cubic =
      parse_polynomial("x^3 + x^2*z - y^2*z", {"x", "y", "z"});
  const ProjectivePoint node({Rational(0), Rational(0), Rational(1)});
  REQUIRE(hicalc::is_singular_point(cubic, node));
  const Polynomial germ = hicalc::localize_at(cubic, node);
  CHECK(germ.variable_count() == 2);
  CHECK(germ.constant_term() == 0);
  CHECK(hicalc::hessian_rank_at_origin(germ) == 2);

  // [0 : 1 : 0] lies on the curve but only the z-partial vanishes there
  const ProjectivePoint smooth_pt({Rational(0), Rational(1), Rational(0)});
  CHECK_FALSE(hicalc::is_singular_point(cubic, smooth_pt));
}

TEST_CASE("localization at a point with nonunit coordinates", "[polynomial]") {
  // cone x*z - y^2 localized at [1 : -1 : 1]: a smooth point of the conic
  const Polynomial conic = parse_polynomial("x*z - y^2", {"x", "y", "z"});
  const ProjectivePoint p({Rational(1), Rational(-1), Rational(1)});
  CHECK_FALSE(hicalc::is_singular_point(conic, p));
  // scale invariance: the doubled representative sees the same geometry
  const ProjectivePoint p2({Rational(2), Rational(-2), Rational(2)});
  const Polynomial g = hicalc::localize_at(conic, p2);
  CHECK(g.constant_term() == 0);  // the point lies on the curve in this chart
}

TEST_CASE("hessian rank flags degenerate quadratic parts", "[polynomial]") {
  CHECK(hicalc::hessian_rank_at_origin(parse_polynomial("x^2 + y^2 + z^2")) == 3);
  CHECK(hicalc::hessian_rank_at_origin(parse_polynomial("x^2 + y^3")) == 1);
  CHECK(hicalc::hessian_rank_at_origin(parse_polynomial("x^3 + y^3")) == 0);
  CHECK(hicalc::hessian_rank_at_origin(parse_polynomial("x*y")) == 2);
  CHECK_THROWS_AS(hicalc::hessian_rank_at_origin(parse_polynomial("x + y^2")),
                  compute_error);
}
