#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "hicalc/parser.hpp"
#include "hicalc/standard_basis.hpp"

using hicalc::compute_error;
using hicalc::Exponents;
using hicalc::MonomialOrder;
using hicalc::parse_polynomial;
using hicalc::Polynomial;

namespace {

Polynomial poly(const std::string& s, const std::vector<std::string>& vars) {
  return parse_polynomial(s, vars);
}

}  // namespace

TEST_CASE("monomial orders agree on same-degree comparisons", "[local]") {
  const Exponents x2{2, 0}, xy{1, 1}, y2{0, 2};
  for (auto ord : {MonomialOrder::DegRevLex, MonomialOrder::NegDegRevLex}) {
    CHECK(hicalc::monomial_less(xy, x2, ord));
    CHECK(hicalc::monomial_less(y2, xy, ord));
  }
}

TEST_CASE("global and local orders differ across degrees", "[local]") {
  const Exponents one{0, 0}, x{1, 0}, x2{2, 0};
  // global: higher degree wins
  CHECK(hicalc::monomial_less(x, x2, MonomialOrder::DegRevLex));
  CHECK(hicalc::monomial_less(one, x, MonomialOrder::DegRevLex));
  // local: lower degree wins, 1 is the largest monomial
  CHECK(hicalc::monomial_less(x2, x, MonomialOrder::NegDegRevLex));
  CHECK(hicalc::monomial_less(x, one, MonomialOrder::NegDegRevLex));
}

TEST_CASE("leading terms under both orders", "[local]") {
  const Polynomial f = poly("x + x^2", {"x"});
  CHECK(hicalc::leading_term(f, MonomialOrder::DegRevLex).mono == Exponents{2});
  CHECK(hicalc::leading_term(f, MonomialOrder::NegDegRevLex).mono == Exponents{1});
  CHECK_THROWS_AS(hicalc::leading_term(Polynomial(), MonomialOrder::DegRevLex),
                  compute_error);
}

TEST_CASE("global normal form fully reduces", "[local]") {
  const std::vector<Polynomial> basis = {poly("x^2 - y", {"x", "y"}),
                                         poly("y^2 - 1", {"x", "y"})};
  const Polynomial h = poly("x^4 + y^3", {"x", "y"});
  // x^4 -> y^2 -> 1 and y^3 -> y, so the normal form is y + 1
  const Polynomial nf = hicalc::normal_form_global(h, basis);
  CHECK(hicalc::to_string(nf) == "y + 1");
}

TEST_CASE("local reduction handles reducers that would loop a naive divider",
          "[local]") {
  // Dividing x by x - x^2 with plain long division never stops: the quotient
  // tail keeps producing higher powers.  The local algorithm may insert the
  // partial remainder itself as a reducer, which closes the loop: x reduces
  // to 0, consistent with x = (1-x)^{-1} (x - x^2) in the local ring.
  const Polynomial h = poly("x", {"x"});
  const std::vector<Polynomial> basis = {poly("x - x^2", {"x"})};
  const Polynomial nf = hicalc::mora_normal_form(h, basis);
  CHECK(nf.is_zero());
}

TEST_CASE("local reduction reports when the step cap is exhausted", "[local]") {
  const Polynomial h = poly("x", {"x"});
  const std::vector<Polynomial> basis = {poly("x - x^2", {"x"})};
  CHECK_THROWS_WITH(hicalc::mora_normal_form(h, basis, MonomialOrder::NegDegRevLex, 1),
                    Catch::Matchers::ContainsSubstring("cap"));
}

TEST_CASE("reduced global basis of a zero-dimensional ideal", "[local]") {
  const std::vector<std::string> vars{"x", "y"};
  const hicalc::StandardBasis gb =
      hicalc::buchberger({poly("x^2 + y^2", vars), poly("x*y", vars)});
  // S-polynomial chain adds y^3; the reduced basis's leading monomials are
  // x^2, x*y, y^3
  const std::vector<Exponents> lms = gb.leading_monomials();
  REQUIRE(lms.size() == 3);
  CHECK(std::find(lms.begin(), lms.end(), Exponents{2, 0}) != lms.end());
  CHECK(std::find(lms.begin(), lms.end(), Exponents{1, 1}) != lms.end());
  CHECK(std::find(lms.begin(), lms.end(), Exponents{0, 3}) != lms.end());
  CHECK(hicalc::staircase_dimension(gb) == 4);
  // every original generator reduces to zero against the basis
  CHECK(hicalc::normal_form_global(poly("x^2 + y^2", vars), gb.generators).is_zero());
  CHECK(hicalc::normal_form_global(poly("x*y", vars), gb.generators).is_zero());
}

TEST_CASE("staircase dimension", "[local]") {
  const std::vector<std::string> vars{"x", "y"};
  // leading monomials x^2 and y^4 leave a 2x4 box
  const hicalc::StandardBasis gb =
      hicalc::buchberger({poly("x^2", vars), poly("y^4", vars)});
  CHECK(hicalc::staircase_dimension(gb) == 8);
  // a single leading monomial x leaves infinitely many y powers
  const hicalc::StandardBasis part = hicalc::buchberger({poly("x", vars)});
  CHECK(!hicalc::staircase_dimension(part));
  // the unit ideal has an empty staircase
  const hicalc::StandardBasis unit = hicalc::buchberger({poly("2", vars)});
  CHECK(hicalc::staircase_dimension(unit) == 0);
}

TEST_CASE("milnor numbers of classical germs", "[local]") {
  const std::vector<std::string> xy{"x", "y"};
  CHECK(hicalc::milnor_number(poly("x^2 + y^2", xy)) == 1);
  CHECK(hicalc::milnor_number(poly("x^2 + y^3", xy)) == 2);
  CHECK(hicalc::milnor_number(poly("x^3 + y^4", xy)) == 6);
  CHECK(hicalc::milnor_number(poly("x^3 + y^5", xy)) == 8);
  CHECK(hicalc::milnor_number(poly("x^3 + x*y^3", xy)) == 7);
  CHECK(hicalc::milnor_number(poly("x^2*y + x*y^2", xy)) == 4);
  CHECK(hicalc::milnor_number(poly("x^2 + y^2 + z^2", {"x", "y", "z"})) == 1);
  // units in the jacobian ideal happen for smooth germs only
  CHECK_THROWS_AS(hicalc::milnor_number(poly("x + y^2", xy)), compute_error);
  // non-isolated: the jacobian staircase is infinite
  CHECK_THROWS_WITH(hicalc::milnor_number(poly("x^2*y^2", xy)),
                    Catch::Matchers::ContainsSubstring("non-isolated"));
  CHECK_THROWS_AS(hicalc::milnor_number(Polynomial()), compute_error);
}

TEST_CASE("higher powers of the maximal ideal do not fool the local engine",
          "[local]") {
  const std::vector<std::string> xy{"x", "y"};
  // x^2 + y^3 + y^5 has the same milnor number as x^2 + y^3: the y^5 tail is
  // absorbed by the local ring units
  CHECK(hicalc::milnor_number(poly("x^2 + y^3 + y^5", xy)) == 2);
  // perturbing a cusp into a node drops mu from 2 to 1
  CHECK(hicalc::milnor_number(poly("x^2 + y^3 + y^2", xy)) == 1);
}

TEST_CASE("node detection", "[local]") {
  const std::vector<std::string> xy{"x", "y"};
  CHECK(hicalc::is_node(poly("x^2 + y^2", xy)));
  CHECK(hicalc::is_node(poly("x*y", xy)));
  CHECK(hicalc::is_node(poly("x^2 + y^2 + y^3", xy)));
  CHECK_FALSE(hicalc::is_node(poly("x^2 + y^3", xy)));
  CHECK_FALSE(hicalc::is_node(poly("x^2*y + x*y^2", xy)));
  CHECK(hicalc::is_node(
      poly("x^2 + y^2 + z^2 + w^2", std::vector<std::string>{"x", "y", "z", "w"})));
}
