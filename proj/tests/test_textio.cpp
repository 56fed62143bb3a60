#include "doctest.h"

#include "alcove/localization.hpp"
#include "alcove/textio.hpp"

using namespace alcove;

namespace {

AffineRoot ar(std::vector<long long> c, long long level) {
  return {FiniteRoot{std::move(c)}, level};
}

}  // namespace

TEST_CASE("rationals") {
  CHECK(format_rational(Rational(3)) == "3");
  CHECK(format_rational(Rational(-2, 4)) == "-1/2");
  CHECK(parse_rational("  -1/2 ") == Rational(-1, 2));
  CHECK(parse_rational("7") == 7);
  CHECK_THROWS_AS(parse_rational("x"), Error);
  CHECK_THROWS_AS(parse_rational(""), Error);
}

TEST_CASE("words and masks") {
  CHECK(format_word({1, 2, 1, 0}) == "1 2 1 0");
  CHECK(format_word({}) == "");
  CHECK(parse_word("1 2 1 0", 3) == Word{1, 2, 1, 0});
  CHECK(parse_word("1,2, 1 0", 3) == Word{1, 2, 1, 0});
  CHECK(parse_word("", 3) == Word{});
  CHECK_THROWS_AS(parse_word("3", 3), Error);
  CHECK_THROWS_AS(parse_word("x", 3), Error);

  CHECK(format_mask({{1, 0, 0, 1}}) == "1001");
  CHECK(parse_mask("1001").bits == std::vector<int>{1, 0, 0, 1});
  CHECK_THROWS_AS(parse_mask("102"), Error);
}

TEST_CASE("roots round-trip in both bases") {
  CartanDatum d = datum_from_type("A2~");
  CHECK(format_root(d, ar({1, 1}, 1)) == "a1+a2+d");
  CHECK(format_root(d, ar({-1, 0}, 2)) == "-a1+2*d");
  CHECK(format_root(d, ar({0, 1}, 0)) == "a2");
  // d = a0 + theta moves theta into the finite coordinates.
  CHECK(format_root(d, ar({-1, -1}, 1), Basis::kAlpha0) == "a0");
  CHECK(format_root(d, ar({-1, 0}, 2), Basis::kAlpha0) == "a1+2*a2+2*a0");

  CHECK(parse_root(d, "a1+a2+d") == ar({1, 1}, 1));
  CHECK(parse_root(d, "-a1 + 2*d") == ar({-1, 0}, 2));
  CHECK(parse_root(d, "-a1+2d") == ar({-1, 0}, 2));

  CHECK_THROWS_AS(parse_root(d, "a1+a3"), Error);
  CHECK_THROWS_AS(parse_root(d, "2*a1"), Error);      // not a real root
  CHECK_THROWS_AS(parse_root(d, "a1*a2"), Error);     // not linear
  CHECK_THROWS_AS(parse_root(d, "a1+1"), Error);      // inhomogeneous

  for (long long level : {0LL, 1LL, 2LL}) {
    for (const FiniteRoot& mu : finite_roots(d)) {
      AffineRoot beta{mu, level};
      CHECK(parse_root(d, format_root(d, beta)) == beta);
    }
  }
}

TEST_CASE("polynomial formatting") {
  CartanDatum d = datum_from_type("A2~");
  RootPolynomial psi =
      localize(from_word(d, {1, 0}), from_word(d, {1, 2, 1, 0}));
  CHECK(format_polynomial(d, psi) == "(a1+a2)*(a1+a2+d)");
  CHECK(format_polynomial(d, RootPolynomial::from_root(d, ar({1, 0}, 0))) ==
        "a1");
  CHECK(format_polynomial(d, RootPolynomial(3)) == "0");
  CHECK(format_polynomial(d, RootPolynomial::constant(3, Rational(-1, 2))) ==
        "-1/2");
  CHECK(format_polynomial(
            d, RootPolynomial::from_root(d, ar({1, 0}, 0)).scaled(-1)) ==
        "-(a1)");
}

TEST_CASE("polynomial parsing and round-trips") {
  CartanDatum d = datum_from_type("A2~");
  RootPolynomial a1 = RootPolynomial::variable(3, 0);
  RootPolynomial a2 = RootPolynomial::variable(3, 1);
  RootPolynomial delta = RootPolynomial::variable(3, 2);

  CHECK(parse_polynomial(d, "(a1+a2)*(a1+a2+d)") == (a1 + a2) * (a1 + a2 + delta));
  CHECK(parse_polynomial(d, "a1^2 - 2*a1*a2 + 1/2") ==
        a1 * a1 - (a1 * a2).scaled(2) + RootPolynomial::constant(3, Rational(1, 2)));
  CHECK(parse_polynomial(d, "(a1)(a2)") == a1 * a2);
  CHECK(parse_polynomial(d, "-a1+2*d") == -a1 + delta.scaled(2));
  CHECK(parse_polynomial(d, "0").is_zero());
  CHECK_THROWS_AS(parse_polynomial(d, "a1+"), Error);
  CHECK_THROWS_AS(parse_polynomial(d, "(a1"), Error);
  CHECK_THROWS_AS(parse_polynomial(d, "a0"), Error);
  CHECK(parse_polynomial(d, "a0", Basis::kAlpha0) ==
        parse_polynomial(d, "-a1-a2+d"));

  // Formatted output of every small localization value parses back exactly.
  for (const auto& [v, vw] : enumerate_elements(d, 3)) {
    for (const auto& [w, ww] : enumerate_elements(d, 3)) {
      RootPolynomial psi = localize(v, w);
      for (Basis basis : {Basis::kDelta, Basis::kAlpha0}) {
        std::string text = format_polynomial(d, psi, basis);
        CHECK(parse_polynomial(d, text, basis) == psi);
      }
    }
  }
}

TEST_CASE("count polynomials") {
  CHECK(format_count_polynomial(CountPolynomial::q_minus_one_power(2)) ==
        "q^2-2*q+1");
  CHECK(format_count_polynomial(CountPolynomial::zero()) == "0");
  CHECK(format_count_polynomial(CountPolynomial::constant(-3)) == "-3");
  CHECK(format_count_polynomial(CountPolynomial::q_power(1)) == "q");
  CHECK(parse_count_polynomial("q^2-2*q+1") ==
        CountPolynomial::q_minus_one_power(2));
  CHECK(parse_count_polynomial("0").is_zero());
  CHECK(parse_count_polynomial("5") == CountPolynomial::constant(5));
  CHECK_THROWS_AS(parse_count_polynomial("x"), Error);

  for (int k = 0; k <= 4; ++k) {
    CountPolynomial p = CountPolynomial::q_minus_one_power(k) +
                        CountPolynomial::q_power(k > 0 ? k - 1 : 0);
    CHECK(parse_count_polynomial(format_count_polynomial(p)) == p);
  }
}
