#include "doctest.h"

#include "alcove/folded.hpp"

using namespace alcove;

namespace {

AffineRoot ar(std::vector<long long> c, long long level) {
  return {FiniteRoot{std::move(c)}, level};
}

}  // namespace

TEST_CASE("orientation of panels relative to the base alcove") {
  CartanDatum d = datum_from_type("A2~");
  WeylElement e = WeylElement::identity(d);
  for (int i = 0; i < 3; ++i) CHECK(positive_side(e, i));
  WeylElement s1 = from_word(d, {1});
  CHECK_FALSE(positive_side(s1, 1));
  CHECK(positive_side(s1, 0));
  CHECK(positive_side(s1, 2));
}

TEST_CASE("single folds") {
  CartanDatum d = datum_from_type("A2~");
  FoldedWalk fw = fold_at(walk_from_word(d, {1}), 0);
  CHECK(fw.end.is_identity());
  CHECK(fw.steps[0].is_fold);
  CHECK(fw.steps[0].kind == StepKind::kPositiveFold);
  CHECK(fw.steps[0].hyperplane == ar({1, 0}, 0));
  CHECK(fw.steps[0].label_kind == LabelKind::kNonzeroFieldElement);
  CHECK(is_positively_folded(fw));

  FoldedWalk second = fold_at(walk_from_word(d, {1, 2, 1, 0}), 1);
  CHECK(second.steps[1].is_fold);
  CHECK(second.steps[1].kind == StepKind::kPositiveFold);
  CHECK(second.steps[1].hyperplane == ar({1, 1}, 0));
  // End alcove is the product of the shown reflections only.
  CHECK(second.end == from_word(d, {1, 1, 0}));

  CHECK_THROWS_AS(fold_at(fw, 0), Error);
  CHECK_THROWS_AS(fold_at(fw, 5), Error);
}

TEST_CASE("masked folded images reproduce the worked example") {
  CartanDatum d = datum_from_type("A2~");
  Walk walk = walk_from_word(d, {1, 2, 1, 0});

  FoldedWalk good = folded_image(walk, {{0, 0, 1, 1}});
  CHECK(good.end == subexpression(walk, {{0, 0, 1, 1}}));
  CHECK(good.steps[0].is_fold);
  CHECK(good.steps[1].is_fold);
  CHECK(good.steps[0].kind == StepKind::kPositiveFold);
  CHECK(good.steps[0].hyperplane == ar({1, 0}, 0));
  CHECK(good.steps[1].kind == StepKind::kPositiveFold);
  CHECK(good.steps[1].hyperplane == ar({0, 1}, 0));
  CHECK(is_positively_folded(good));

  FoldedWalk bad = folded_image(walk, {{1, 0, 0, 1}});
  CHECK(bad.end == subexpression(walk, {{1, 0, 0, 1}}));
  CHECK(bad.steps[1].is_fold);
  CHECK(bad.steps[2].is_fold);
  CHECK(bad.steps[1].kind == StepKind::kPositiveFold);
  CHECK(bad.steps[2].kind == StepKind::kNegativeFold);
  CHECK(bad.steps[2].hyperplane == ar({1, 0}, 0));
  CHECK_FALSE(is_positively_folded(bad));

  FoldedWalk relaxed =
      folded_image(walk, {{1, 0, 0, 1}}, Orientation::kTrivialPositive);
  CHECK(is_positively_folded(relaxed));

  FoldedWalk unfolded = folded_image(walk, {{1, 1, 1, 1}});
  CHECK(unfolded.end == walk.end);
  for (const auto& step : unfolded.steps) CHECK_FALSE(step.is_fold);
  CHECK(is_positively_folded(unfolded));
}

TEST_CASE("masked folded images land on the subexpression alcove") {
  CartanDatum d = datum_from_type("A2~");
  for (const Word& word :
       {Word{1, 2, 1, 0}, Word{2, 1, 2, 0}, Word{0, 1, 2, 0, 1}}) {
    Walk walk = walk_from_word(d, word);
    int m = static_cast<int>(word.size());
    for (unsigned bits = 0; bits < (1u << m); ++bits) {
      Mask mask;
      mask.bits.assign(m, 0);
      for (int j = 0; j < m; ++j) mask.bits[j] = (bits >> j) & 1;
      CHECK(folded_image(walk, mask).end == subexpression(walk, mask));
    }
  }
}

TEST_CASE("enumeration of positively folded walks, base cases") {
  CartanDatum d = datum_from_type("A2~");
  WeylElement e = WeylElement::identity(d);
  WeylElement s1 = from_word(d, {1});

  auto to_s1 = enumerate_positively_folded(d, {1}, s1);
  REQUIRE(to_s1.size() == 1);
  CHECK(to_s1[0].steps[0].kind == StepKind::kNegativeCrossing);
  CHECK(to_s1[0].steps[0].label_kind == LabelKind::kForcedZero);

  auto to_e = enumerate_positively_folded(d, {1}, e);
  REQUIRE(to_e.size() == 1);
  CHECK(to_e[0].steps[0].kind == StepKind::kPositiveFold);
  CHECK(to_e[0].steps[0].label_kind == LabelKind::kNonzeroFieldElement);

  using K = StepKind;
  auto pattern = [&](const WeylElement& v) {
    auto walks = enumerate_positively_folded(d, {1, 0}, v);
    REQUIRE(walks.size() == 1);
    return std::vector<K>{walks[0].steps[0].kind, walks[0].steps[1].kind};
  };
  CHECK(pattern(from_word(d, {1, 0})) ==
        std::vector<K>{K::kNegativeCrossing, K::kNegativeCrossing});
  CHECK(pattern(from_word(d, {1})) ==
        std::vector<K>{K::kNegativeCrossing, K::kPositiveFold});
  CHECK(pattern(from_word(d, {0})) ==
        std::vector<K>{K::kPositiveFold, K::kNegativeCrossing});
  CHECK(pattern(e) == std::vector<K>{K::kPositiveFold, K::kPositiveFold});

  CHECK_THROWS_AS(enumerate_positively_folded(d, {1, 1}, e), Error);
}

TEST_CASE("count polynomial arithmetic") {
  CountPolynomial q = CountPolynomial::q_power(1);
  CountPolynomial qm1 = CountPolynomial::q_minus_one_power(1);
  CHECK((qm1 * qm1).coeffs == std::vector<long long>{1, -2, 1});
  CHECK((q + qm1).coeffs == std::vector<long long>{-1, 2});
  CHECK(qm1.evaluate(5) == 4);
  CHECK(CountPolynomial::q_power(3).evaluate(2) == 8);
  CHECK((qm1 + CountPolynomial{{1, -1}}).is_zero());
}

TEST_CASE("point counts match the R-polynomial oracle") {
  CartanDatum d = datum_from_type("A2~");
  WeylElement e = WeylElement::identity(d);
  WeylElement s1 = from_word(d, {1});

  CHECK(point_count(d, {1}, s1) == CountPolynomial::constant(1));
  CHECK(point_count(d, {1}, e) == CountPolynomial::q_minus_one_power(1));
  CHECK(point_count(d, {1, 0}, e) == CountPolynomial::q_minus_one_power(2));

  CHECK(r_polynomial(s1, s1) == CountPolynomial::constant(1));
  CHECK(r_polynomial(e, s1) == CountPolynomial::q_minus_one_power(1));
  CHECK(r_polynomial(e, from_word(d, {1, 0})) ==
        CountPolynomial::q_minus_one_power(2));
  CHECK(r_polynomial(s1, from_word(d, {2})).is_zero());

  auto elements = enumerate_elements(d, 4);
  RPolynomialTable table(d);
  for (const auto& [w, word] : elements) {
    long long sum2 = 0;
    for (const auto& [v, vw] : elements) {
      CountPolynomial pc = point_count(d, word, v);
      CHECK(pc == table.r(v, w));
      sum2 += pc.evaluate(2);
    }
    // Partition identity at q = 2; every end alcove of a length-m walk has
    // length at most m, so the length-4 enumeration covers all of them.
    CHECK(sum2 == (1LL << word.size()));
  }
}
