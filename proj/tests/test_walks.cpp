#include "doctest.h"

#include "alcove/walks.hpp"

#include <set>

using namespace alcove;

namespace {

AffineRoot ar(std::vector<long long> c, long long level) {
  return {FiniteRoot{std::move(c)}, level};
}

const Word kLongWord = {0, 2, 0, 1, 2, 0, 0, 1, 0, 2,
                        0, 2, 0, 1, 0, 1, 0, 2, 0, 2};

// All 2^m masks whose subexpression is v with support l(v).
std::vector<Mask> masks_brute(const Walk& walk, const WeylElement& v) {
  int m = static_cast<int>(walk.type_word.size());
  int lv = length(v);
  std::vector<Mask> out;
  for (unsigned bits = 0; bits < (1u << m); ++bits) {
    Mask mask;
    mask.bits.assign(m, 0);
    for (int j = 0; j < m; ++j) mask.bits[j] = (bits >> j) & 1;
    if (mask.support() != lv) continue;
    if (subexpression(walk, mask) == v) out.push_back(mask);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TEST_CASE("walks from words") {
  CartanDatum d = datum_from_type("A2~");
  Walk w = walk_from_word(d, {1, 2, 1, 0});
  CHECK(w.steps.size() == 4);
  CHECK(w.end == from_word(d, {1, 2, 1, 0}));
  for (const auto& step : w.steps) CHECK(step.forward);
  // For a reduced word the crossing roots are the inversions, in order.
  CHECK(step_roots(w) == inversions(w.end));

  Walk empty = walk_from_word(d, {});
  CHECK(empty.steps.empty());
  CHECK(empty.end.is_identity());

  Walk rewalk = walk_from_word(d, {1, 1});
  CHECK(step_roots(rewalk) ==
        std::vector<AffineRoot>{ar({1, 0}, 0), ar({-1, 0}, 0)});
  CHECK(rewalk.steps[0].forward);
  CHECK_FALSE(rewalk.steps[1].forward);
}

TEST_CASE("a long non-reduced walk and its named steps") {
  CartanDatum d = datum_from_type("A2~");
  Walk w = walk_from_word(d, kLongWord);
  CHECK(w.end == from_word(d, {1, 2, 1, 0}));
  // Steps counted from one.
  CHECK(w.steps[4].crossing_root == ar({0, 1}, 1));
  CHECK(w.steps[4].forward);
  CHECK(w.steps[7].crossing_root == ar({1, 1}, -1));
  CHECK_FALSE(w.steps[7].forward);
}

TEST_CASE("concatenation") {
  CartanDatum d = datum_from_type("A2~");
  Word pal = palindromic_word(d, ar({-1, 0}, 2));
  Walk first = walk_from_word(d, pal);
  Walk second = walk_from_word(d, {1, 2, 1, 0});
  Walk joined = concatenate(first, second);
  CHECK(joined.steps.size() == 11);
  CHECK(joined.type_word.size() == 11);
  CHECK(joined.end == first.end * second.end);

  CHECK(concatenate(second, walk_from_word(d, {})).end == second.end);
}

TEST_CASE("subexpressions") {
  CartanDatum d = datum_from_type("A2~");
  Walk w = walk_from_word(d, {1, 2, 1, 0});
  CHECK(subexpression(w, {{0, 0, 0, 0}}).is_identity());
  WeylElement v = from_word(d, {1, 0});
  CHECK(subexpression(w, {{1, 0, 0, 1}}) == v);
  CHECK(subexpression(w, {{0, 0, 1, 1}}) == v);
  CHECK_THROWS_AS(subexpression(w, {{1, 0}}), Error);
}

TEST_CASE("mask enumeration matches the worked examples") {
  CartanDatum d = datum_from_type("A2~");
  WeylElement v = from_word(d, {1, 0});

  auto masks = enumerate_masks(walk_from_word(d, {1, 2, 1, 0}), v);
  CHECK(masks == std::vector<Mask>{{{0, 0, 1, 1}}, {{1, 0, 0, 1}}});

  auto braid = enumerate_masks(walk_from_word(d, {2, 1, 2, 0}), v);
  CHECK(braid == std::vector<Mask>{{{0, 1, 0, 1}}});

  auto trivial = enumerate_masks(walk_from_word(d, {0, 2, 1, 0, 2}),
                                 WeylElement::identity(d));
  CHECK(trivial == std::vector<Mask>{{{0, 0, 0, 0, 0}}});
}

TEST_CASE("mask enumeration agrees with brute force") {
  CartanDatum d = datum_from_type("A2~");
  std::vector<Word> words = {{1, 2, 1, 0},          {2, 1, 2, 0},
                             {0, 1, 0, 1, 0},       {1, 1, 2, 2, 0},
                             {0, 2, 0, 1, 2, 0},    {1, 2, 1, 2, 1, 2},
                             {2, 0, 1, 2, 1, 0}};
  auto targets = enumerate_elements(d, 3);
  for (const auto& word : words) {
    Walk walk = walk_from_word(d, word);
    for (const auto& [v, vw] : targets) {
      auto fast = enumerate_masks(walk, v);
      auto pruned = enumerate_masks(walk, v, true);
      auto brute = masks_brute(walk, v);
      CHECK(fast == brute);
      CHECK(pruned == brute);
    }
  }
}

TEST_CASE("mask products reproduce the worked values") {
  CartanDatum d = datum_from_type("A2~");
  Walk w = walk_from_word(d, {1, 2, 1, 0});
  RootPolynomial a1 = RootPolynomial::from_root(d, ar({1, 0}, 0));
  RootPolynomial a2 = RootPolynomial::from_root(d, ar({0, 1}, 0));
  RootPolynomial quad = RootPolynomial::from_root(d, ar({1, 1}, 1));
  CHECK(mask_product(w, {{1, 0, 0, 1}}) == a1 * quad);
  CHECK(mask_product(w, {{0, 0, 1, 1}}) == a2 * quad);
  CHECK(mask_product(w, {{0, 0, 0, 0}}) ==
        RootPolynomial::constant(3, 1));
}

TEST_CASE("seeded non-reduced word generation") {
  CartanDatum d = datum_from_type("A2~");
  WeylElement w = from_word(d, {1, 2, 1, 0});
  CHECK(random_equivalent_word(w, 0, 42) == reduced_word(w));
  for (int extra = 1; extra <= 3; ++extra) {
    for (unsigned long long seed : {1ull, 7ull, 1234567ull}) {
      Word word = random_equivalent_word(w, extra, seed);
      CHECK(static_cast<int>(word.size()) == length(w) + 2 * extra);
      CHECK(from_word(d, word) == w);
      CHECK(word == random_equivalent_word(w, extra, seed));
    }
  }
  // Different seeds should not all coincide.
  std::set<Word> outputs;
  for (unsigned long long seed = 0; seed < 8; ++seed)
    outputs.insert(random_equivalent_word(w, 2, seed));
  CHECK(outputs.size() > 1);
}
