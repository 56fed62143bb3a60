#include "doctest.h"

#include "alcove/weyl.hpp"

#include <algorithm>
#include <vector>

using namespace alcove;

namespace {

AffineRoot ar(std::vector<long long> c, long long level) {
  return {FiniteRoot{std::move(c)}, level};
}

// Brute-force Bruhat order: v <= w iff some subword of a reduced word for w
// multiplies to v with support length l(v).
bool bruhat_brute(const WeylElement& v, const WeylElement& w) {
  Word word = reduced_word(w);
  int m = static_cast<int>(word.size());
  int lv = length(v);
  for (unsigned bits = 0; bits < (1u << m); ++bits) {
    if (__builtin_popcount(bits) != lv) continue;
    WeylElement prod = WeylElement::identity(v.datum());
    for (int j = 0; j < m; ++j)
      if (bits & (1u << j))
        prod = prod * WeylElement::simple_reflection(v.datum(), word[j]);
    if (prod == v) return true;
  }
  return false;
}

}  // namespace

TEST_CASE("identity and basic products") {
  CartanDatum d = datum_from_type("A2~");
  WeylElement e = WeylElement::identity(d);
  WeylElement s1 = WeylElement::simple_reflection(d, 1);
  WeylElement s2 = WeylElement::simple_reflection(d, 2);

  CHECK(e.is_identity());
  CHECK(length(e) == 0);
  CHECK(e * s1 == s1);
  CHECK(s1 * s1 == e);
  CHECK((s1 * s2) * s1 == s1 * (s2 * s1));
  CHECK(from_word(d, {1, 2, 1}) == from_word(d, {2, 1, 2}));
  CHECK(from_word(d, {1, 1}) == e);
  CHECK(from_word(d, {}) == e);

  for (int i = 0; i < 3; ++i) {
    AffineRoot alpha = affine_simple_root(d, i);
    CHECK(e.apply(alpha) == alpha);
  }
}

TEST_CASE("action matches root-level reflection formulas") {
  CartanDatum d = datum_from_type("A2~");
  std::vector<AffineRoot> sample;
  for (const auto& mu : finite_roots(d))
    for (long long k = -2; k <= 2; ++k) sample.push_back({mu, k});

  for (int i = 0; i < 3; ++i) {
    WeylElement si = WeylElement::simple_reflection(d, i);
    for (const auto& beta : sample)
      CHECK(si.apply(beta) == simple_action(d, i, beta));
  }

  // Product acts by composition.
  WeylElement w = from_word(d, {1, 2, 0, 1});
  WeylElement u = from_word(d, {0, 2});
  for (const auto& beta : sample)
    CHECK((w * u).apply(beta) == w.apply(u.apply(beta)));

  // Inverse.
  WeylElement wi = w.inverse();
  CHECK((w * wi).is_identity());
  CHECK((wi * w).is_identity());
}

TEST_CASE("s_0 is the affine reflection through the highest-root wall") {
  CartanDatum d = datum_from_type("A2~");
  WeylElement s0 = WeylElement::simple_reflection(d, 0);
  CHECK(s0.apply(ar({1, 1}, 0)) == ar({-1, -1}, 2));
  CHECK(s0.apply(affine_simple_root(d, 0)) == -affine_simple_root(d, 0));
  CHECK(s0.translation() == std::vector<long long>{1, 1});
}

TEST_CASE("length and reduced words") {
  CartanDatum d = datum_from_type("A2~");
  CHECK(length(from_word(d, {1, 2, 1, 0})) == 4);
  CHECK(length(from_word(d, {1, 2, 1, 2, 1, 2})) == 0);
  CHECK(reduced_word(from_word(d, {0, 0, 1})) == Word{1});
  CHECK(reduced_word(WeylElement::identity(d)).empty());

  Word rw = reduced_word(from_word(d, {2, 1, 2}));
  CHECK(rw == Word{1, 2, 1});
  CHECK(from_word(d, rw) == from_word(d, {2, 1, 2}));

  // A long non-reduced word collapsing to a length-4 element.
  Word long_word = {0, 2, 0, 1, 2, 0, 0, 1, 0, 2, 0, 2, 0, 1, 0, 1, 0, 2, 0, 2};
  WeylElement w = from_word(d, long_word);
  CHECK(length(w) == 4);
  CHECK(w == from_word(d, {1, 2, 1, 0}));
}

TEST_CASE("descents") {
  CartanDatum d = datum_from_type("A2~");
  WeylElement e = WeylElement::identity(d);
  for (int i = 0; i < 3; ++i) {
    CHECK_FALSE(is_right_descent(e, i));
    CHECK_FALSE(is_left_descent(e, i));
  }
  CHECK(is_right_descent(from_word(d, {1}), 1));
  CHECK(is_right_descent(from_word(d, {1, 2, 1, 0}), 0));
  CHECK(is_left_descent(from_word(d, {1, 2, 1, 0}), 1));
}

TEST_CASE("inversion sets") {
  CartanDatum d = datum_from_type("A2~");
  CHECK(inversions(WeylElement::identity(d)).empty());

  auto inv121 = inversions(from_word(d, {1, 2, 1}));
  CHECK(inv121 == std::vector<AffineRoot>{ar({1, 0}, 0), ar({1, 1}, 0),
                                          ar({0, 1}, 0)});

  auto inv10 = inversions(from_word(d, {1, 0}));
  CHECK(inv10 == std::vector<AffineRoot>{ar({1, 0}, 0), ar({0, -1}, 1)});

  // Every inversion is positive and sent negative by w^{-1}.
  WeylElement w = from_word(d, {1, 2, 1, 0, 2});
  auto inv = inversions(w);
  CHECK(static_cast<int>(inv.size()) == length(w));
  WeylElement wi = w.inverse();
  for (const auto& beta : inv) {
    CHECK(is_positive(beta));
    CHECK_FALSE(is_positive(wi.apply(beta)));
  }
}

TEST_CASE("bruhat order") {
  CartanDatum d = datum_from_type("A2~");
  WeylElement e = WeylElement::identity(d);
  WeylElement w = from_word(d, {1, 2, 1, 0});
  CHECK(bruhat_leq(e, w));
  CHECK(bruhat_leq(from_word(d, {1, 0}), w));
  CHECK_FALSE(bruhat_leq(from_word(d, {0}), from_word(d, {1})));
  CHECK_FALSE(bruhat_leq(from_word(d, {1}), from_word(d, {0})));

  // Agreement with the all-subwords scan on a full length-bounded sweep.
  auto elements = enumerate_elements(d, 4);
  for (const auto& [v, vw] : elements)
    for (const auto& [u, uw] : elements)
      CHECK(bruhat_leq(v, u) == bruhat_brute(v, u));
}

TEST_CASE("word length and deletion properties by brute force") {
  CartanDatum d = datum_from_type("A2~");
  // All words of length <= 5 over the affine alphabet.
  std::vector<Word> words{{}};
  for (int len = 1; len <= 5; ++len) {
    std::vector<Word> next;
    for (const auto& w : words) {
      if (static_cast<int>(w.size()) != len - 1) continue;
      for (int i = 0; i < 3; ++i) {
        Word ext = w;
        ext.push_back(i);
        next.push_back(ext);
      }
    }
    words.insert(words.end(), next.begin(), next.end());
  }
  for (const auto& word : words) {
    WeylElement w = from_word(d, word);
    int l = length(w);
    int m = static_cast<int>(word.size());
    CHECK(l <= m);
    CHECK((m - l) % 2 == 0);
    if (l < m) {
      // Deletion property: some pair of letters can be removed.
      bool found = false;
      for (int a = 0; a < m && !found; ++a) {
        for (int b = a + 1; b < m && !found; ++b) {
          Word shorter;
          for (int j = 0; j < m; ++j)
            if (j != a && j != b) shorter.push_back(word[j]);
          if (from_word(d, shorter) == w) found = true;
        }
      }
      CHECK(found);
    }
  }
}

TEST_CASE("reflections and palindromic words") {
  CartanDatum d = datum_from_type("A2~");
  CHECK(reflection(d, ar({1, 0}, 0)) == from_word(d, {1}));
  CHECK(palindromic_word(d, ar({1, 0}, 0)) == Word{1});

  WeylElement sb = reflection(d, ar({-1, 0}, 2));
  CHECK(length(sb) == 7);
  CHECK((sb * sb).is_identity());
  CHECK(sb.apply(ar({-1, 0}, 2)) == ar({1, 0}, -2));

  Word pal = palindromic_word(d, ar({-1, 0}, 2));
  CHECK(pal == Word{2, 0, 1, 2, 1, 0, 2});
  CHECK(from_word(d, pal) == sb);

  for (const auto& mu : finite_roots(d)) {
    for (long long k = -2; k <= 2; ++k) {
      AffineRoot beta{mu, k};
      WeylElement s = reflection(d, beta);
      CHECK((s * s).is_identity());
      CHECK(s.apply(beta) == -beta);
      Word p = palindromic_word(d, beta);
      CHECK(static_cast<int>(p.size()) == length(s));
      CHECK(p.size() % 2 == 1);
      Word rev = p;
      std::reverse(rev.begin(), rev.end());
      CHECK(p == rev);
      CHECK(from_word(d, p) == s);
    }
  }
}

TEST_CASE("element enumeration by length") {
  CartanDatum d = datum_from_type("A2~");
  auto elements = enumerate_elements(d, 6);
  // Affine A2 has 3k elements of each length k >= 1 plus the identity.
  CHECK(elements.size() == 1 + 3 * (1 + 2 + 3 + 4 + 5 + 6));
  for (const auto& [w, word] : elements) {
    CHECK(length(w) == static_cast<int>(word.size()));
    CHECK(from_word(d, word) == w);
  }
  // BFS order: lengths never decrease.
  for (std::size_t i = 1; i < elements.size(); ++i)
    CHECK(elements[i - 1].second.size() <= elements[i].second.size());
}
