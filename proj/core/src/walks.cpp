#include "alcove/walks.hpp"

#include <algorithm>
#include <random>

namespace alcove {

int Mask::support() const {
  return static_cast<int>(std::count(bits.begin(), bits.end(), 1));
}

Walk walk_from_word(const CartanDatum& datum, const Word& word,
                    const WeylElement& base) {
  Walk walk;
  walk.base = base;
  walk.type_word = word;
  WeylElement cur = base;
  for (int letter : word) {
    Step step;
    step.panel_type = letter;
    step.prefix = cur;
    step.crossing_root = cur.apply(affine_simple_root(datum, letter));
    step.forward = is_positive(step.crossing_root);
    walk.steps.push_back(step);
    cur = cur * WeylElement::simple_reflection(datum, letter);
  }
  walk.end = cur;
  return walk;
}

Walk walk_from_word(const CartanDatum& datum, const Word& word) {
  return walk_from_word(datum, word, WeylElement::identity(datum));
}

std::vector<AffineRoot> step_roots(const Walk& walk) {
  std::vector<AffineRoot> out;
  out.reserve(walk.steps.size());
  for (const auto& step : walk.steps) out.push_back(step.crossing_root);
  return out;
}

Walk concatenate(const Walk& first, const Walk& second) {
  const CartanDatum& datum = first.base.datum();
  if (!(datum == second.base.datum()))
    throw DatumMismatch("walks over different Cartan data");
  Word word = first.type_word;
  word.insert(word.end(), second.type_word.begin(), second.type_word.end());
  return walk_from_word(datum, word, first.base);
}

WeylElement subexpression(const Walk& walk, const Mask& mask) {
  if (mask.bits.size() != walk.type_word.size())
    throw Error("mask length does not match walk length");
  const CartanDatum& datum = walk.base.datum();
  WeylElement out = WeylElement::identity(datum);
  for (std::size_t j = 0; j < mask.bits.size(); ++j)
    if (mask.bits[j])
      out = out * WeylElement::simple_reflection(datum, walk.type_word[j]);
  return out;
}

namespace {

void mask_dfs(const Walk& walk, const WeylElement& v, int lv, bool bruhat,
              std::size_t j, int support, const WeylElement& shown,
              Mask& current, std::vector<Mask>& out) {
  int m = static_cast<int>(walk.type_word.size());
  int remaining = m - static_cast<int>(j);
  if (support > lv || support + remaining < lv) return;
  if (remaining == 0) {
    if (support == lv && shown == v) out.push_back(current);
    return;
  }
  const CartanDatum& datum = walk.base.datum();
  // Bit 0 first: output comes out in lexicographic bit order.
  current.bits[j] = 0;
  mask_dfs(walk, v, lv, bruhat, j + 1, support, shown, current, out);
  current.bits[j] = 1;
  WeylElement next =
      shown * WeylElement::simple_reflection(datum, walk.type_word[j]);
  bool keep = true;
  if (bruhat) {
    // A shown subword reaching v with support l(v) is reduced, so each of
    // its prefixes is reduced and lies below v.
    keep = length(next) == support + 1 && bruhat_leq(next, v);
  }
  if (keep)
    mask_dfs(walk, v, lv, bruhat, j + 1, support + 1, next, current, out);
  current.bits[j] = 0;
}

}  // namespace

std::vector<Mask> enumerate_masks(const Walk& walk, const WeylElement& v,
                                  bool bruhat_pruning) {
  std::vector<Mask> out;
  Mask current;
  current.bits.assign(walk.type_word.size(), 0);
  mask_dfs(walk, v, length(v), bruhat_pruning, 0, 0,
           WeylElement::identity(walk.base.datum()), current, out);
  return out;
}

RootPolynomial mask_product(const Walk& walk, const Mask& mask) {
  if (mask.bits.size() != walk.type_word.size())
    throw Error("mask length does not match walk length");
  const CartanDatum& datum = walk.base.datum();
  RootPolynomial out =
      RootPolynomial::constant(datum.rank_finite() + 1, 1);
  for (std::size_t j = 0; j < mask.bits.size(); ++j)
    if (mask.bits[j])
      out = out *
            RootPolynomial::from_root(datum, walk.steps[j].crossing_root);
  return out;
}

namespace {

// In-place braid move at a random admissible position, if any exists.
bool apply_random_braid_move(const CartanDatum& datum, Word& word,
                             std::mt19937_64& rng) {
  struct Site {
    std::size_t pos;
    int len;
  };
  std::vector<Site> sites;
  for (std::size_t pos = 0; pos < word.size(); ++pos) {
    if (pos + 1 >= word.size()) continue;
    int i = word[pos];
    int j = word[pos + 1];
    if (i == j) continue;
    int m = datum.braid_order(i, j);
    if (m == kNoBraidRelation) continue;
    if (pos + m > word.size()) continue;
    bool alternating = true;
    for (int t = 0; t < m; ++t) {
      int expected = (t % 2 == 0) ? i : j;
      if (word[pos + t] != expected) {
        alternating = false;
        break;
      }
    }
    if (alternating) sites.push_back({pos, m});
  }
  if (sites.empty()) return false;
  std::uniform_int_distribution<std::size_t> pick(0, sites.size() - 1);
  Site site = sites[pick(rng)];
  int i = word[site.pos];
  int j = word[site.pos + 1];
  for (int t = 0; t < site.len; ++t)
    word[site.pos + t] = (t % 2 == 0) ? j : i;
  return true;
}

}  // namespace

Word random_equivalent_word(const WeylElement& w, int extra_pairs,
                            unsigned long long seed) {
  const CartanDatum& datum = w.datum();
  Word word = reduced_word(w);
  if (extra_pairs == 0) return word;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> letter(0, datum.rank_affine() - 1);
  for (int pair = 0; pair < extra_pairs; ++pair) {
    for (int move = 0; move < 3; ++move)
      apply_random_braid_move(datum, word, rng);
    std::uniform_int_distribution<std::size_t> pos(0, word.size());
    std::size_t at = pos(rng);
    int i = letter(rng);
    word.insert(word.begin() + at, 2, i);
  }
  return word;
}

}  // namespace alcove
