#ifndef ALCOVE_WALKS_HPP
#define ALCOVE_WALKS_HPP

#include "alcove/polynomial.hpp"
#include "alcove/weyl.hpp"

namespace alcove {

/// One hyperplane crossing of a walk.  The crossing root carries its sign:
/// it equals prefix * alpha_{i} and is positive exactly for forward steps.
struct Step {
  int panel_type = -1;
  AffineRoot crossing_root;
  bool forward = false;
  WeylElement prefix;  // alcove before the step
};

/// Binary mask over the steps of a walk; bit 1 = shown, 0 = hidden.
struct Mask {
  std::vector<int> bits;

  int support() const;
  bool operator==(const Mask&) const = default;
  bool operator<(const Mask& o) const { return bits < o.bits; }
};

/// An alcove walk of arbitrary (possibly non-reduced) type from a base
/// alcove; alcove_j = base * s_{i_1} ... s_{i_j}.
struct Walk {
  WeylElement base;
  Word type_word;
  std::vector<Step> steps;
  WeylElement end;
};

Walk walk_from_word(const CartanDatum& datum, const Word& word);
Walk walk_from_word(const CartanDatum& datum, const Word& word,
                    const WeylElement& base);

/// Signed crossing roots, one per step, in step order.
std::vector<AffineRoot> step_roots(const Walk& walk);

/// Appends second (re-based at first's end) to first.
Walk concatenate(const Walk& first, const Walk& second);

/// The masked product s_{i_1}^{e_1} ... s_{i_m}^{e_m} (base excluded).
WeylElement subexpression(const Walk& walk, const Mask& mask);

/// All masks with support l(v) whose subexpression equals v, in
/// lexicographic bit order.  Baseline pruning uses only support and
/// remaining-length bounds; bruhat_pruning additionally discards branches
/// whose shown prefix is non-reduced or not below v.
std::vector<Mask> enumerate_masks(const Walk& walk, const WeylElement& v,
                                  bool bruhat_pruning = false);

/// Product over shown steps of the signed crossing root; 1 for the all-zero
/// mask.
RootPolynomial mask_product(const Walk& walk, const Mask& mask);

/// A seeded non-reduced word for w of length l(w) + 2*extra_pairs, built
/// from reduced_word(w) by random braid moves and s_i s_i insertions.
/// extra_pairs = 0 returns reduced_word(w) unchanged.
Word random_equivalent_word(const WeylElement& w, int extra_pairs,
                            unsigned long long seed);

}  // namespace alcove

#endif
