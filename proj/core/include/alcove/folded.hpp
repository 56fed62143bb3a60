#ifndef ALCOVE_FOLDED_HPP
#define ALCOVE_FOLDED_HPP

#include "alcove/walks.hpp"

#include <map>

namespace alcove {

enum class StepKind {
  kPositiveCrossing,
  kNegativeCrossing,
  kPositiveFold,
  kNegativeFold,
};

/// What a step's field-element label is allowed to be: any element for
/// positive crossings, exactly zero for negative crossings, any nonzero
/// element for folds.  Labels are kinds only; no field arithmetic happens.
enum class LabelKind {
  kFreeFieldElement,
  kForcedZero,
  kNonzeroFieldElement,
};

/// Which side of a panel counts as positive: the side containing the base
/// alcove, or (for classification only) the orientation where both sides of
/// every hyperplane are positive.
enum class Orientation { kBase, kTrivialPositive };

struct FoldedStep {
  int panel_type = -1;
  bool is_fold = false;
  StepKind kind = StepKind::kPositiveCrossing;
  AffineRoot hyperplane;  // positive representative of the touched wall
  LabelKind label_kind = LabelKind::kFreeFieldElement;
};

/// An alcove walk that may repeat alcoves at folds.  The alcove after step
/// j is base times the product of s_{i_l} over non-folded l <= j.
struct FoldedWalk {
  WeylElement base;
  Word type_word;
  std::vector<int> folds;  // 1 = folded step
  Orientation orientation = Orientation::kBase;
  std::vector<FoldedStep> steps;
  WeylElement end;
};

/// True iff the alcove u*a_0 is on the positive side of the hyperplane
/// through its type-i panel, i.e. u * alpha_i is a positive affine root.
bool positive_side(const WeylElement& u, int i);

/// A fold-free folded walk with the same type word and base.
FoldedWalk folded_from_walk(const Walk& walk,
                            Orientation orientation = Orientation::kBase);

/// Rebuilds a folded walk from its defining data.
FoldedWalk make_folded(const CartanDatum& datum, const WeylElement& base,
                       const Word& word, const std::vector<int>& folds,
                       Orientation orientation = Orientation::kBase);

/// Turns crossing step j (0-based) into a fold; later alcoves reflect
/// across the step-j hyperplane.
FoldedWalk fold_at(const FoldedWalk& fw, int j);
FoldedWalk fold_at(const Walk& walk, int j,
                   Orientation orientation = Orientation::kBase);

/// Folds at every hidden step of the mask, in increasing step order.
FoldedWalk folded_image(const Walk& walk, const Mask& mask,
                        Orientation orientation = Orientation::kBase);

/// True iff no step is a negative fold.
bool is_positively_folded(const FoldedWalk& fw);

/// All positively folded walks of the given reduced type ending at v, in
/// DFS order branching crossing-first at each step.
std::vector<FoldedWalk> enumerate_positively_folded(
    const CartanDatum& datum, const Word& word, const WeylElement& v,
    Orientation orientation = Orientation::kBase);

/// Univariate integer polynomial in q, dense coefficients from degree 0.
struct CountPolynomial {
  std::vector<long long> coeffs;

  static CountPolynomial zero() { return {}; }
  static CountPolynomial constant(long long c);
  /// q - 1 and q as building blocks, raised to the given powers.
  static CountPolynomial q_power(int k);
  static CountPolynomial q_minus_one_power(int k);

  CountPolynomial operator+(const CountPolynomial& o) const;
  CountPolynomial operator*(const CountPolynomial& o) const;
  bool operator==(const CountPolynomial& o) const { return coeffs == o.coeffs; }
  bool is_zero() const { return coeffs.empty(); }
  long long evaluate(long long q) const;

  void normalize();
};

/// Sum over the positively folded walks of type `word` ending at v of
/// q^{#positive crossings} (q-1)^{#positive folds}.
CountPolynomial point_count(const CartanDatum& datum, const Word& word,
                            const WeylElement& v);

/// Kazhdan-Lusztig R_{v,w}(q) by the two-case right-descent recursion;
/// memoized across calls.
class RPolynomialTable {
 public:
  explicit RPolynomialTable(const CartanDatum& datum) : datum_(&datum) {}
  CountPolynomial r(const WeylElement& v, const WeylElement& w);

 private:
  const CartanDatum* datum_;
  std::map<std::pair<std::vector<long long>, std::vector<long long>>,
           CountPolynomial>
      memo_;
};

CountPolynomial r_polynomial(const WeylElement& v, const WeylElement& w);

}  // namespace alcove

#endif
