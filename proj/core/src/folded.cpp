#include "alcove/folded.hpp"

#include <algorithm>

namespace alcove {

bool positive_side(const WeylElement& u, int i) {
  return is_positive(u.apply(affine_simple_root(u.datum(), i)));
}

namespace {

bool side_positive(const WeylElement& u, int i, Orientation orientation) {
  if (orientation == Orientation::kTrivialPositive) return true;
  return positive_side(u, i);
}

FoldedStep make_step(const CartanDatum& datum, const WeylElement& u, int i,
                     bool fold, Orientation orientation) {
  FoldedStep step;
  step.panel_type = i;
  step.is_fold = fold;
  AffineRoot wall = u.apply(affine_simple_root(datum, i));
  step.hyperplane = positive_representative(wall);
  if (fold) {
    bool positive = side_positive(u, i, orientation);
    step.kind = positive ? StepKind::kPositiveFold : StepKind::kNegativeFold;
    step.label_kind = LabelKind::kNonzeroFieldElement;
  } else {
    // Crossing toward the base-alcove side is the positive crossing; that is
    // exactly when the current alcove sits on the negative side of the wall.
    bool positive = !side_positive(u, i, orientation) ||
                    orientation == Orientation::kTrivialPositive;
    step.kind = positive ? StepKind::kPositiveCrossing
                         : StepKind::kNegativeCrossing;
    step.label_kind = positive ? LabelKind::kFreeFieldElement
                               : LabelKind::kForcedZero;
  }
  return step;
}

}  // namespace

FoldedWalk make_folded(const CartanDatum& datum, const WeylElement& base,
                       const Word& word, const std::vector<int>& folds,
                       Orientation orientation) {
  if (folds.size() != word.size())
    throw Error("fold vector length does not match type word");
  FoldedWalk fw;
  fw.base = base;
  fw.type_word = word;
  fw.folds = folds;
  fw.orientation = orientation;
  WeylElement cur = base;
  for (std::size_t j = 0; j < word.size(); ++j) {
    bool fold = folds[j] != 0;
    fw.steps.push_back(make_step(datum, cur, word[j], fold, orientation));
    if (!fold)
      cur = cur * WeylElement::simple_reflection(datum, word[j]);
  }
  fw.end = cur;
  return fw;
}

FoldedWalk folded_from_walk(const Walk& walk, Orientation orientation) {
  return make_folded(walk.base.datum(), walk.base, walk.type_word,
                     std::vector<int>(walk.type_word.size(), 0), orientation);
}

FoldedWalk fold_at(const FoldedWalk& fw, int j) {
  if (j < 0 || j >= static_cast<int>(fw.type_word.size()))
    throw Error("fold index out of range");
  if (fw.folds[j]) throw Error("step is already a fold");
  std::vector<int> folds = fw.folds;
  folds[j] = 1;
  return make_folded(fw.base.datum(), fw.base, fw.type_word, folds,
                     fw.orientation);
}

FoldedWalk fold_at(const Walk& walk, int j, Orientation orientation) {
  return fold_at(folded_from_walk(walk, orientation), j);
}

FoldedWalk folded_image(const Walk& walk, const Mask& mask,
                        Orientation orientation) {
  if (mask.bits.size() != walk.type_word.size())
    throw Error("mask length does not match walk length");
  std::vector<int> folds(mask.bits.size());
  for (std::size_t j = 0; j < mask.bits.size(); ++j)
    folds[j] = mask.bits[j] ? 0 : 1;
  return make_folded(walk.base.datum(), walk.base, walk.type_word, folds,
                     orientation);
}

bool is_positively_folded(const FoldedWalk& fw) {
  return std::none_of(fw.steps.begin(), fw.steps.end(),
                      [](const FoldedStep& s) {
                        return s.kind == StepKind::kNegativeFold;
                      });
}

namespace {

void folded_dfs(const CartanDatum& datum, const Word& word,
                const WeylElement& v, Orientation orientation, std::size_t j,
                const WeylElement& cur, std::vector<int>& folds,
                std::vector<FoldedWalk>& out) {
  if (j == word.size()) {
    if (cur == v)
      out.push_back(make_folded(datum, WeylElement::identity(datum), word,
                                folds, orientation));
    return;
  }
  int i = word[j];
  // Crossing branch first.
  folds[j] = 0;
  folded_dfs(datum, word, v, orientation, j + 1,
             cur * WeylElement::simple_reflection(datum, i), folds, out);
  // Fold branch only on the positive side.
  if (side_positive(cur, i, orientation)) {
    folds[j] = 1;
    folded_dfs(datum, word, v, orientation, j + 1, cur, folds, out);
    folds[j] = 0;
  }
}

}  // namespace

std::vector<FoldedWalk> enumerate_positively_folded(const CartanDatum& datum,
                                                    const Word& word,
                                                    const WeylElement& v,
                                                    Orientation orientation) {
  if (length(from_word(datum, word)) != static_cast<int>(word.size()))
    throw Error("type word is not reduced");
  std::vector<FoldedWalk> out;
  std::vector<int> folds(word.size(), 0);
  folded_dfs(datum, word, v, orientation, 0, WeylElement::identity(datum),
             folds, out);
  return out;
}

CountPolynomial CountPolynomial::constant(long long c) {
  CountPolynomial p;
  if (c != 0) p.coeffs = {c};
  return p;
}

CountPolynomial CountPolynomial::q_power(int k) {
  CountPolynomial p;
  p.coeffs.assign(k + 1, 0);
  p.coeffs[k] = 1;
  return p;
}

CountPolynomial CountPolynomial::q_minus_one_power(int k) {
  CountPolynomial p = constant(1);
  CountPolynomial base;
  base.coeffs = {-1, 1};
  for (int t = 0; t < k; ++t) p = p * base;
  return p;
}

void CountPolynomial::normalize() {
  while (!coeffs.empty() && coeffs.back() == 0) coeffs.pop_back();
}

CountPolynomial CountPolynomial::operator+(const CountPolynomial& o) const {
  CountPolynomial out;
  out.coeffs.resize(std::max(coeffs.size(), o.coeffs.size()), 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i) out.coeffs[i] += coeffs[i];
  for (std::size_t i = 0; i < o.coeffs.size(); ++i)
    out.coeffs[i] += o.coeffs[i];
  out.normalize();
  return out;
}

CountPolynomial CountPolynomial::operator*(const CountPolynomial& o) const {
  CountPolynomial out;
  if (coeffs.empty() || o.coeffs.empty()) return out;
  out.coeffs.assign(coeffs.size() + o.coeffs.size() - 1, 0);
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    for (std::size_t j = 0; j < o.coeffs.size(); ++j)
      out.coeffs[i + j] += coeffs[i] * o.coeffs[j];
  out.normalize();
  return out;
}

long long CountPolynomial::evaluate(long long q) const {
  long long out = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it)
    out = out * q + *it;
  return out;
}

CountPolynomial point_count(const CartanDatum& datum, const Word& word,
                            const WeylElement& v) {
  CountPolynomial total;
  for (const auto& fw :
       enumerate_positively_folded(datum, word, v, Orientation::kBase)) {
    int crossings = 0;
    int folds = 0;
    for (const auto& step : fw.steps) {
      if (step.kind == StepKind::kPositiveCrossing) ++crossings;
      if (step.kind == StepKind::kPositiveFold) ++folds;
    }
    total = total + CountPolynomial::q_power(crossings) *
                        CountPolynomial::q_minus_one_power(folds);
  }
  return total;
}

CountPolynomial RPolynomialTable::r(const WeylElement& v,
                                    const WeylElement& w) {
  auto key = std::make_pair(v.key(), w.key());
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  CountPolynomial out;
  if (bruhat_leq(v, w)) {
    if (v == w) {
      out = CountPolynomial::constant(1);
    } else {
      int i = reduced_word(w).back();
      WeylElement si = WeylElement::simple_reflection(*datum_, i);
      WeylElement ws = w * si;
      if (is_right_descent(v, i)) {
        out = r(v * si, ws);
      } else {
        out = CountPolynomial::q_minus_one_power(1) * r(v, ws) +
              CountPolynomial::q_power(1) * r(v * si, ws);
      }
    }
  }
  memo_.emplace(std::move(key), out);
  return out;
}

CountPolynomial r_polynomial(const WeylElement& v, const WeylElement& w) {
  RPolynomialTable table(v.datum());
  return table.r(v, w);
}

}  // namespace alcove
