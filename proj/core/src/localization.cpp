#include "alcove/localization.hpp"

namespace alcove {

RootPolynomial localize(const WeylElement& v, const WeylElement& w,
                        const Word& word) {
  const CartanDatum& datum = v.datum();
  if (!(from_word(datum, word) == w))
    throw Error("word does not multiply to the target element");
  Walk walk = walk_from_word(datum, word);
  RootPolynomial sum(datum.rank_finite() + 1);
  for (const auto& mask : enumerate_masks(walk, v))
    sum = sum + mask_product(walk, mask);
  if (!sum.has_integer_coefficients())
    throw Error("localization produced non-integer coefficients");
  return sum;
}

RootPolynomial localize(const WeylElement& v, const WeylElement& w) {
  return localize(v, w, reduced_word(w));
}

RootPolynomial RecursiveLocalizer::psi(const WeylElement& v,
                                       const WeylElement& w) {
  auto key = std::make_pair(v.key(), w.key());
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;

  const CartanDatum& datum = *datum_;
  int nvars = datum.rank_finite() + 1;
  RootPolynomial out(nvars);
  Word word = reduced_word(w);
  if (word.empty()) {
    if (v.is_identity()) out = RootPolynomial::constant(nvars, 1);
  } else {
    int i = word.back();
    WeylElement prev = w * WeylElement::simple_reflection(datum, i);
    out = psi(v, prev);
    if (is_right_descent(v, i)) {
      WeylElement vs = v * WeylElement::simple_reflection(datum, i);
      RootPolynomial root = RootPolynomial::from_root(
          datum, prev.apply(affine_simple_root(datum, i)));
      out = out + root * psi(vs, prev);
    }
  }
  memo_.emplace(std::move(key), out);
  return out;
}

RootPolynomial localize_recursive(const WeylElement& v, const WeylElement& w) {
  RecursiveLocalizer oracle(v.datum());
  return oracle.psi(v, w);
}

LocalizationClass localization_class(const WeylElement& v, int bound) {
  if (bound < 0) throw Error("negative length bound");
  LocalizationClass cls;
  cls.v = v;
  cls.bound = bound;
  cls.order = enumerate_elements(v.datum(), bound);
  for (const auto& [w, word] : cls.order)
    cls.entries.emplace(w, localize(v, w, word));
  return cls;
}

bool gkm_check(const WeylElement& v, const WeylElement& w,
               const AffineRoot& beta) {
  const CartanDatum& datum = v.datum();
  WeylElement sw = reflection(datum, beta) * w;
  RootPolynomial diff = localize(v, w) - localize(v, sw);
  return divides_linear(datum, beta, diff);
}

RootPolynomial schubert_point(const WeylElement& v) {
  const CartanDatum& datum = v.datum();
  RootPolynomial out = RootPolynomial::constant(datum.rank_finite() + 1, 1);
  for (const auto& beta : inversions(v))
    out = out * RootPolynomial::from_root(datum, beta);
  return out;
}

}  // namespace alcove
