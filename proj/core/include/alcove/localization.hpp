#ifndef ALCOVE_LOCALIZATION_HPP
#define ALCOVE_LOCALIZATION_HPP

#include "alcove/walks.hpp"

#include <map>

namespace alcove {

/// psi^v evaluated at every element within a length bound, in BFS order
/// (length, then lexicographic reduced word).
struct LocalizationClass {
  WeylElement v;
  int bound = 0;
  std::vector<std::pair<WeylElement, Word>> order;
  std::map<WeylElement, RootPolynomial> entries;
};

/// psi^v(w): sum of mask products over all masks of a walk for w with
/// support l(v) and subexpression v.  The word, when given, must multiply
/// to w; the value does not depend on the choice of word.
RootPolynomial localize(const WeylElement& v, const WeylElement& w);
RootPolynomial localize(const WeylElement& v, const WeylElement& w,
                        const Word& word);

/// Independent oracle: computes psi^v(w) only from psi^v(e) = [v = e] and
/// the one-step recursion psi^v(w s_i) = psi^v(w) + (w alpha_i) psi^{v s_i}(w)
/// when v s_i < v, else psi^v(w).  Memoized across calls.
class RecursiveLocalizer {
 public:
  explicit RecursiveLocalizer(const CartanDatum& datum) : datum_(&datum) {}
  RootPolynomial psi(const WeylElement& v, const WeylElement& w);

 private:
  const CartanDatum* datum_;
  std::map<std::pair<std::vector<long long>, std::vector<long long>>,
           RootPolynomial>
      memo_;
};

RootPolynomial localize_recursive(const WeylElement& v, const WeylElement& w);

LocalizationClass localization_class(const WeylElement& v, int bound);

/// The GKM condition at (v, w, beta): beta divides psi^v(w) - psi^v(s_b w).
bool gkm_check(const WeylElement& v, const WeylElement& w,
               const AffineRoot& beta);

/// Product of the inversions of v; equals psi^v(v).
RootPolynomial schubert_point(const WeylElement& v);

}  // namespace alcove

#endif
