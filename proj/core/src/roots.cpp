#include "alcove/roots.hpp"

#include <algorithm>

namespace alcove {

AffineRoot affine_simple_root(const CartanDatum& datum, int i) {
  int r = datum.rank_finite();
  if (i < 0 || i >= datum.rank_affine())
    throw Error("simple root index out of range: " + std::to_string(i));
  if (i == 0) return {-datum.highest_root(), 1};
  FiniteRoot root;
  root.coords.assign(r, 0);
  root.coords[i - 1] = 1;
  return {root, 0};
}

long long pairing(const CartanDatum& datum, const FiniteRoot& alpha,
                  const FiniteRoot& mu) {
  int r = datum.rank_finite();
  if (static_cast<int>(alpha.coords.size()) != r ||
      static_cast<int>(mu.coords.size()) != r)
    throw DatumMismatch("root coordinate length does not match datum rank");
  long long dot = 0;    // (alpha, mu)
  long long norm = 0;   // (alpha, alpha)
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) {
      long long b = datum.bilinear_finite(i, j);
      dot += alpha.coords[i] * b * mu.coords[j];
      norm += alpha.coords[i] * b * alpha.coords[j];
    }
  }
  return exact_div(2 * dot, norm);
}

std::vector<long long> coroot_coords(const CartanDatum& datum,
                                     const FiniteRoot& mu) {
  int r = datum.rank_finite();
  long long norm = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      norm += mu.coords[i] * datum.bilinear_finite(i, j) * mu.coords[j];
  long long d_mu = exact_div(norm, 2);
  std::vector<long long> out(r);
  for (int i = 0; i < r; ++i)
    out[i] = exact_div(mu.coords[i] * datum.symmetrizer(i + 1), d_mu);
  return out;
}

bool is_positive(const AffineRoot& beta) {
  if (beta.level != 0) return beta.level > 0;
  return std::all_of(beta.finite.coords.begin(), beta.finite.coords.end(),
                     [](long long c) { return c >= 0; });
}

AffineRoot positive_representative(const AffineRoot& beta) {
  return is_positive(beta) ? beta : -beta;
}

void check_real_root(const CartanDatum& datum, const AffineRoot& beta) {
  if (!datum.is_finite_root(beta.finite))
    throw DatumMismatch("finite part is not a root of the datum");
}

AffineRoot reflect(const CartanDatum& datum, const AffineRoot& beta,
                   const AffineRoot& target) {
  check_real_root(datum, beta);
  check_real_root(datum, target);
  long long p = pairing(datum, beta.finite, target.finite);
  AffineRoot out = target;
  int r = datum.rank_finite();
  for (int i = 0; i < r; ++i) out.finite.coords[i] -= p * beta.finite.coords[i];
  out.level -= beta.level * p;
  return out;
}

AffineRoot simple_action(const CartanDatum& datum, int i,
                         const AffineRoot& beta) {
  return reflect(datum, affine_simple_root(datum, i), beta);
}

}  // namespace alcove
