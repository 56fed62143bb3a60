#ifndef ALCOVE_WEYL_HPP
#define ALCOVE_WEYL_HPP

#include "alcove/roots.hpp"

#include <vector>

namespace alcove {

/// A word in the affine generators, letters in I_af.
using Word = std::vector<int>;

/// Canonical affine Weyl group element w = t_lambda * u, stored as the
/// integer matrix of u on the finite simple-root basis together with the
/// translation vector lambda in the simple-coroot basis.  Equality is O(1)
/// component-wise comparison; no word rewriting is involved.
class WeylElement {
 public:
  WeylElement() = default;

  static WeylElement identity(const CartanDatum& datum);
  static WeylElement simple_reflection(const CartanDatum& datum, int i);

  /// Assemble from an explicit finite-part matrix (row-major) and translation;
  /// the caller is responsible for u being a root-system automorphism.
  static WeylElement from_parts(const CartanDatum& datum,
                                std::vector<long long> u,
                                std::vector<long long> lambda);

  const CartanDatum& datum() const { return *datum_; }

  /// Action on a real affine root: mu + m*delta -> u*mu + (m - <lambda, u*mu>)*delta.
  AffineRoot apply(const AffineRoot& beta) const;

  WeylElement operator*(const WeylElement& other) const;
  WeylElement inverse() const;

  bool is_identity() const;
  bool operator==(const WeylElement& o) const;
  bool operator!=(const WeylElement& o) const { return !(*this == o); }

  /// Total order for use as a map key; compares (matrix, translation).
  bool operator<(const WeylElement& o) const;

  /// Flat serialization (matrix entries then translation), for hashing/keys.
  std::vector<long long> key() const;

  /// Column j = coordinates of u * alpha_{j+1} (finite part action).
  const std::vector<long long>& matrix_flat() const { return u_; }
  const std::vector<long long>& translation() const { return lambda_; }

  /// Image of a point given in simple-coroot coordinates under the affine
  /// action of w = t_lambda * u (rational output for alcove geometry).
  std::vector<Rational> apply_point(const std::vector<Rational>& p) const;

 private:
  const CartanDatum* datum_ = nullptr;
  std::vector<long long> u_;       // r x r row-major
  std::vector<long long> lambda_;  // length r

  void check_same_datum(const WeylElement& o) const;
  long long coroot_pairing(const std::vector<long long>& lambda,
                           const std::vector<long long>& mu) const;
  std::vector<long long> coroot_matrix() const;  // action of u on coroots
};

WeylElement from_word(const CartanDatum& datum, const Word& word);

/// true iff l(w s_i) < l(w), i.e. w * alpha_i is a negative affine root.
bool is_right_descent(const WeylElement& w, int i);
bool is_left_descent(const WeylElement& w, int i);

/// Coxeter length, by stripping least right descents down to the identity.
int length(const WeylElement& w);

/// Deterministic reduced word: least descent index at each strip.
Word reduced_word(const WeylElement& w);

/// Inversion set beta_j = s_{i_1}...s_{i_{j-1}} alpha_{i_j} along
/// reduced_word(w); all positive, in word order.
std::vector<AffineRoot> inversions(const WeylElement& w);

/// Bruhat order via the descent-lifting scan over reduced_word(w).
bool bruhat_leq(const WeylElement& v, const WeylElement& w);

/// The reflection s_beta = t_{-k alpha-vee} s_alpha for beta = alpha + k*delta.
WeylElement reflection(const CartanDatum& datum, const AffineRoot& beta);

/// A reduced palindromic word u.i.reverse(u) for the reflection s_beta,
/// found by conjugating the length down by two at each step.
Word palindromic_word(const CartanDatum& datum, const AffineRoot& beta);

/// All group elements with length <= bound, BFS by length and then by
/// lexicographic word; second component is the discovered (reduced) word.
std::vector<std::pair<WeylElement, Word>> enumerate_elements(
    const CartanDatum& datum, int bound);

}  // namespace alcove

#endif
