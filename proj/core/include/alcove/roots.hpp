#ifndef ALCOVE_ROOTS_HPP
#define ALCOVE_ROOTS_HPP

#include "alcove/cartan.hpp"

namespace alcove {

/// A real affine root mu + k*delta, stored as its finite part and integer
/// level.  Purely imaginary roots k*delta are unrepresentable: the finite
/// part must be a root of the ambient datum.
struct AffineRoot {
  FiniteRoot finite;
  long long level = 0;

  bool operator==(const AffineRoot&) const = default;
  bool operator<(const AffineRoot& o) const {
    if (level != o.level) return level < o.level;
    return finite < o.finite;
  }
  AffineRoot operator-() const { return {-finite, -level}; }
};

/// The affine simple root alpha_i: (alpha_i, 0) for i in I_0 and
/// (-theta, 1) for i = 0.
AffineRoot affine_simple_root(const CartanDatum& datum, int i);

/// Coroot pairing <alpha-vee, mu> via the symmetrized bilinear form;
/// always an integer for roots.
long long pairing(const CartanDatum& datum, const FiniteRoot& alpha,
                  const FiniteRoot& mu);

/// mu in the coroot basis: mu-vee = sum c_i (d_i / d_mu) alpha_i-vee.
std::vector<long long> coroot_coords(const CartanDatum& datum,
                                     const FiniteRoot& mu);

/// Positivity: level > 0, or level = 0 and the finite part positive.
bool is_positive(const AffineRoot& beta);

/// The positive representative beta^+ of {beta, -beta}.
AffineRoot positive_representative(const AffineRoot& beta);

/// s_{alpha+k*delta}(mu+m*delta) = mu - <alpha-vee,mu> alpha
///                                 + (m - k <alpha-vee,mu>) delta.
AffineRoot reflect(const CartanDatum& datum, const AffineRoot& beta,
                   const AffineRoot& target);

/// Action of the affine simple reflection s_i on a real affine root.
AffineRoot simple_action(const CartanDatum& datum, int i,
                         const AffineRoot& beta);

/// Checks that beta's finite part is a root of the datum; throws otherwise.
void check_real_root(const CartanDatum& datum, const AffineRoot& beta);

}  // namespace alcove

#endif
