#ifndef ALCOVE_CARTAN_HPP
#define ALCOVE_CARTAN_HPP

#include "alcove/numeric.hpp"

#include <set>
#include <string>
#include <vector>

namespace alcove {

/// A finite root written in the simple-root basis of the finite system
/// (length = affine rank - 1).  alpha_0 is never a coordinate direction.
struct FiniteRoot {
  std::vector<long long> coords;

  bool operator==(const FiniteRoot&) const = default;
  bool operator<(const FiniteRoot& o) const { return coords < o.coords; }
  FiniteRoot operator-() const;
  bool is_zero() const;
};

/// Braid order m_ij stored as an int; 0 means "no relation" (infinite order,
/// the affine A1 special case where a_ij * a_ji = 4).
constexpr int kNoBraidRelation = 0;

/// Validated affine Cartan datum: the generalized Cartan matrix of corank 1
/// together with the derived finite root system, highest root, braid orders
/// and minimal symmetrizers.  Immutable after construction and safe to share
/// across threads.
class CartanDatum {
 public:
  /// Affine rank n = |I_af|; indices run over {0, ..., n-1}.
  int rank_affine() const { return n_; }
  /// Rank of the finite subsystem I_0 = I_af - {0}.
  int rank_finite() const { return n_ - 1; }

  /// Entry a_ij of the affine Cartan matrix, i, j in I_af.
  long long cartan(int i, int j) const { return matrix_[i][j]; }
  /// Entry of the finite Cartan submatrix, i, j in {0, ..., n-2} indexing
  /// the simple roots alpha_1, ..., alpha_{n-1}.
  long long cartan_finite(int i, int j) const { return matrix_[i + 1][j + 1]; }

  /// Braid order m_ij (2, 3, 4, 6, or kNoBraidRelation).
  int braid_order(int i, int j) const { return braid_[i][j]; }

  /// Minimal positive symmetrizer d_i, i in I_af.
  long long symmetrizer(int i) const { return sym_[i]; }

  const std::vector<std::vector<long long>>& matrix() const { return matrix_; }

  /// The full finite root system, closed under negation, ordered.
  const std::vector<FiniteRoot>& finite_roots() const { return roots_; }
  bool is_finite_root(const FiniteRoot& r) const {
    return root_set_.count(r) != 0;
  }

  /// Highest root theta of the finite system.
  const FiniteRoot& highest_root() const { return theta_; }
  /// theta-vee in the simple-coroot basis (integer coefficients).
  const std::vector<long long>& theta_coroot() const { return theta_coroot_; }

  /// Symmetric bilinear form (alpha_i, alpha_j) = d_i a_ij on finite simple
  /// roots, i, j in {0, ..., n-2}.
  long long bilinear_finite(int i, int j) const {
    return sym_[i + 1] * matrix_[i + 1][j + 1];
  }

  bool operator==(const CartanDatum& o) const { return matrix_ == o.matrix_; }

  friend CartanDatum datum_from_matrix(
      const std::vector<std::vector<long long>>& matrix);

 private:
  CartanDatum() = default;

  int n_ = 0;
  std::vector<std::vector<long long>> matrix_;
  std::vector<std::vector<int>> braid_;
  std::vector<long long> sym_;
  std::vector<FiniteRoot> roots_;
  std::set<FiniteRoot> root_set_;
  FiniteRoot theta_;
  std::vector<long long> theta_coroot_;
};

/// Builds the datum for a builtin untwisted affine type label such as
/// "A2~", "C2~" or "G2~".  Throws ValidationError for unknown labels.
CartanDatum datum_from_type(const std::string& name);

/// Validates an integer matrix as an affine Cartan matrix and derives the
/// finite root system by reflection-orbit closure.  Throws ValidationError
/// with a distinct message per failed invariant.
CartanDatum datum_from_matrix(const std::vector<std::vector<long long>>& matrix);

/// The finite root system of a datum (identical to datum.finite_roots()).
const std::vector<FiniteRoot>& finite_roots(const CartanDatum& datum);

/// Labels accepted by datum_from_type, for error messages and the CLI.
std::vector<std::string> supported_type_labels();

}  // namespace alcove

#endif
