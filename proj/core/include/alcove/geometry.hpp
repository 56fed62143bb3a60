#ifndef ALCOVE_GEOMETRY_HPP
#define ALCOVE_GEOMETRY_HPP

#include "alcove/weyl.hpp"

#include <vector>

namespace alcove {

/// Element a + b*sqrt(s) of a real quadratic extension; s is carried by the
/// owning embedding.  Exact arithmetic, no floats.
struct QuadValue {
  Rational a;
  Rational b;

  bool operator==(const QuadValue&) const = default;
  QuadValue operator+(const QuadValue& o) const { return {a + o.a, b + o.b}; }
  QuadValue operator-(const QuadValue& o) const { return {a - o.a, b - o.b}; }
  QuadValue scaled(const Rational& c) const { return {a * c, b * c}; }
  double to_double(long long s) const;
};

struct PlanePoint {
  QuadValue x;
  QuadValue y;

  bool operator==(const PlanePoint&) const = default;
  PlanePoint operator+(const PlanePoint& o) const { return {x + o.x, y + o.y}; }
  PlanePoint operator-(const PlanePoint& o) const { return {x - o.x, y - o.y}; }
  PlanePoint scaled(const Rational& c) const { return {x.scaled(c), y.scaled(c)}; }
};

/// Planar picture of a rank-2 finite coroot lattice.  alpha_1-vee sits at
/// (1, 0); alpha_2-vee is placed so the Euclidean Gram matrix of the
/// embedded coroots is a positive multiple of (a_ij / d_j).  Its second
/// coordinate lives in Q(sqrt(s)) with s squarefree (s = 3 for the 120
/// degree triangular lattice, s = 1 when everything is rational).
class PlaneEmbedding {
 public:
  /// Builds the embedding for a rank-2 finite subsystem; throws Error for
  /// other ranks.
  explicit PlaneEmbedding(const CartanDatum& datum);

  const CartanDatum& datum() const { return *datum_; }
  /// Squarefree integer under the radical; 1 means purely rational.
  long long surd() const { return surd_; }

  /// Embedded simple coroot alpha_i-vee, i in {1, 2}.
  const PlanePoint& coroot(int i) const { return coroots_[i - 1]; }
  /// Embedded simple root alpha_i = (alpha_i, alpha_i)/2 * alpha_i-vee.
  const PlanePoint& root(int i) const { return roots_[i - 1]; }

  /// Image of a point given in simple-coroot coordinates.
  PlanePoint embed(const std::vector<Rational>& coroot_coords) const;

  /// Euclidean pairing of an embedded point with the embedded simple root
  /// alpha_j; always rational and equal to the abstract pairing.
  Rational pair_with_root(const PlanePoint& p, int j) const;

 private:
  const CartanDatum* datum_;
  long long surd_ = 1;
  PlanePoint coroots_[2];
  PlanePoint roots_[2];
};

/// Vertices of the base alcove in simple-coroot coordinates:
/// {0} then omega_i-vee / c_i in index order, c_i the theta coefficients.
std::vector<std::vector<Rational>> base_alcove_vertices(
    const CartanDatum& datum);

/// Vertices of w * a_0 in simple-coroot coordinates (affine action of w on
/// the base-alcove vertices, in base-vertex order).
std::vector<std::vector<Rational>> alcove_vertices(const WeylElement& w);

/// The same vertices embedded in the plane; rank-2 only.
std::vector<PlanePoint> alcove_polygon(const WeylElement& w,
                                       const PlaneEmbedding& emb);

/// Rational centroid of w * a_0 in simple-coroot coordinates.
std::vector<Rational> alcove_centroid(const WeylElement& w);

/// Value of the affine-linear function of beta = mu + k*delta at a point p
/// in coroot coordinates: <p, mu> + k.  Positive affine roots are positive
/// on the interior of the base alcove.
Rational affine_evaluation(const CartanDatum& datum,
                           const std::vector<Rational>& p,
                           const AffineRoot& beta);

/// Geometric side oracle: sign of the wall function of the positive
/// representative of u * alpha_i at the centroid of u * a_0.  Agrees with
/// positive_side(u, i); exists as an independent cross-check.
bool centroid_side_positive(const WeylElement& u, int i);

/// Vertices of the type-i panel of w * a_0 (the facet on the wall through
/// u * alpha_i), in simple-coroot coordinates.
std::vector<std::vector<Rational>> panel_vertices(const WeylElement& w, int i);

}  // namespace alcove

#endif
