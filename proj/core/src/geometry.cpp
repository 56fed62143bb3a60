#include "alcove/geometry.hpp"

#include <cmath>

namespace alcove {

double QuadValue::to_double(long long s) const {
  return static_cast<double>(a) +
         static_cast<double>(b) * std::sqrt(static_cast<double>(s));
}

namespace {

// mul in Q(sqrt(s)): (a + b sqrt(s))(c + e sqrt(s)).
QuadValue quad_mul(const QuadValue& u, const QuadValue& v, long long s) {
  return {u.a * v.a + u.b * v.b * s, u.a * v.b + u.b * v.a};
}

// r = (m/den)^2 * s with s squarefree; returns (m/den, s) for sqrt(r).
std::pair<Rational, long long> exact_sqrt(const Rational& r) {
  Integer num = numerator(r) * denominator(r);
  long long n = static_cast<long long>(num);
  long long square = 1;
  long long s = n;
  for (long long p = 2; p * p <= s; ++p) {
    while (s % (p * p) == 0) {
      s /= p * p;
      square *= p;
    }
  }
  return {Rational(square, denominator(r)), s};
}

std::vector<Rational> solve_coweight(const CartanDatum& datum, int i) {
  // p with sum_k p_k a_kj = delta_ij over the finite Cartan matrix.
  int r = datum.rank_finite();
  std::vector<std::vector<Rational>> m(r, std::vector<Rational>(r + 1, 0));
  for (int row = 0; row < r; ++row) {
    for (int col = 0; col < r; ++col)
      m[row][col] = Rational(datum.cartan_finite(col, row));
    m[row][r] = row == i ? 1 : 0;
  }
  for (int col = 0; col < r; ++col) {
    int pivot = col;
    while (m[pivot][col] == 0) ++pivot;
    std::swap(m[col], m[pivot]);
    Rational inv = Rational(1) / m[col][col];
    for (int c = col; c <= r; ++c) m[col][c] *= inv;
    for (int row = 0; row < r; ++row) {
      if (row == col || m[row][col] == 0) continue;
      Rational f = m[row][col];
      for (int c = col; c <= r; ++c) m[row][c] -= f * m[col][c];
    }
  }
  std::vector<Rational> out(r);
  for (int k = 0; k < r; ++k) out[k] = m[k][r];
  return out;
}

}  // namespace

PlaneEmbedding::PlaneEmbedding(const CartanDatum& datum) : datum_(&datum) {
  if (datum.rank_finite() != 2)
    throw Error("plane embedding requires a rank-2 finite subsystem");
  long long d1 = datum.symmetrizer(1);
  long long d2 = datum.symmetrizer(2);
  Rational x = Rational(d1 * datum.cartan_finite(0, 1), 2 * d2);
  auto [m, s] = exact_sqrt(Rational(d1, d2) - x * x);
  surd_ = s;
  coroots_[0] = {{1, 0}, {0, 0}};
  coroots_[1] = {{x, 0}, s == 1 ? QuadValue{m, 0} : QuadValue{0, m}};
  for (int j = 0; j < 2; ++j) {
    Rational c(2 * datum.symmetrizer(j + 1), d1);
    roots_[j] = coroots_[j].scaled(c);
  }
}

PlanePoint PlaneEmbedding::embed(
    const std::vector<Rational>& coroot_coords) const {
  if (coroot_coords.size() != 2) throw Error("expected 2 coroot coordinates");
  return coroots_[0].scaled(coroot_coords[0]) +
         coroots_[1].scaled(coroot_coords[1]);
}

Rational PlaneEmbedding::pair_with_root(const PlanePoint& p, int j) const {
  const PlanePoint& r = roots_[j - 1];
  QuadValue dot = quad_mul(p.x, r.x, surd_) + quad_mul(p.y, r.y, surd_);
  if (dot.b != 0) throw Error("irrational pairing value");
  return dot.a;
}

std::vector<std::vector<Rational>> base_alcove_vertices(
    const CartanDatum& datum) {
  int r = datum.rank_finite();
  std::vector<std::vector<Rational>> out;
  out.emplace_back(r, Rational(0));
  const auto& theta = datum.highest_root().coords;
  for (int i = 0; i < r; ++i) {
    std::vector<Rational> v = solve_coweight(datum, i);
    for (auto& c : v) c /= theta[i];
    out.push_back(std::move(v));
  }
  return out;
}

std::vector<std::vector<Rational>> alcove_vertices(const WeylElement& w) {
  std::vector<std::vector<Rational>> out;
  for (const auto& v : base_alcove_vertices(w.datum()))
    out.push_back(w.apply_point(v));
  return out;
}

std::vector<PlanePoint> alcove_polygon(const WeylElement& w,
                                       const PlaneEmbedding& emb) {
  std::vector<PlanePoint> out;
  for (const auto& v : alcove_vertices(w)) out.push_back(emb.embed(v));
  return out;
}

std::vector<Rational> alcove_centroid(const WeylElement& w) {
  auto vertices = alcove_vertices(w);
  int r = w.datum().rank_finite();
  std::vector<Rational> c(r, 0);
  for (const auto& v : vertices)
    for (int i = 0; i < r; ++i) c[i] += v[i];
  for (auto& x : c) x /= static_cast<long long>(vertices.size());
  return c;
}

Rational affine_evaluation(const CartanDatum& datum,
                           const std::vector<Rational>& p,
                           const AffineRoot& beta) {
  check_real_root(datum, beta);
  int r = datum.rank_finite();
  Rational out(beta.level);
  for (int i = 0; i < r; ++i) {
    long long pairing_i = 0;
    for (int j = 0; j < r; ++j)
      pairing_i += beta.finite.coords[j] * datum.cartan_finite(i, j);
    out += p[i] * pairing_i;
  }
  return out;
}

bool centroid_side_positive(const WeylElement& u, int i) {
  const CartanDatum& datum = u.datum();
  AffineRoot wall =
      positive_representative(u.apply(affine_simple_root(datum, i)));
  return affine_evaluation(datum, alcove_centroid(u), wall) > 0;
}

std::vector<std::vector<Rational>> panel_vertices(const WeylElement& w,
                                                  int i) {
  const CartanDatum& datum = w.datum();
  AffineRoot alpha = affine_simple_root(datum, i);
  std::vector<std::vector<Rational>> out;
  for (const auto& v : base_alcove_vertices(datum)) {
    if (affine_evaluation(datum, v, alpha) == 0)
      out.push_back(w.apply_point(v));
  }
  return out;
}

}  // namespace alcove
