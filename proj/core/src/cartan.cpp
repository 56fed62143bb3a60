#include "alcove/cartan.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <regex>
#include <sstream>

namespace alcove {

FiniteRoot FiniteRoot::operator-() const {
  FiniteRoot r = *this;
  for (auto& c : r.coords) c = -c;
  return r;
}

bool FiniteRoot::is_zero() const {
  return std::all_of(coords.begin(), coords.end(),
                     [](long long c) { return c == 0; });
}

namespace {

// Rank of an integer matrix by exact Gaussian elimination over rationals.
int rational_rank(const std::vector<std::vector<long long>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<std::vector<Rational>> a(n, std::vector<Rational>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a[i][j] = m[i][j];
  int rank = 0;
  for (int col = 0; col < n && rank < n; ++col) {
    int pivot = -1;
    for (int row = rank; row < n; ++row) {
      if (a[row][col] != 0) {
        pivot = row;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    for (int row = rank + 1; row < n; ++row) {
      if (a[row][col] == 0) continue;
      Rational f = a[row][col] / a[rank][col];
      for (int j = col; j < n; ++j) a[row][j] -= f * a[rank][j];
    }
    ++rank;
  }
  return rank;
}

// Leading principal minors of a symmetric rational matrix, for Sylvester's
// positive definiteness criterion.
bool is_positive_definite(const std::vector<std::vector<Rational>>& b) {
  int n = static_cast<int>(b.size());
  std::vector<std::vector<Rational>> a = b;
  // Fraction-free-ish LDL: minor via elimination, all pivots must stay > 0.
  for (int k = 0; k < n; ++k) {
    if (a[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Rational f = a[i][k] / a[k][k];
      for (int j = k; j < n; ++j) a[i][j] -= f * a[k][j];
    }
  }
  return true;
}

// Minimal positive integer symmetrizers d with d_i a_ij = d_j a_ji, found by
// propagating ratios along the Dynkin graph and clearing denominators.
std::vector<long long> compute_symmetrizers(
    const std::vector<std::vector<long long>>& m) {
  int n = static_cast<int>(m.size());
  std::vector<Rational> d(n, 0);
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (i == j || m[i][j] == 0) continue;
        Rational dj = d[i] * m[i][j] / m[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          queue.push_back(j);
        } else if (d[j] != dj) {
          throw ValidationError("cartan matrix is not symmetrizable");
        }
      }
    }
  }
  Integer lcm_den = 1;
  for (auto& x : d) lcm_den = boost::multiprecision::lcm(lcm_den, denominator(x));
  std::vector<Integer> num(n);
  Integer g = 0;
  for (int i = 0; i < n; ++i) {
    num[i] = numerator(Rational(d[i] * lcm_den));
    g = boost::multiprecision::gcd(g, num[i]);
  }
  std::vector<long long> out(n);
  for (int i = 0; i < n; ++i) out[i] = static_cast<long long>(num[i] / g);
  return out;
}

constexpr int kRootClosureCap = 10000;

}  // namespace

CartanDatum datum_from_matrix(
    const std::vector<std::vector<long long>>& matrix) {
  int n = static_cast<int>(matrix.size());
  if (n < 2) throw ValidationError("affine Cartan matrix needs rank >= 2");
  for (const auto& row : matrix) {
    if (static_cast<int>(row.size()) != n)
      throw ValidationError("cartan matrix is not square");
  }
  for (int i = 0; i < n; ++i) {
    if (matrix[i][i] != 2)
      throw ValidationError("cartan matrix diagonal entry != 2 at index " +
                            std::to_string(i));
    for (int j = 0; j < n; ++j) {
      if (i != j && matrix[i][j] > 0)
        throw ValidationError("cartan matrix has positive off-diagonal entry a_" +
                              std::to_string(i) + std::to_string(j));
      if (i != j && (matrix[i][j] == 0) != (matrix[j][i] == 0))
        throw ValidationError("cartan matrix zero pattern is not symmetric at (" +
                              std::to_string(i) + "," + std::to_string(j) + ")");
    }
  }
  if (rational_rank(matrix) != n - 1)
    throw ValidationError("cartan matrix does not have corank exactly 1");

  CartanDatum datum;
  datum.n_ = n;
  datum.matrix_ = matrix;
  datum.sym_ = compute_symmetrizers(matrix);

  // Every proper principal submatrix must be positive definite; it is enough
  // to check the n submatrices obtained by deleting one index.
  for (int drop = 0; drop < n; ++drop) {
    std::vector<int> idx;
    for (int i = 0; i < n; ++i)
      if (i != drop) idx.push_back(i);
    std::vector<std::vector<Rational>> b(n - 1, std::vector<Rational>(n - 1));
    for (int i = 0; i < n - 1; ++i)
      for (int j = 0; j < n - 1; ++j)
        b[i][j] = Rational(datum.sym_[idx[i]]) * matrix[idx[i]][idx[j]];
    if (!is_positive_definite(b))
      throw ValidationError(
          "principal submatrix omitting index " + std::to_string(drop) +
          " is not positive definite; matrix is not of affine type");
  }

  datum.braid_.assign(n, std::vector<int>(n, 2));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      long long p = matrix[i][j] * matrix[j][i];
      switch (p) {
        case 0: datum.braid_[i][j] = 2; break;
        case 1: datum.braid_[i][j] = 3; break;
        case 2: datum.braid_[i][j] = 4; break;
        case 3: datum.braid_[i][j] = 6; break;
        case 4: datum.braid_[i][j] = kNoBraidRelation; break;  // affine A1
        default:
          throw ValidationError("a_ij * a_ji = " + std::to_string(p) +
                                " outside {0,1,2,3,4}");
      }
    }
  }

  // Finite root system by breadth-first orbit closure from the simple roots
  // of I_0 under all finite simple reflections.
  int r = n - 1;
  std::set<FiniteRoot> closure;
  std::deque<FiniteRoot> queue;
  for (int i = 0; i < r; ++i) {
    FiniteRoot simple;
    simple.coords.assign(r, 0);
    simple.coords[i] = 1;
    closure.insert(simple);
    queue.push_back(simple);
  }
  while (!queue.empty()) {
    FiniteRoot root = queue.front();
    queue.pop_front();
    for (int i = 0; i < r; ++i) {
      long long pair = 0;  // <alpha_{i+1}^vee, root>
      for (int j = 0; j < r; ++j) pair += matrix[i + 1][j + 1] * root.coords[j];
      FiniteRoot image = root;
      image.coords[i] -= pair;
      if (closure.insert(image).second) {
        if (static_cast<int>(closure.size()) > kRootClosureCap)
          throw ValidationError("finite root closure exceeded cap; matrix is "
                                "not of affine type");
        queue.push_back(image);
      }
    }
  }
  // Negatives come for free from the orbit, but make closure under negation
  // explicit anyway.
  for (const auto& root : std::set<FiniteRoot>(closure))
    closure.insert(-root);
  datum.roots_.assign(closure.begin(), closure.end());
  datum.root_set_ = std::move(closure);

  // theta: unique root maximal in dominance order.  Pick the height-maximal
  // root and verify dominance maximality (theta - any root is nonnegative).
  const FiniteRoot* best = nullptr;
  long long best_height = 0;
  for (const auto& root : datum.roots_) {
    long long h = std::accumulate(root.coords.begin(), root.coords.end(), 0LL);
    if (best == nullptr || h > best_height) {
      best = &root;
      best_height = h;
    }
  }
  datum.theta_ = *best;
  for (const auto& root : datum.roots_) {
    for (int j = 0; j < r; ++j) {
      if (root.coords[j] > datum.theta_.coords[j])
        throw ValidationError("finite system has no dominance-maximal root");
    }
  }

  // theta-vee = sum c_i (d_i / d_theta) alpha_i-vee with d_theta =
  // (theta,theta)/2; integrality holds for crystallographic systems.
  long long theta_norm = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      theta_norm += datum.theta_.coords[i] * datum.bilinear_finite(i, j) *
                    datum.theta_.coords[j];
  long long d_theta = exact_div(theta_norm, 2);
  datum.theta_coroot_.assign(r, 0);
  for (int i = 0; i < r; ++i)
    datum.theta_coroot_[i] =
        exact_div(datum.theta_.coords[i] * datum.sym_[i + 1], d_theta);

  return datum;
}

namespace {

std::vector<std::vector<long long>> affine_a_matrix(int n) {
  if (n == 2) return {{2, -2}, {-2, 2}};
  std::vector<std::vector<long long>> m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) {
    m[i][i] = 2;
    m[i][(i + 1) % n] = -1;
    m[i][(i + n - 1) % n] = -1;
  }
  return m;
}

}  // namespace

std::vector<std::string> supported_type_labels() {
  return {"A1~", "A2~", "A3~", "A4~", "A5~", "A6~", "A7~", "C2~", "G2~"};
}

CartanDatum datum_from_type(const std::string& name) {
  static const std::regex a_series("A([1-9][0-9]*)~");
  std::smatch match;
  if (std::regex_match(name, match, a_series)) {
    int k = std::stoi(match[1]);
    if (k <= 16) return datum_from_matrix(affine_a_matrix(k + 1));
  }
  if (name == "C2~") {
    // alpha_1 short, alpha_2 long; theta = 2 alpha_1 + alpha_2.
    return datum_from_matrix({{2, -1, 0}, {-2, 2, -2}, {0, -1, 2}});
  }
  if (name == "G2~") {
    // alpha_1 short, alpha_2 long; theta = 3 alpha_1 + 2 alpha_2.
    return datum_from_matrix({{2, 0, -1}, {0, 2, -3}, {-1, -1, 2}});
  }
  std::ostringstream msg;
  msg << "unknown affine type label \"" << name << "\"; supported:";
  for (const auto& label : supported_type_labels()) msg << " " << label;
  throw ValidationError(msg.str());
}

const std::vector<FiniteRoot>& finite_roots(const CartanDatum& datum) {
  return datum.finite_roots();
}

}  // namespace alcove
