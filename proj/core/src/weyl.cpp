#include "alcove/weyl.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace alcove {

namespace {

int finite_rank(const CartanDatum& datum) { return datum.rank_finite(); }

}  // namespace

WeylElement WeylElement::identity(const CartanDatum& datum) {
  WeylElement e;
  e.datum_ = &datum;
  int r = finite_rank(datum);
  e.u_.assign(r * r, 0);
  for (int i = 0; i < r; ++i) e.u_[i * r + i] = 1;
  e.lambda_.assign(r, 0);
  return e;
}

WeylElement WeylElement::simple_reflection(const CartanDatum& datum, int i) {
  if (i < 0 || i >= datum.rank_affine())
    throw Error("generator index out of range: " + std::to_string(i));
  WeylElement s = identity(datum);
  int r = finite_rank(datum);
  if (i >= 1) {
    // s_i alpha_j = alpha_j - a_ij alpha_i
    for (int j = 0; j < r; ++j)
      s.u_[(i - 1) * r + j] -= datum.cartan_finite(i - 1, j);
  } else {
    // s_0 = t_{theta-vee} s_theta
    const FiniteRoot& theta = datum.highest_root();
    const std::vector<long long>& tv = datum.theta_coroot();
    for (int j = 0; j < r; ++j) {
      long long pair = 0;  // <theta-vee, alpha_j>
      for (int k = 0; k < r; ++k) pair += tv[k] * datum.cartan_finite(k, j);
      for (int row = 0; row < r; ++row)
        s.u_[row * r + j] -= pair * theta.coords[row];
    }
    s.lambda_ = tv;
  }
  return s;
}

WeylElement WeylElement::from_parts(const CartanDatum& datum,
                                    std::vector<long long> u,
                                    std::vector<long long> lambda) {
  int r = finite_rank(datum);
  if (static_cast<int>(u.size()) != r * r ||
      static_cast<int>(lambda.size()) != r)
    throw DatumMismatch("element parts do not match datum rank");
  WeylElement w;
  w.datum_ = &datum;
  w.u_ = std::move(u);
  w.lambda_ = std::move(lambda);
  return w;
}

void WeylElement::check_same_datum(const WeylElement& o) const {
  if (datum_ != o.datum_)
    throw DatumMismatch("Weyl elements built over different Cartan data");
}

long long WeylElement::coroot_pairing(const std::vector<long long>& lambda,
                                      const std::vector<long long>& mu) const {
  // <sum lambda_i alpha_i-vee, sum mu_j alpha_j> = sum lambda_i a_ij mu_j
  int r = finite_rank(*datum_);
  long long out = 0;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      out += lambda[i] * datum_->cartan_finite(i, j) * mu[j];
  return out;
}

std::vector<long long> WeylElement::coroot_matrix() const {
  // u alpha_j-vee = sum_i U_ij (d_i / d_j) alpha_i-vee
  int r = finite_rank(*datum_);
  std::vector<long long> out(r * r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      out[i * r + j] = exact_div(u_[i * r + j] * datum_->symmetrizer(i + 1),
                                 datum_->symmetrizer(j + 1));
  return out;
}

AffineRoot WeylElement::apply(const AffineRoot& beta) const {
  check_real_root(*datum_, beta);
  int r = finite_rank(*datum_);
  AffineRoot out;
  out.finite.coords.assign(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      out.finite.coords[i] += u_[i * r + j] * beta.finite.coords[j];
  out.level = beta.level - coroot_pairing(lambda_, out.finite.coords);
  return out;
}

WeylElement WeylElement::operator*(const WeylElement& other) const {
  check_same_datum(other);
  int r = finite_rank(*datum_);
  WeylElement out;
  out.datum_ = datum_;
  out.u_.assign(r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int k = 0; k < r; ++k)
      for (int j = 0; j < r; ++j)
        out.u_[i * r + j] += u_[i * r + k] * other.u_[k * r + j];
  // t_l1 u1 t_l2 u2 = t_{l1 + u1 l2} (u1 u2), with u1 acting on coroots.
  std::vector<long long> cm = coroot_matrix();
  out.lambda_ = lambda_;
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      out.lambda_[i] += cm[i * r + j] * other.lambda_[j];
  return out;
}

WeylElement WeylElement::inverse() const {
  int r = finite_rank(*datum_);
  // Exact integer inversion; u is a signed lattice automorphism.
  std::vector<std::vector<Rational>> a(r, std::vector<Rational>(2 * r, 0));
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) a[i][j] = u_[i * r + j];
    a[i][r + i] = 1;
  }
  for (int col = 0; col < r; ++col) {
    int pivot = col;
    while (pivot < r && a[pivot][col] == 0) ++pivot;
    if (pivot == r) throw Error("singular finite part in WeylElement");
    std::swap(a[col], a[pivot]);
    Rational d = a[col][col];
    for (int j = 0; j < 2 * r; ++j) a[col][j] /= d;
    for (int i = 0; i < r; ++i) {
      if (i == col || a[i][col] == 0) continue;
      Rational f = a[i][col];
      for (int j = 0; j < 2 * r; ++j) a[i][j] -= f * a[col][j];
    }
  }
  WeylElement out;
  out.datum_ = datum_;
  out.u_.assign(r * r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      const Rational& x = a[i][r + j];
      if (denominator(x) != 1) throw Error("non-integer inverse matrix");
      out.u_[i * r + j] = static_cast<long long>(numerator(x));
    }
  // (t_l u)^{-1} = t_{-u^{-1} l} u^{-1}
  std::vector<long long> cm = out.coroot_matrix();
  out.lambda_.assign(r, 0);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) out.lambda_[i] -= cm[i * r + j] * lambda_[j];
  return out;
}

bool WeylElement::is_identity() const {
  int r = finite_rank(*datum_);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (u_[i * r + j] != (i == j ? 1 : 0)) return false;
  return std::all_of(lambda_.begin(), lambda_.end(),
                     [](long long x) { return x == 0; });
}

bool WeylElement::operator==(const WeylElement& o) const {
  check_same_datum(o);
  return u_ == o.u_ && lambda_ == o.lambda_;
}

bool WeylElement::operator<(const WeylElement& o) const {
  check_same_datum(o);
  if (u_ != o.u_) return u_ < o.u_;
  return lambda_ < o.lambda_;
}

std::vector<long long> WeylElement::key() const {
  std::vector<long long> k = u_;
  k.insert(k.end(), lambda_.begin(), lambda_.end());
  return k;
}

std::vector<Rational> WeylElement::apply_point(
    const std::vector<Rational>& p) const {
  int r = finite_rank(*datum_);
  std::vector<long long> cm = coroot_matrix();
  std::vector<Rational> out(r, 0);
  for (int i = 0; i < r; ++i) {
    for (int j = 0; j < r; ++j) out[i] += cm[i * r + j] * p[j];
    out[i] += lambda_[i];
  }
  return out;
}

WeylElement from_word(const CartanDatum& datum, const Word& word) {
  WeylElement w = WeylElement::identity(datum);
  for (int letter : word) w = w * WeylElement::simple_reflection(datum, letter);
  return w;
}

bool is_right_descent(const WeylElement& w, int i) {
  return !is_positive(w.apply(affine_simple_root(w.datum(), i)));
}

bool is_left_descent(const WeylElement& w, int i) {
  return !is_positive(w.inverse().apply(affine_simple_root(w.datum(), i)));
}

int length(const WeylElement& w) {
  WeylElement cur = w;
  const CartanDatum& datum = w.datum();
  int n = datum.rank_affine();
  int len = 0;
  while (!cur.is_identity()) {
    int descent = -1;
    for (int i = 0; i < n; ++i) {
      if (is_right_descent(cur, i)) {
        descent = i;
        break;
      }
    }
    if (descent < 0) throw Error("non-identity element with no right descent");
    cur = cur * WeylElement::simple_reflection(datum, descent);
    ++len;
  }
  return len;
}

Word reduced_word(const WeylElement& w) {
  WeylElement cur = w;
  const CartanDatum& datum = w.datum();
  int n = datum.rank_affine();
  Word word;
  while (!cur.is_identity()) {
    int descent = -1;
    for (int i = 0; i < n; ++i) {
      if (is_right_descent(cur, i)) {
        descent = i;
        break;
      }
    }
    if (descent < 0) throw Error("non-identity element with no right descent");
    word.push_back(descent);
    cur = cur * WeylElement::simple_reflection(datum, descent);
  }
  std::reverse(word.begin(), word.end());
  return word;
}

std::vector<AffineRoot> inversions(const WeylElement& w) {
  const CartanDatum& datum = w.datum();
  Word word = reduced_word(w);
  std::vector<AffineRoot> out;
  WeylElement prefix = WeylElement::identity(datum);
  for (int letter : word) {
    out.push_back(prefix.apply(affine_simple_root(datum, letter)));
    prefix = prefix * WeylElement::simple_reflection(datum, letter);
  }
  return out;
}

bool bruhat_leq(const WeylElement& v, const WeylElement& w) {
  const CartanDatum& datum = v.datum();
  Word word = reduced_word(w);
  WeylElement cur = v;
  // Lifting-property scan from the right end of the word.
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    if (is_right_descent(cur, *it))
      cur = cur * WeylElement::simple_reflection(datum, *it);
  }
  return cur.is_identity();
}

WeylElement reflection(const CartanDatum& datum, const AffineRoot& beta) {
  check_real_root(datum, beta);
  AffineRoot pos = positive_representative(beta);
  int r = datum.rank_finite();
  // s_alpha on roots, then translation by -k alpha-vee.
  std::vector<long long> u(r * r, 0);
  for (int j = 0; j < r; ++j) {
    AffineRoot alpha_j = affine_simple_root(datum, j + 1);
    long long pair = pairing(datum, pos.finite, alpha_j.finite);
    for (int i = 0; i < r; ++i)
      u[i * r + j] = (i == j ? 1 : 0) - pair * pos.finite.coords[i];
  }
  std::vector<long long> cv = coroot_coords(datum, pos.finite);
  std::vector<long long> lambda(r);
  for (int i = 0; i < r; ++i) lambda[i] = -pos.level * cv[i];
  return WeylElement::from_parts(datum, std::move(u), std::move(lambda));
}

Word palindromic_word(const CartanDatum& datum, const AffineRoot& beta) {
  WeylElement w = reflection(datum, beta);
  int n = datum.rank_affine();
  Word left;
  int len = length(w);
  while (len > 1) {
    int found = -1;
    // Finite generators first (1, ..., n-1, then 0); this order pins the
    // canonical palindrome used by the golden tests.
    for (int pos = 1; pos <= n; ++pos) {
      int i = pos % n;
      WeylElement s = WeylElement::simple_reflection(datum, i);
      WeylElement conj = s * w * s;
      if (length(conj) == len - 2) {
        found = i;
        w = conj;
        len -= 2;
        break;
      }
    }
    if (found < 0)
      throw Error("no length-decreasing conjugation for reflection");
    left.push_back(found);
  }
  int middle = -1;
  for (int i = 0; i < n; ++i) {
    if (w == WeylElement::simple_reflection(datum, i)) {
      middle = i;
      break;
    }
  }
  if (middle < 0) throw Error("conjugated reflection is not simple");
  Word word = left;
  word.push_back(middle);
  for (auto it = left.rbegin(); it != left.rend(); ++it) word.push_back(*it);
  return word;
}

std::vector<std::pair<WeylElement, Word>> enumerate_elements(
    const CartanDatum& datum, int bound) {
  std::vector<std::pair<WeylElement, Word>> out;
  std::set<std::vector<long long>> seen;
  WeylElement e = WeylElement::identity(datum);
  out.emplace_back(e, Word{});
  seen.insert(e.key());
  std::size_t layer_begin = 0;
  int n = datum.rank_affine();
  for (int len = 1; len <= bound; ++len) {
    std::size_t layer_end = out.size();
    for (std::size_t idx = layer_begin; idx < layer_end; ++idx) {
      for (int i = 0; i < n; ++i) {
        WeylElement next =
            out[idx].first * WeylElement::simple_reflection(datum, i);
        if (is_right_descent(out[idx].first, i)) continue;  // length drops
        if (!seen.insert(next.key()).second) continue;
        Word word = out[idx].second;
        word.push_back(i);
        out.emplace_back(std::move(next), std::move(word));
      }
    }
    layer_begin = layer_end;
  }
  return out;
}

}  // namespace alcove
