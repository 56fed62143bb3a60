#include "alcove/polynomial.hpp"

#include <algorithm>
#include <numeric>

namespace alcove {

bool GradedLex::operator()(const std::vector<int>& a,
                           const std::vector<int>& b) const {
  int da = std::accumulate(a.begin(), a.end(), 0);
  int db = std::accumulate(b.begin(), b.end(), 0);
  if (da != db) return da < db;
  return a < b;
}

RootPolynomial RootPolynomial::constant(int nvars, const Rational& c) {
  RootPolynomial p(nvars);
  p.add_term(std::vector<int>(nvars, 0), c);
  return p;
}

RootPolynomial RootPolynomial::variable(int nvars, int index) {
  if (index < 0 || index >= nvars)
    throw Error("polynomial variable index out of range");
  RootPolynomial p(nvars);
  std::vector<int> e(nvars, 0);
  e[index] = 1;
  p.add_term(std::move(e), 1);
  return p;
}

RootPolynomial RootPolynomial::from_root(const CartanDatum& datum,
                                         const AffineRoot& beta) {
  check_real_root(datum, beta);
  int r = datum.rank_finite();
  RootPolynomial p(r + 1);
  for (int i = 0; i < r; ++i) {
    if (beta.finite.coords[i] == 0) continue;
    std::vector<int> e(r + 1, 0);
    e[i] = 1;
    p.add_term(std::move(e), beta.finite.coords[i]);
  }
  if (beta.level != 0) {
    std::vector<int> e(r + 1, 0);
    e[r] = 1;
    p.add_term(std::move(e), beta.level);
  }
  return p;
}

int RootPolynomial::total_degree() const {
  if (terms_.empty()) return -1;
  const auto& lead = terms_.rbegin()->first;
  return std::accumulate(lead.begin(), lead.end(), 0);
}

bool RootPolynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = total_degree();
  for (const auto& [e, c] : terms_)
    if (std::accumulate(e.begin(), e.end(), 0) != d) return false;
  return true;
}

bool RootPolynomial::is_constant() const { return total_degree() <= 0; }

Rational RootPolynomial::coefficient(const std::vector<int>& exps) const {
  auto it = terms_.find(exps);
  return it == terms_.end() ? Rational(0) : it->second;
}

bool RootPolynomial::has_integer_coefficients() const {
  for (const auto& [e, c] : terms_)
    if (denominator(c) != 1) return false;
  return true;
}

void RootPolynomial::add_term(std::vector<int> exps, const Rational& coeff) {
  if (static_cast<int>(exps.size()) != nvars_)
    throw Error("exponent vector length does not match variable count");
  if (coeff == 0) return;
  auto [it, inserted] = terms_.emplace(std::move(exps), coeff);
  if (!inserted) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  }
}

void RootPolynomial::check_arity(const RootPolynomial& o) const {
  if (nvars_ != o.nvars_)
    throw DatumMismatch("polynomials over different variable sets");
}

RootPolynomial RootPolynomial::operator+(const RootPolynomial& o) const {
  check_arity(o);
  RootPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, c);
  return out;
}

RootPolynomial RootPolynomial::operator-(const RootPolynomial& o) const {
  check_arity(o);
  RootPolynomial out = *this;
  for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
  return out;
}

RootPolynomial RootPolynomial::operator-() const {
  RootPolynomial out(nvars_);
  for (const auto& [e, c] : terms_) out.terms_.emplace(e, -c);
  return out;
}

RootPolynomial RootPolynomial::operator*(const RootPolynomial& o) const {
  check_arity(o);
  RootPolynomial out(nvars_);
  for (const auto& [ea, ca] : terms_) {
    for (const auto& [eb, cb] : o.terms_) {
      std::vector<int> e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = ea[i] + eb[i];
      out.add_term(std::move(e), ca * cb);
    }
  }
  return out;
}

RootPolynomial RootPolynomial::scaled(const Rational& c) const {
  RootPolynomial out(nvars_);
  if (c == 0) return out;
  for (const auto& [e, coeff] : terms_) out.terms_.emplace(e, coeff * c);
  return out;
}

bool RootPolynomial::operator==(const RootPolynomial& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

RootPolynomial substitute(const RootPolynomial& p, int index,
                          const RootPolynomial& value) {
  int n = p.nvars();
  if (index < 0 || index >= n) throw Error("substitution index out of range");
  RootPolynomial out(n);
  for (const auto& [e, c] : p.terms()) {
    RootPolynomial term = RootPolynomial::constant(n, c);
    std::vector<int> rest = e;
    rest[index] = 0;
    RootPolynomial mono(n);
    mono.add_term(std::move(rest), 1);
    term = term * mono;
    for (int k = 0; k < e[index]; ++k) term = term * value;
    out = out + term;
  }
  return out;
}

RootPolynomial to_alpha0_basis(const RootPolynomial& p,
                               const CartanDatum& datum) {
  int r = datum.rank_finite();
  // delta = alpha_0 + theta; the last slot plays alpha_0 in the result.
  RootPolynomial image = RootPolynomial::variable(r + 1, r);
  for (int i = 0; i < r; ++i)
    image = image + RootPolynomial::variable(r + 1, i)
                        .scaled(datum.highest_root().coords[i]);
  return substitute(p, r, image);
}

RootPolynomial from_alpha0_basis(const RootPolynomial& p,
                                 const CartanDatum& datum) {
  int r = datum.rank_finite();
  // alpha_0 = delta - theta.
  RootPolynomial image = RootPolynomial::variable(r + 1, r);
  for (int i = 0; i < r; ++i)
    image = image - RootPolynomial::variable(r + 1, i)
                        .scaled(datum.highest_root().coords[i]);
  return substitute(p, r, image);
}

RootPolynomial specialize_delta_zero(const RootPolynomial& p) {
  return substitute(p, p.nvars() - 1, RootPolynomial(p.nvars()));
}

bool divides_linear(const RootPolynomial& ell, const RootPolynomial& p) {
  if (ell.total_degree() != 1)
    throw Error("divisor is not a nonzero linear form");
  if (p.is_zero()) return true;
  int n = ell.nvars();
  // Pick a variable with nonzero coefficient in ell and solve for it.
  int pivot = -1;
  Rational c;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    Rational ci = ell.coefficient(e);
    if (ci != 0) {
      pivot = i;
      c = ci;
      break;
    }
  }
  if (pivot < 0) throw Error("divisor is not a nonzero linear form");
  RootPolynomial rest = ell;
  {
    std::vector<int> e(n, 0);
    e[pivot] = 1;
    RootPolynomial mono(n);
    mono.add_term(std::move(e), c);
    rest = rest - mono;
  }
  RootPolynomial image = rest.scaled(Rational(-1) / c);
  return substitute(p, pivot, image).is_zero();
}

bool divides_linear(const CartanDatum& datum, const AffineRoot& ell,
                    const RootPolynomial& p) {
  return divides_linear(RootPolynomial::from_root(datum, ell), p);
}

std::optional<RootPolynomial> divide_by_linear(const RootPolynomial& p,
                                               const RootPolynomial& ell) {
  if (ell.total_degree() != 1)
    throw Error("divisor is not a nonzero linear form");
  int n = p.nvars();
  int pivot = -1;
  Rational c;
  for (int i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    Rational ci = ell.coefficient(e);
    if (ci != 0) {
      pivot = i;
      c = ci;
      break;
    }
  }
  if (pivot < 0) throw Error("divisor is not a nonzero linear form");

  // Long division with respect to the pivot variable; exact when divisible.
  RootPolynomial remainder = p;
  RootPolynomial quotient(n);
  while (true) {
    // Highest pivot-degree term block of the remainder.
    int top = 0;
    for (const auto& [e, coeff] : remainder.terms())
      top = std::max(top, e[pivot]);
    if (top == 0) break;
    RootPolynomial lead(n);
    for (const auto& [e, coeff] : remainder.terms()) {
      if (e[pivot] != top) continue;
      std::vector<int> reduced = e;
      reduced[pivot] = top - 1;
      lead.add_term(std::move(reduced), coeff / c);
    }
    quotient = quotient + lead;
    remainder = remainder - lead * ell;
  }
  if (!remainder.is_zero()) return std::nullopt;
  return quotient;
}

std::optional<RootFactorization> factor_into_roots(
    const CartanDatum& datum, const RootPolynomial& p) {
  if (p.is_zero() || !p.is_homogeneous()) return std::nullopt;
  int degree = p.total_degree();
  if (degree == 0) return RootFactorization{p.terms().begin()->second, {}};

  // Candidate linear factors: positive affine roots with bounded level,
  // ordered by (level, coordinates) so the output is deterministic.
  long long cap = 1;
  for (const auto& [e, c] : p.terms())
    cap = std::max(cap, static_cast<long long>(
                            boost::multiprecision::abs(numerator(c))));
  cap = std::max<long long>(4, cap);
  std::vector<AffineRoot> candidates;
  for (long long level = 0; level <= cap; ++level)
    for (const auto& mu : finite_roots(datum))
      if (is_positive(AffineRoot{mu, level}))
        candidates.push_back({mu, level});
  std::sort(candidates.begin(), candidates.end());

  RootFactorization out;
  RootPolynomial rest = p;
  for (const auto& beta : candidates) {
    RootPolynomial ell = RootPolynomial::from_root(datum, beta);
    while (rest.total_degree() >= 1) {
      auto q = divide_by_linear(rest, ell);
      if (!q) break;
      out.factors.push_back(beta);
      rest = *q;
    }
    if (rest.total_degree() < 1) break;
  }
  if (rest.total_degree() >= 1) return std::nullopt;
  out.scalar = rest.is_zero() ? Rational(0) : rest.terms().begin()->second;
  return out;
}

}  // namespace alcove
