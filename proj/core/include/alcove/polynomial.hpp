#ifndef ALCOVE_POLYNOMIAL_HPP
#define ALCOVE_POLYNOMIAL_HPP

#include "alcove/roots.hpp"

#include <map>
#include <optional>
#include <vector>

namespace alcove {

/// Graded lexicographic order on exponent vectors (total degree first).
struct GradedLex {
  bool operator()(const std::vector<int>& a, const std::vector<int>& b) const;
};

/// Exact multivariate polynomial with rational coefficients.  For a datum of
/// affine rank n the variables are (alpha_1, ..., alpha_{n-1}, delta), delta
/// last; the alpha_0-basis view reinterprets the last slot as alpha_0.
/// Zero coefficients are never stored.
class RootPolynomial {
 public:
  using TermMap = std::map<std::vector<int>, Rational, GradedLex>;

  explicit RootPolynomial(int nvars = 0) : nvars_(nvars) {}

  static RootPolynomial constant(int nvars, const Rational& c);
  static RootPolynomial variable(int nvars, int index);
  /// The linear polynomial of a real affine root mu + k*delta.
  static RootPolynomial from_root(const CartanDatum& datum,
                                  const AffineRoot& beta);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  /// Total degree; -1 for the zero polynomial.
  int total_degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  Rational coefficient(const std::vector<int>& exps) const;
  const TermMap& terms() const { return terms_; }
  /// True when every coefficient is an integer.
  bool has_integer_coefficients() const;

  RootPolynomial operator+(const RootPolynomial& o) const;
  RootPolynomial operator-(const RootPolynomial& o) const;
  RootPolynomial operator-() const;
  RootPolynomial operator*(const RootPolynomial& o) const;
  RootPolynomial scaled(const Rational& c) const;
  bool operator==(const RootPolynomial& o) const;
  bool operator!=(const RootPolynomial& o) const { return !(*this == o); }
  /// Total order for containers; compares (nvars, term map).
  bool operator<(const RootPolynomial& o) const {
    if (nvars_ != o.nvars_) return nvars_ < o.nvars_;
    return terms_ < o.terms_;
  }

  void add_term(std::vector<int> exps, const Rational& coeff);

 private:
  int nvars_;
  TermMap terms_;

  void check_arity(const RootPolynomial& o) const;
};

/// Substitutes the linear polynomial `value` for variable `index`.
RootPolynomial substitute(const RootPolynomial& p, int index,
                          const RootPolynomial& value);

/// Rewrites via delta = alpha_0 + theta; the last variable slot becomes
/// alpha_0.  Exact inverse of from_alpha0_basis.
RootPolynomial to_alpha0_basis(const RootPolynomial& p,
                               const CartanDatum& datum);
RootPolynomial from_alpha0_basis(const RootPolynomial& p,
                                 const CartanDatum& datum);

/// The substitution delta -> 0.
RootPolynomial specialize_delta_zero(const RootPolynomial& p);

/// True iff the nonzero linear form ell divides p, tested by restricting p
/// to the hyperplane ell = 0.
bool divides_linear(const RootPolynomial& ell, const RootPolynomial& p);
bool divides_linear(const CartanDatum& datum, const AffineRoot& ell,
                    const RootPolynomial& p);

/// Exact quotient p / ell when the linear form ell divides p.
std::optional<RootPolynomial> divide_by_linear(const RootPolynomial& p,
                                               const RootPolynomial& ell);

/// Best-effort factorization of p into a rational scalar and positive affine
/// roots (levels up to the degree-scaled heuristic cap), for display only.
/// Empty result means no complete factorization was found.
struct RootFactorization {
  Rational scalar;
  std::vector<AffineRoot> factors;
};
std::optional<RootFactorization> factor_into_roots(const CartanDatum& datum,
                                                   const RootPolynomial& p);

}  // namespace alcove

#endif
