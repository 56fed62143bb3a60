#ifndef ALCOVE_TEXTIO_HPP
#define ALCOVE_TEXTIO_HPP

#include "alcove/folded.hpp"

#include <string>

namespace alcove {

/// Which name the last variable slot prints and parses as: "d" (the null
/// root) or "a0" (after the substitution d = a0 + theta).
enum class Basis { kDelta, kAlpha0 };

std::string format_rational(const Rational& r);
Rational parse_rational(const std::string& s);

/// Space-separated letters; the empty word prints as "".
std::string format_word(const Word& word);
/// Accepts spaces and/or commas; letters must lie in [0, rank_affine).
Word parse_word(const std::string& s, int rank_affine);

std::string format_mask(const Mask& mask);
Mask parse_mask(const std::string& s);

/// Linear-form syntax like "a1+a2+2*d" or "-a1+2*d".
std::string format_root(const CartanDatum& datum, const AffineRoot& beta,
                        Basis basis = Basis::kDelta);
AffineRoot parse_root(const CartanDatum& datum, const std::string& s);

/// Factored form "(a1+a2)*(a1+a2+d)" when a complete factorization into
/// positive affine roots exists, expanded graded-descending form otherwise.
/// parse accepts both forms (grammar: +, -, *, ^, parentheses, rationals).
std::string format_polynomial(const CartanDatum& datum,
                              const RootPolynomial& p,
                              Basis basis = Basis::kDelta);
RootPolynomial parse_polynomial(const CartanDatum& datum, const std::string& s,
                                Basis basis = Basis::kDelta);

/// Single-variable integer polynomials in q, like "q^2-2*q+1".
std::string format_count_polynomial(const CountPolynomial& p);
CountPolynomial parse_count_polynomial(const std::string& s);

}  // namespace alcove

#endif
