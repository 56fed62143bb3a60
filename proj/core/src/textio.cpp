#include "alcove/textio.hpp"

#include <cctype>
#include <sstream>

namespace alcove {

std::string format_rational(const Rational& r) {
  std::ostringstream out;
  out << numerator(r);
  if (denominator(r) != 1) out << '/' << denominator(r);
  return out.str();
}

Rational parse_rational(const std::string& s) {
  std::size_t a = s.find_first_not_of(" \t");
  std::size_t b = s.find_last_not_of(" \t");
  if (a == std::string::npos) throw Error("empty rational");
  try {
    return Rational(s.substr(a, b - a + 1));
  } catch (const std::exception&) {
    throw Error("bad rational: " + s);
  }
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t j = 0; j < word.size(); ++j) {
    if (j) out += ' ';
    out += std::to_string(word[j]);
  }
  return out;
}

Word parse_word(const std::string& s, int rank_affine) {
  Word out;
  std::string token;
  std::istringstream in(s);
  std::string normalized = s;
  for (char& c : normalized)
    if (c == ',') c = ' ';
  std::istringstream stream(normalized);
  while (stream >> token) {
    std::size_t used = 0;
    int letter;
    try {
      letter = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw Error("bad word letter: " + token);
    }
    if (used != token.size() || letter < 0 || letter >= rank_affine)
      throw Error("bad word letter: " + token);
    out.push_back(letter);
  }
  return out;
}

std::string format_mask(const Mask& mask) {
  std::string out;
  for (int bit : mask.bits) out += bit ? '1' : '0';
  return out;
}

Mask parse_mask(const std::string& s) {
  Mask out;
  for (char c : s) {
    if (std::isspace(static_cast<unsigned char>(c))) continue;
    if (c != '0' && c != '1') throw Error("bad mask digit: " + std::string(1, c));
    out.bits.push_back(c - '0');
  }
  return out;
}

namespace {

std::string var_name(int index, int nvars, Basis basis) {
  if (index == nvars - 1) return basis == Basis::kDelta ? "d" : "a0";
  return "a" + std::to_string(index + 1);
}

// Appends "+ c*mono" with the sign folded into the leading operator.
void append_term(std::string& out, const Rational& coeff,
                 const std::string& mono) {
  if (coeff == 0) return;
  Rational mag = coeff < 0 ? Rational(-coeff) : coeff;
  if (!out.empty())
    out += coeff < 0 ? '-' : '+';
  else if (coeff < 0)
    out += '-';
  if (mono.empty()) {
    out += format_rational(mag);
    return;
  }
  if (mag != 1) out += format_rational(mag) + "*";
  out += mono;
}

std::vector<Rational> root_coefficients(const CartanDatum& datum,
                                        const AffineRoot& beta, Basis basis) {
  int r = datum.rank_finite();
  std::vector<Rational> c(r + 1);
  for (int i = 0; i < r; ++i) {
    c[i] = beta.finite.coords[i];
    if (basis == Basis::kAlpha0)
      c[i] += beta.level * datum.highest_root().coords[i];
  }
  c[r] = beta.level;
  return c;
}

}  // namespace

std::string format_root(const CartanDatum& datum, const AffineRoot& beta,
                        Basis basis) {
  check_real_root(datum, beta);
  std::vector<Rational> c = root_coefficients(datum, beta, basis);
  int nvars = datum.rank_affine();
  std::string out;
  for (int i = 0; i < nvars; ++i)
    append_term(out, c[i], var_name(i, nvars, basis));
  return out;
}

std::string format_polynomial(const CartanDatum& datum,
                              const RootPolynomial& p, Basis basis) {
  if (p.is_zero()) return "0";
  if (p.is_constant())
    return format_rational(p.terms().begin()->second);
  if (auto fac = factor_into_roots(datum, p)) {
    if (fac->scalar == 1 && fac->factors.size() == 1)
      return format_root(datum, fac->factors[0], basis);
    std::string out;
    if (fac->scalar == -1)
      out = "-";
    else if (fac->scalar != 1)
      out = format_rational(fac->scalar) + "*";
    for (std::size_t j = 0; j < fac->factors.size(); ++j) {
      if (j) out += '*';
      out += "(" + format_root(datum, fac->factors[j], basis) + ")";
    }
    return out;
  }
  RootPolynomial q = basis == Basis::kAlpha0 ? to_alpha0_basis(p, datum) : p;
  std::string out;
  const auto& terms = q.terms();
  for (auto it = terms.rbegin(); it != terms.rend(); ++it) {
    std::string mono;
    for (int i = 0; i < q.nvars(); ++i) {
      int e = it->first[i];
      if (e == 0) continue;
      if (!mono.empty()) mono += '*';
      mono += var_name(i, q.nvars(), basis);
      if (e > 1) mono += "^" + std::to_string(e);
    }
    append_term(out, it->second, mono);
  }
  return out;
}

namespace {

// Recursive-descent parser for the printed polynomial grammar:
//   expr   := ['-'|'+'] term (('+'|'-') term)*
//   term   := factor (('*' factor) | parenthesized-factor)*
//   factor := base ('^' UINT)?
//   base   := RATIONAL | NAME | '(' expr ')'
class PolyParser {
 public:
  PolyParser(const std::string& s, int nvars, Basis basis, bool count_mode)
      : s_(s), nvars_(nvars), basis_(basis), count_mode_(count_mode) {}

  RootPolynomial run() {
    RootPolynomial out = expr();
    skip();
    if (pos_ != s_.size())
      throw Error("unexpected character in polynomial: " +
                  std::string(1, s_[pos_]));
    return out;
  }

 private:
  const std::string& s_;
  std::size_t pos_ = 0;
  int nvars_;
  Basis basis_;
  bool count_mode_;

  void skip() {
    while (pos_ < s_.size() &&
           std::isspace(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  RootPolynomial expr() {
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    RootPolynomial out = term();
    if (negate) out = -out;
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      RootPolynomial next = term();
      out = c == '+' ? out + next : out - next;
    }
    return out;
  }

  RootPolynomial term() {
    RootPolynomial out = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        out = out * factor();
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
        out = out * factor();
      } else {
        break;
      }
    }
    return out;
  }

  RootPolynomial factor() {
    RootPolynomial base_value = base();
    if (peek() != '^') return base_value;
    ++pos_;
    skip();
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) throw Error("missing exponent");
    int e = std::stoi(s_.substr(start, pos_ - start));
    RootPolynomial out = RootPolynomial::constant(nvars_, 1);
    for (int t = 0; t < e; ++t) out = out * base_value;
    return out;
  }

  RootPolynomial base() {
    char c = peek();
    if (c == '(') {
      ++pos_;
      RootPolynomial inner = expr();
      if (peek() != ')') throw Error("missing ')'");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) return number();
    return variable();
  }

  RootPolynomial number() {
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    Integer num(s_.substr(start, pos_ - start));
    Integer den = 1;
    if (peek() == '/') {
      ++pos_;
      skip();
      start = pos_;
      while (pos_ < s_.size() &&
             std::isdigit(static_cast<unsigned char>(s_[pos_])))
        ++pos_;
      if (pos_ == start) throw Error("missing denominator");
      den = Integer(s_.substr(start, pos_ - start));
    }
    return RootPolynomial::constant(nvars_, Rational(num, den));
  }

  RootPolynomial variable() {
    char c = peek();
    if (count_mode_) {
      if (c != 'q') throw Error("expected 'q'");
      ++pos_;
      return RootPolynomial::variable(1, 0);
    }
    if (c == 'd') {
      if (basis_ != Basis::kDelta) throw Error("'d' not valid in this basis");
      ++pos_;
      return RootPolynomial::variable(nvars_, nvars_ - 1);
    }
    if (c != 'a') throw Error("expected a variable name");
    ++pos_;
    std::size_t start = pos_;
    while (pos_ < s_.size() &&
           std::isdigit(static_cast<unsigned char>(s_[pos_])))
      ++pos_;
    if (pos_ == start) throw Error("missing variable index");
    int k = std::stoi(s_.substr(start, pos_ - start));
    if (k == 0) {
      if (basis_ != Basis::kAlpha0)
        throw Error("'a0' not valid in this basis");
      return RootPolynomial::variable(nvars_, nvars_ - 1);
    }
    if (k >= nvars_) throw Error("variable index out of range: a" +
                                 std::to_string(k));
    return RootPolynomial::variable(nvars_, k - 1);
  }
};

}  // namespace

RootPolynomial parse_polynomial(const CartanDatum& datum, const std::string& s,
                                Basis basis) {
  RootPolynomial p = PolyParser(s, datum.rank_affine(), basis, false).run();
  return basis == Basis::kAlpha0 ? from_alpha0_basis(p, datum) : p;
}

AffineRoot parse_root(const CartanDatum& datum, const std::string& s) {
  RootPolynomial p = parse_polynomial(datum, s);
  if (p.is_zero() || p.total_degree() != 1 || !p.is_homogeneous() ||
      !p.has_integer_coefficients())
    throw Error("not a root expression: " + s);
  int r = datum.rank_finite();
  AffineRoot beta;
  beta.finite.coords.assign(r, 0);
  for (const auto& [exps, coeff] : p.terms()) {
    for (int i = 0; i <= r; ++i) {
      if (exps[i] != 1) continue;
      long long c = static_cast<long long>(numerator(coeff));
      if (i == r)
        beta.level = c;
      else
        beta.finite.coords[i] = c;
    }
  }
  check_real_root(datum, beta);
  return beta;
}

std::string format_count_polynomial(const CountPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (int k = static_cast<int>(p.coeffs.size()) - 1; k >= 0; --k) {
    std::string mono;
    if (k == 1) mono = "q";
    if (k > 1) mono = "q^" + std::to_string(k);
    append_term(out, Rational(p.coeffs[k]), mono);
  }
  return out;
}

CountPolynomial parse_count_polynomial(const std::string& s) {
  RootPolynomial p = PolyParser(s, 1, Basis::kDelta, true).run();
  CountPolynomial out;
  if (!p.has_integer_coefficients())
    throw Error("non-integer coefficient in count polynomial");
  out.coeffs.assign(p.total_degree() + 1, 0);
  for (const auto& [exps, coeff] : p.terms())
    out.coeffs[exps[0]] = static_cast<long long>(numerator(coeff));
  out.normalize();
  return out;
}

}  // namespace alcove
