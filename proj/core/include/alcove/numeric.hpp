#ifndef ALCOVE_NUMERIC_HPP
#define ALCOVE_NUMERIC_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace alcove {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Base class for all domain errors raised by the library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Invalid Cartan data (bad diagonal, sign pattern, corank, ...).
struct ValidationError : Error {
  using Error::Error;
};

/// Two values built over different Cartan data were combined.
struct DatumMismatch : Error {
  using Error::Error;
};

inline long long exact_div(long long a, long long b) {
  if (b == 0 || a % b != 0) {
    throw Error("exact_div: " + std::to_string(a) + " not divisible by " +
                std::to_string(b));
  }
  return a / b;
}

}  // namespace alcove

#endif
