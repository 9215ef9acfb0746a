#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace qflag {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Input violates a structural invariant (quiver data, partitions, classes).
class ValidationError : public Error {
public:
  using Error::Error;
};

/// Text could not be parsed.
class ParseError : public Error {
public:
  using Error::Error;
};

inline std::string to_string(const Rational &r) { return r.get_str(); }
inline std::string to_string(const Integer &z) { return z.get_str(); }

inline int sign_of_power(long exponent) { return (exponent % 2 == 0) ? 1 : -1; }

} // namespace qflag
