#ifndef GAUGEMOD_RATIONAL_HPP
#define GAUGEMOD_RATIONAL_HPP

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace gaugemod {

/// Exact rational scalar. GMP keeps every value canonical (gcd 1, positive denominator).
using Rational = mpq_class;

/// Base class for all library errors.
class Error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Operands live in different rings, or a context (chart, module) does not match.
class MismatchError : public Error {
public:
  using Error::Error;
};

/// A total degree or combinatorial size exceeded its configured cap.
class BudgetError : public Error {
public:
  using Error::Error;
};

inline Rational make_rational(long num, long den = 1) {
  if (den == 0) throw Error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

/// Parses "a" or "a/b" (optional leading sign).
inline Rational parse_rational(const std::string& text) {
  Rational r;
  if (r.set_str(text, 10) != 0) throw Error("malformed rational literal '" + text + "'");
  if (r.get_den() == 0) throw Error("rational with zero denominator '" + text + "'");
  r.canonicalize();
  return r;
}

inline std::string to_string(const Rational& r) { return r.get_str(); }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

} // namespace gaugemod

#endif
