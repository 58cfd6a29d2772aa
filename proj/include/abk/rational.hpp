#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <string>

namespace abk {

// Exact rational scalar used throughout the library.
using Rational = mpq_class;

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

// Parses "p/q" or "p" with optional sign; bit-exact round trip with rat_str.
inline Rational rat_parse(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational literal");
  Rational r;
  if (r.set_str(s, 10) != 0)
    throw std::invalid_argument("bad rational literal: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

struct SmoothnessError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct DivergenceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ParityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ContextError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct RepresentationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct SizeGuardError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace abk
