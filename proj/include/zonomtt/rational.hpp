#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace zonomtt {

using Int = boost::multiprecision::cpp_int;
// Always stored in lowest terms with positive denominator.
using Rat = boost::multiprecision::cpp_rational;

inline Int num(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int den(const Rat& q) { return boost::multiprecision::denominator(q); }

inline bool is_integer(const Rat& q) { return den(q) == 1; }

inline Rat rat_abs(const Rat& q) { return q < 0 ? Rat(-q) : q; }
inline Int int_abs(const Int& n) { return n < 0 ? Int(-n) : n; }

inline int rat_sign(const Rat& q) { return q < 0 ? -1 : (q > 0 ? 1 : 0); }

/// Formats as `p/q`, or plain `p` when the denominator is 1.
inline std::string to_string(const Rat& q) {
  if (is_integer(q)) return num(q).str();
  return num(q).str() + "/" + den(q).str();
}

/// Parses a decimal integer or a `p/q` rational.
inline Rat parse_rat(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos) return Rat(Int(text));
    Int p(text.substr(0, slash));
    Int q(text.substr(slash + 1));
    if (q == 0) throw std::invalid_argument("zero denominator");
    return Rat(p, q);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational: '" + text + "'");
  }
}

inline double to_double(const Rat& q) { return q.convert_to<double>(); }

}  // namespace zonomtt
