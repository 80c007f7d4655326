#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <sstream>
#include <string>
#include <vector>

#include "cousin/errors.hpp"

namespace cousin {

// Exact arithmetic everywhere: arbitrary-precision integers and rationals.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

// A vector with exact rational entries.  Weights, coweights, slope vectors
// and cocharacter valuations are all plain rational vectors; the semantic
// distinction lives in the functions that consume them.
using Vec = std::vector<Rat>;

inline Int numerator(const Rat& q) { return boost::multiprecision::numerator(q); }
inline Int denominator(const Rat& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rat& q) { return denominator(q) == 1; }

inline Rat rat(long long n, long long d = 1) { return Rat(Int(n), Int(d)); }

inline void check_same_dim(const Vec& a, const Vec& b, const char* module,
                           const char* op) {
  if (a.size() != b.size()) {
    fail_precondition(module, op,
                      "dimension mismatch: " + std::to_string(a.size()) +
                          " vs " + std::to_string(b.size()));
  }
}

inline Vec zero_vec(std::size_t n) { return Vec(n, Rat(0)); }

inline Vec operator+(const Vec& a, const Vec& b) {
  check_same_dim(a, b, "root_datum", "vector_add");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

inline Vec operator-(const Vec& a, const Vec& b) {
  check_same_dim(a, b, "root_datum", "vector_sub");
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] - b[i];
  return out;
}

inline Vec operator-(const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return out;
}

inline Vec operator*(const Rat& c, const Vec& a) {
  Vec out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = c * a[i];
  return out;
}

inline bool is_zero(const Vec& a) {
  for (const Rat& x : a)
    if (x != 0) return false;
  return true;
}

// Exact bilinear pairing: the standard dot product between a weight and a
// covector expressed in the same ambient coordinates.
inline Rat dot(const Vec& a, const Vec& b) {
  check_same_dim(a, b, "root_datum", "pairing");
  Rat out(0);
  for (std::size_t i = 0; i < a.size(); ++i) out += a[i] * b[i];
  return out;
}

inline std::string to_string(const Rat& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

inline std::string to_string(const Vec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += to_string(v[i]);
  }
  out += ")";
  return out;
}

// Parses "a/b" or "a" into an exact rational.
inline Rat parse_rat(const std::string& text) {
  std::string s = text;
  // Trim surrounding whitespace.
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) {
    fail_config("cli", "parse_rat", "empty rational literal");
  }
  s = s.substr(first, last - first + 1);
  const auto slash = s.find('/');
  try {
    if (slash == std::string::npos) {
      return Rat(Int(s));
    }
    Int n(s.substr(0, slash));
    Int d(s.substr(slash + 1));
    if (d == 0) fail_config("cli", "parse_rat", "zero denominator in '" + text + "'");
    return Rat(n, d);
  } catch (const Error&) {
    throw;
  } catch (const std::exception&) {
    fail_config("cli", "parse_rat", "cannot parse rational literal '" + text + "'");
  }
}

// Parses "5,3,-8" (entries may be rationals "1/2") into a vector.
inline Vec parse_vec(const std::string& text) {
  Vec out;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, ',')) out.push_back(parse_rat(item));
  if (out.empty()) fail_config("cli", "parse_vec", "empty vector literal");
  return out;
}

}  // namespace cousin
