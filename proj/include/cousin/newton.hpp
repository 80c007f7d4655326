#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>
#include <vector>

#include "cousin/errors.hpp"
#include "cousin/linalg.hpp"
#include "cousin/rational.hpp"

namespace cousin {

// p-adic valuation on exact rationals, with a bit-size guard so pathological
// inputs fail fast instead of looping on enormous integers.
struct PValuation {
  long long p = 2;
  long long max_bits = 1000000;

  explicit PValuation(long long prime, long long bits = 1000000)
      : p(prime), max_bits(bits) {
    if (p < 2) fail_config("newton", "valuation", "p must be at least 2");
    for (long long q = 2; q * q <= p; ++q)
      if (p % q == 0)
        fail_config("newton", "valuation",
                    std::to_string(p) + " is not prime");
    if (max_bits < 1) fail_config("newton", "valuation", "max_bits must be positive");
  }

  // Valuation of a nonzero rational; nullopt encodes +infinity (input 0).
  std::optional<long long> operator()(const Rat& x) const {
    if (x == 0) return std::nullopt;
    Int num = boost::multiprecision::abs(numerator(x));
    Int den = denominator(x);
    if (static_cast<long long>(boost::multiprecision::msb(num)) >= max_bits ||
        static_cast<long long>(boost::multiprecision::msb(den)) >= max_bits)
      fail_resource("newton", "valuation",
                    "input exceeds the configured bit bound");
    return integer_valuation(num) - integer_valuation(den);
  }

  long long integer_valuation(Int n) const {
    long long v = 0;
    while (n % p == 0) {
      n /= p;
      ++v;
    }
    return v;
  }
};

struct NewtonSegment {
  Rat slope;
  int length = 0;  // horizontal span; the number of roots of valuation -slope
};

struct NewtonPolygon {
  int ord = 0;     // lowest exponent with nonzero coefficient
  int degree = 0;  // highest exponent with nonzero coefficient
  std::vector<std::pair<int, long long>> points;  // (exponent, valuation)
  std::vector<std::pair<int, long long>> hull;    // lower-hull vertices
  std::vector<NewtonSegment> segments;            // strictly increasing slopes
};

// Lower convex hull of the valuation points of a polynomial, coefficients
// given in ascending degree order.
inline NewtonPolygon newton_polygon(const PValuation& val,
                                    const std::vector<Rat>& coeffs) {
  NewtonPolygon poly;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    auto v = val(coeffs[i]);
    if (v) poly.points.emplace_back(static_cast<int>(i), *v);
  }
  if (poly.points.empty())
    fail_precondition("newton", "polygon", "polynomial is zero");
  poly.ord = poly.points.front().first;
  poly.degree = poly.points.back().first;

  for (const auto& pt : poly.points) {
    while (poly.hull.size() >= 2) {
      const auto& a = poly.hull[poly.hull.size() - 2];
      const auto& b = poly.hull.back();
      // Keep b only if it lies strictly below the line from a to pt.
      const long long cross =
          (static_cast<long long>(b.first - a.first)) * (pt.second - a.second) -
          (b.second - a.second) * (static_cast<long long>(pt.first - a.first));
      if (cross > 0) break;
      poly.hull.pop_back();
    }
    poly.hull.push_back(pt);
  }
  for (std::size_t i = 0; i + 1 < poly.hull.size(); ++i) {
    const auto& a = poly.hull[i];
    const auto& b = poly.hull[i + 1];
    poly.segments.push_back(
        {Rat(b.second - a.second, b.first - a.first), b.first - a.first});
  }
  return poly;
}

// Valuations of the nonzero roots (in an algebraic closure): -slope with
// multiplicity the segment length, listed with decreasing valuation.
inline std::vector<std::pair<Rat, int>> root_valuations(const NewtonPolygon& poly) {
  std::vector<std::pair<Rat, int>> out;
  for (const auto& seg : poly.segments) out.emplace_back(-seg.slope, seg.length);
  return out;
}

// True when every root valuation is at least -h, i.e. every segment slope is
// at most h.
inline bool is_slope_leq_h(const NewtonPolygon& poly, const Rat& h) {
  for (const auto& seg : poly.segments)
    if (seg.slope > h) return false;
  return true;
}

// Same predicate from coefficients (ascending degree).  Equivalently: every
// root of X^{deg Q} Q(1/X) has valuation at most h.  The polynomial must have
// a nonzero leading coefficient.
inline bool is_slope_leq_h(const PValuation& val, const std::vector<Rat>& coeffs,
                           const Rat& h) {
  if (coeffs.empty() || coeffs.back() == 0)
    fail_precondition("newton", "is_slope_leq_h",
                      "leading coefficient must be a nonzero rational");
  return is_slope_leq_h(newton_polygon(val, coeffs), h);
}

inline Rat matrix_trace(const Mat& m) {
  Rat out(0);
  for (std::size_t i = 0; i < m.size(); ++i) out += m[i][i];
  return out;
}

// Characteristic polynomial det(X*I - A), ascending coefficients, computed by
// the trace recursion (Faddeev-LeVerrier).
inline std::vector<Rat> char_poly(const Mat& a) {
  const int n = static_cast<int>(a.size());
  if (n == 0) fail_config("newton", "char_poly", "matrix is empty");
  for (const auto& row : a)
    if (static_cast<int>(row.size()) != n)
      fail_config("newton", "char_poly", "matrix is not square");
  std::vector<Rat> coeffs(n + 1, Rat(0));
  coeffs[n] = 1;
  Mat m = a;
  for (int k = 1; k <= n; ++k) {
    Rat ck = -matrix_trace(m) / k;
    coeffs[n - k] = ck;
    if (k < n) {
      for (int i = 0; i < n; ++i) m[i][i] += ck;
      m = mat_mul(a, m);
    }
  }
  return coeffs;
}

// Total multiplicity of eigenvalues with valuation at most h; eigenvalue 0
// (valuation +infinity) never counts.
inline int h_slope_dimension(const PValuation& val, const Mat& a, const Rat& h) {
  NewtonPolygon poly = newton_polygon(val, char_poly(a));
  int out = 0;
  for (const auto& seg : poly.segments)
    if (seg.slope >= -h) out += seg.length;
  return out;
}

}  // namespace cousin
