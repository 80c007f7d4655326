#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "cousin/errors.hpp"
#include "cousin/rational.hpp"

namespace cousin {

// Dense exact-rational matrix, stored as rows.
using Mat = std::vector<Vec>;

inline Mat identity_matrix(std::size_t n) {
  Mat m(n, zero_vec(n));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

inline Vec mat_vec(const Mat& m, const Vec& v) {
  Vec out(m.size(), Rat(0));
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = dot(m[i], v);
  return out;
}

inline Mat mat_mul(const Mat& a, const Mat& b) {
  const std::size_t n = a.size();
  const std::size_t k = b.size();
  const std::size_t p = k == 0 ? 0 : b[0].size();
  Mat out(n, zero_vec(p));
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].size() != k)
      fail_precondition("root_datum", "mat_mul", "incompatible shapes");
    for (std::size_t t = 0; t < k; ++t) {
      if (a[i][t] == 0) continue;
      for (std::size_t j = 0; j < p; ++j) out[i][j] += a[i][t] * b[t][j];
    }
  }
  return out;
}

inline Mat transpose(const Mat& m) {
  if (m.empty()) return {};
  Mat out(m[0].size(), zero_vec(m.size()));
  for (std::size_t i = 0; i < m.size(); ++i)
    for (std::size_t j = 0; j < m[i].size(); ++j) out[j][i] = m[i][j];
  return out;
}

// Gauss-Jordan inverse; nullopt when singular.
inline std::optional<Mat> try_inverse(Mat m) {
  const std::size_t n = m.size();
  Mat inv = identity_matrix(n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && m[pivot][col] == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(m[pivot], m[col]);
    std::swap(inv[pivot], inv[col]);
    const Rat lead = m[col][col];
    for (std::size_t j = 0; j < n; ++j) {
      m[col][j] /= lead;
      inv[col][j] /= lead;
    }
    for (std::size_t row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rat factor = m[row][col];
      for (std::size_t j = 0; j < n; ++j) {
        m[row][j] -= factor * m[col][j];
        inv[row][j] -= factor * inv[col][j];
      }
    }
  }
  return inv;
}

// Decides membership of a vector in the nonnegative rational cone spanned by a
// fixed linearly independent family of generators, and computes the exact
// coordinates when the vector lies in their linear span.
//
// Given the generator matrix G (columns = generators), the solver precomputes
// S = (G^t G)^{-1} G^t.  For a query r the candidate coordinates are c = S r,
// and r lies in the span iff G c == r.  A fast signed 64-bit path handles the
// common case of integer generators and integer queries.
class ConeSolver {
 public:
  ConeSolver() = default;

  ConeSolver(std::vector<Vec> generators, std::size_t dim)
      : dim_(dim), generators_(std::move(generators)) {
    const std::size_t m = generators_.size();
    for (const Vec& g : generators_) {
      if (g.size() != dim_)
        fail_precondition("root_datum", "cone_solver", "generator dimension mismatch");
    }
    if (m == 0) return;
    // G as rows of its transpose: gt[j] = generator j.
    Mat gt = generators_;           // m x dim
    Mat g = transpose(gt);          // dim x m
    Mat gram = mat_mul(gt, g);      // m x m
    auto gram_inv = try_inverse(gram);
    if (!gram_inv) {
      fail_precondition("root_datum", "cone_solver",
                        "cone generators are linearly dependent");
    }
    solve_ = mat_mul(*gram_inv, gt);  // m x dim
    g_ = std::move(g);
    build_fast_path();
  }

  std::size_t generator_count() const { return generators_.size(); }
  const std::vector<Vec>& generators() const { return generators_; }

  // Coordinates of `target` in the span of the generators, or nullopt when the
  // target has a component outside the span.
  std::optional<std::vector<Rat>> span_coordinates(const Vec& target) const {
    if (target.size() != dim_)
      fail_precondition("root_datum", "cone_solver", "query dimension mismatch");
    if (generators_.empty()) {
      if (is_zero(target)) return std::vector<Rat>{};
      return std::nullopt;
    }
    std::vector<Rat> c = mat_vec(solve_, target);
    // Verify G c == target.
    Vec back = mat_vec(g_, Vec(c.begin(), c.end()));
    for (std::size_t i = 0; i < dim_; ++i)
      if (back[i] != target[i]) return std::nullopt;
    return c;
  }

  // True iff target = sum c_j * generator_j with all c_j >= 0 (rational cone).
  bool contains(const Vec& target) const {
    auto c = span_coordinates(target);
    if (!c) return false;
    for (const Rat& x : *c)
      if (x < 0) return false;
    return true;
  }

  // Fast variant for integral queries; falls back to exact rationals when the
  // fast path is unavailable.  `target` must have size dim.
  bool contains_int(const std::vector<long long>& target) const {
    if (!fast_ok_) {
      Vec t(target.size());
      for (std::size_t i = 0; i < target.size(); ++i) t[i] = Rat(target[i]);
      return contains(t);
    }
    if (target.size() != dim_)
      fail_precondition("root_datum", "cone_solver", "query dimension mismatch");
    const std::size_t m = generators_.size();
    if (m == 0) {
      for (long long x : target)
        if (x != 0) return false;
      return true;
    }
    // c_scaled = Snum * target  (true coordinates are c_scaled / D, D > 0).
    long long c_scaled[kMaxFast];
    for (std::size_t j = 0; j < m; ++j) {
      long long acc = 0;
      const auto& row = snum_[j];
      for (std::size_t i = 0; i < dim_; ++i) acc += row[i] * target[i];
      if (acc < 0) return false;
      c_scaled[j] = acc;
    }
    // Verify Gint * c_scaled == D * target.
    for (std::size_t i = 0; i < dim_; ++i) {
      long long acc = 0;
      const auto& row = gint_rows_[i];
      for (std::size_t j = 0; j < m; ++j) acc += row[j] * c_scaled[j];
      if (acc != denom_ * target[i]) return false;
    }
    return true;
  }

  bool fast_path_available() const { return fast_ok_; }

 private:
  static constexpr std::size_t kMaxFast = 16;

  void build_fast_path() {
    fast_ok_ = false;
    const std::size_t m = generators_.size();
    if (m == 0 || m > kMaxFast || dim_ > kMaxFast) return;
    // Generators must be integral and small.
    gint_rows_.assign(dim_, std::vector<long long>(m, 0));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < dim_; ++i) {
        const Rat& x = generators_[j][i];
        if (!is_integer(x)) return;
        Int n = numerator(x);
        if (n > 1000 || n < -1000) return;
        gint_rows_[i][j] = static_cast<long long>(n);
      }
    }
    // Common positive denominator of the solve matrix.
    Int d(1);
    for (const Vec& row : solve_)
      for (const Rat& x : row) d = boost::multiprecision::lcm(d, denominator(x));
    if (d > 100000) return;
    const long long dll = static_cast<long long>(d);
    snum_.assign(m, std::vector<long long>(dim_, 0));
    for (std::size_t j = 0; j < m; ++j) {
      for (std::size_t i = 0; i < dim_; ++i) {
        Rat scaled = solve_[j][i] * Rat(d);
        Int n = numerator(scaled);
        if (n > 10000000 || n < -10000000) return;
        snum_[j][i] = static_cast<long long>(n);
      }
    }
    denom_ = dll;
    fast_ok_ = true;
  }

  std::size_t dim_ = 0;
  std::vector<Vec> generators_;
  Mat solve_;  // m x dim
  Mat g_;      // dim x m
  bool fast_ok_ = false;
  long long denom_ = 1;
  std::vector<std::vector<long long>> snum_;       // m x dim
  std::vector<std::vector<long long>> gint_rows_;  // dim x m
};

}  // namespace cousin
