#pragma once

#include <algorithm>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cousin/errors.hpp"
#include "cousin/root_datum.hpp"
#include "cousin/weyl.hpp"

namespace cousin {

// A formal character truncated below an anchor weight.  Keys are the
// simple-basis coordinates of (anchor - weight): vectors of nonnegative
// integers whose total (the height of the drop) is at most `depth`.  All
// weights within that height of the anchor have exact stored multiplicity;
// nothing is known beyond the truncation depth.
struct FormalCharacter {
  Vec anchor;
  int depth = 0;
  std::map<std::vector<int>, long long> coeffs;
};

inline int key_height(const std::vector<int>& key) {
  int h = 0;
  for (int x : key) h += x;
  return h;
}

inline std::vector<int> add_keys(const std::vector<int>& a,
                                 const std::vector<int>& b) {
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return out;
}

// Integer simple-basis coordinates of v, when v lies in the root lattice.
inline std::optional<std::vector<int>> integral_simple_coords(
    const RootDatum& datum, const Vec& v) {
  auto span = datum.cone_absolute.span_coordinates(v);
  if (!span) return std::nullopt;
  std::vector<int> out(datum.rank(), 0);
  for (int i = 0; i < datum.rank(); ++i) {
    if (!is_integer((*span)[i])) return std::nullopt;
    out[i] = static_cast<int>(numerator((*span)[i]));
  }
  return out;
}

inline Vec weight_of_key(const RootDatum& datum, const FormalCharacter& chr,
                         const std::vector<int>& key) {
  Vec w = chr.anchor;
  for (int i = 0; i < datum.rank(); ++i)
    if (key[i] != 0) w = w - Rat(key[i]) * datum.simple_roots[i];
  return w;
}

// Character of the highest-weight module freely generated over the negative
// roots: the product over positive roots of truncated geometric series
// 1 + e^{-beta} + e^{-2 beta} + ...
inline FormalCharacter verma_character(const RootDatum& datum, const Vec& lambda,
                                       int depth) {
  if (depth < 0)
    fail_config("char_ring", "verma_character", "depth must be nonnegative");
  if (static_cast<int>(lambda.size()) != datum.dim)
    fail_precondition("char_ring", "verma_character", "weight has wrong dimension");
  FormalCharacter chr;
  chr.anchor = lambda;
  chr.depth = depth;
  chr.coeffs[std::vector<int>(datum.rank(), 0)] = 1;
  for (std::size_t r = 0; r < datum.positive_roots.size(); ++r) {
    const std::vector<int>& step = datum.positive_coords[r];
    const int step_height = datum.positive_heights[r];
    // Accumulate the geometric series by ascending height, so each key picks
    // up every multiple of the current root exactly once.
    std::vector<std::vector<std::vector<int>>> buckets(depth + 1);
    for (const auto& [key, coeff] : chr.coeffs) buckets[key_height(key)].push_back(key);
    for (int h = 0; h + step_height <= depth; ++h) {
      for (std::size_t at = 0; at < buckets[h].size(); ++at) {
        const std::vector<int> key = buckets[h][at];
        std::vector<int> next = add_keys(key, step);
        auto [it, inserted] = chr.coeffs.try_emplace(next, 0);
        if (inserted) buckets[h + step_height].push_back(next);
        it->second += chr.coeffs[key];
      }
    }
  }
  return chr;
}

// Finite-dimensional character with highest weight lambda (dominant with
// integral coroot pairings), truncated at `depth`: the alternating sum over
// the Weyl group of shifted-action Verma characters.
inline FormalCharacter weyl_character(const RootDatum& datum,
                                      const WeylGroup& weyl, const Vec& lambda,
                                      int depth) {
  if (depth < 0)
    fail_config("char_ring", "weyl_character", "depth must be nonnegative");
  for (int i = 0; i < datum.rank(); ++i) {
    Rat c = dot(lambda, datum.simple_coroots[i]);
    if (c < 0 || !is_integer(c))
      fail_precondition("char_ring", "weyl_character",
                        "weight must pair to a nonnegative integer with every "
                        "simple coroot");
  }
  FormalCharacter out;
  out.anchor = lambda;
  out.depth = depth;
  for (int w = 0; w < weyl.size(); ++w) {
    Vec mu = weyl.dot(w, lambda);
    auto shift = integral_simple_coords(datum, lambda - mu);
    if (!shift)
      fail_precondition("char_ring", "weyl_character",
                        "orbit weight does not differ by a root-lattice vector");
    const int shift_height = key_height(*shift);
    if (shift_height > depth) continue;
    FormalCharacter term = verma_character(datum, mu, depth - shift_height);
    const long long sign = (weyl.length(w) % 2 == 0) ? 1 : -1;
    for (const auto& [key, coeff] : term.coeffs)
      out.coeffs[add_keys(key, *shift)] += sign * coeff;
  }
  for (auto it = out.coeffs.begin(); it != out.coeffs.end();)
    it = (it->second == 0) ? out.coeffs.erase(it) : std::next(it);
  return out;
}

// Re-expresses a character relative to a new anchor.  The new anchor must
// differ by a root-lattice vector and must lie above the support; entries
// falling beyond the new depth are dropped, and the new depth must not claim
// heights the source never computed.
inline FormalCharacter reanchor(const RootDatum& datum, const FormalCharacter& chr,
                                const Vec& new_anchor, int new_depth) {
  auto shift = integral_simple_coords(datum, new_anchor - chr.anchor);
  if (!shift)
    fail_precondition("char_ring", "reanchor",
                      "anchor difference is not in the root lattice");
  if (new_depth > key_height(*shift) + chr.depth)
    fail_precondition("char_ring", "reanchor",
                      "target depth exceeds the information in the source");
  FormalCharacter out;
  out.anchor = new_anchor;
  out.depth = new_depth;
  for (const auto& [key, coeff] : chr.coeffs) {
    if (coeff == 0) continue;
    std::vector<int> next = add_keys(key, *shift);
    for (int x : next)
      if (x < 0)
        fail_precondition("char_ring", "reanchor",
                          "support lies above the new anchor");
    if (key_height(next) > new_depth) continue;
    out.coeffs[next] += coeff;
  }
  return out;
}

// a += scale * b; the anchors must agree, and the result is truncated to the
// smaller depth.
inline void add_scaled(FormalCharacter& a, const FormalCharacter& b,
                       long long scale) {
  if (a.anchor != b.anchor)
    fail_precondition("char_ring", "add_scaled", "anchors differ");
  a.depth = std::min(a.depth, b.depth);
  for (const auto& [key, coeff] : b.coeffs) {
    if (key_height(key) > a.depth) continue;
    a.coeffs[key] += scale * coeff;
  }
  for (auto it = a.coeffs.begin(); it != a.coeffs.end();)
    it = (it->second == 0 || key_height(it->first) > a.depth)
             ? a.coeffs.erase(it)
             : std::next(it);
}

inline long long coefficient(const RootDatum& datum, const FormalCharacter& chr,
                             const Vec& weight) {
  auto key = integral_simple_coords(datum, chr.anchor - weight);
  if (!key) return 0;
  for (int x : *key)
    if (x < 0) return 0;
  if (key_height(*key) > chr.depth)
    fail_precondition("char_ring", "coefficient",
                      "weight lies beyond the truncation depth");
  auto it = chr.coeffs.find(*key);
  return it == chr.coeffs.end() ? 0 : it->second;
}

// Nonzero entries as (weight, multiplicity), sorted by drop height and then
// by simple-basis coordinates.
inline std::vector<std::pair<Vec, long long>> character_entries(
    const RootDatum& datum, const FormalCharacter& chr) {
  std::vector<std::pair<std::vector<int>, long long>> keyed;
  for (const auto& [key, coeff] : chr.coeffs)
    if (coeff != 0) keyed.emplace_back(key, coeff);
  std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
    const int ha = key_height(a.first), hb = key_height(b.first);
    if (ha != hb) return ha < hb;
    return a.first < b.first;
  });
  std::vector<std::pair<Vec, long long>> out;
  out.reserve(keyed.size());
  for (const auto& [key, coeff] : keyed)
    out.emplace_back(weight_of_key(datum, chr, key), coeff);
  return out;
}

inline bool same_character(const FormalCharacter& a, const FormalCharacter& b) {
  if (a.anchor != b.anchor || a.depth != b.depth) return false;
  auto clean = [](const FormalCharacter& chr) {
    std::map<std::vector<int>, long long> out;
    for (const auto& [key, coeff] : chr.coeffs)
      if (coeff != 0) out[key] = coeff;
    return out;
  };
  return clean(a) == clean(b);
}

// Product over positive coroots of <lambda + rho, beta^vee> / <rho, beta^vee>.
inline Rat weyl_dimension(const RootDatum& datum, const Vec& lambda) {
  for (int i = 0; i < datum.rank(); ++i)
    if (!is_integer(dot(lambda, datum.simple_coroots[i])))
      fail_precondition("char_ring", "weyl_dimension",
                        "weight must pair integrally with the simple coroots");
  Rat out(1);
  const Vec shifted = lambda + datum.rho;
  for (const Vec& coroot : datum.positive_coroots)
    out *= dot(shifted, coroot) / dot(datum.rho, coroot);
  return out;
}

// Partial order: a <= b iff b - a is a nonnegative rational combination of the
// simple roots.  Vectors differing in the central directions are incomparable.
inline bool leq_absolute(const RootDatum& datum, const Vec& a, const Vec& b) {
  check_same_dim(a, b, "char_ring", "leq_absolute");
  return datum.cone_absolute.contains(b - a);
}

// Same order after restriction to the split part: both inputs must already be
// gamma-invariant, and the cone is spanned by the restricted simple roots.
inline bool leq_split(const RootDatum& datum, const Vec& a, const Vec& b) {
  check_same_dim(a, b, "char_ring", "leq_split");
  if (!is_gamma_invariant(datum, a) || !is_gamma_invariant(datum, b))
    fail_precondition("char_ring", "leq_split",
                      "inputs must be invariant under the coordinate symmetry");
  return datum.cone_split.contains(b - a);
}

}  // namespace cousin
