#pragma once

// Independent reference implementations ("oracles") used only by the test
// suites: deliberately naive recomputations of quantities the library
// computes by smarter routes.

#include <algorithm>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "cousin/char_ring.hpp"
#include "cousin/cousin_complex.hpp"
#include "cousin/root_datum.hpp"
#include "cousin/slope_calc.hpp"
#include "cousin/weyl.hpp"

namespace cousin {

// ---------------------------------------------------------------------------
// Kostant partition counting by direct enumeration.
// ---------------------------------------------------------------------------

// Number of ways to write the vector with the given simple-basis coordinates
// as a sum of positive roots (with repetition, order ignored).
class KostantCounter {
 public:
  explicit KostantCounter(const RootDatum& datum) : datum_(&datum) {}

  long long count(const std::vector<int>& key) { return count_from(key, 0); }

 private:
  long long count_from(const std::vector<int>& key, int root_at) {
    if (std::all_of(key.begin(), key.end(), [](int x) { return x == 0; }))
      return 1;
    if (root_at >= static_cast<int>(datum_->positive_roots.size())) return 0;
    auto memo_key = std::make_pair(key, root_at);
    auto it = memo_.find(memo_key);
    if (it != memo_.end()) return it->second;
    long long total = 0;
    std::vector<int> rest = key;
    for (;;) {
      total += count_from(rest, root_at + 1);
      bool ok = true;
      for (int i = 0; i < static_cast<int>(rest.size()); ++i) {
        rest[i] -= datum_->positive_coords[root_at][i];
        if (rest[i] < 0) ok = false;
      }
      if (!ok) break;
    }
    memo_[memo_key] = total;
    return total;
  }

  const RootDatum* datum_;
  std::map<std::pair<std::vector<int>, int>, long long> memo_;
};

// ---------------------------------------------------------------------------
// Bruhat order by reflection closure.
// ---------------------------------------------------------------------------

// u <= w iff w is reachable from u by repeatedly multiplying by reflections
// while strictly increasing length.
class BruhatOracle {
 public:
  BruhatOracle(const RootDatum& datum, const WeylGroup& weyl) {
    const int n = weyl.size();
    std::vector<int> reflections;
    for (std::size_t r = 0; r < datum.positive_roots.size(); ++r)
      reflections.push_back(weyl.reflection(static_cast<int>(r)));
    leq_.assign(n, std::vector<bool>(n, false));
    for (int u = 0; u < n; ++u) {
      std::vector<int> queue{u};
      leq_[u][u] = true;
      for (std::size_t head = 0; head < queue.size(); ++head) {
        const int v = queue[head];
        for (int t : reflections) {
          const int next = weyl.multiply(t, v);
          if (weyl.length(next) > weyl.length(v) && !leq_[u][next]) {
            leq_[u][next] = true;
            queue.push_back(next);
          }
        }
      }
    }
  }

  bool leq(int u, int w) const { return leq_[u][w]; }

 private:
  std::vector<std::vector<bool>> leq_;
};

// All reduced words of an element, by peeling left descents.
inline std::vector<std::vector<int>> all_reduced_words(const WeylGroup& weyl,
                                                       int w) {
  if (weyl.length(w) == 0) return {{}};
  std::vector<std::vector<int>> out;
  for (int i = 0; i < weyl.datum().rank(); ++i) {
    const int s = weyl.right_multiply(0, i);
    const int rest = weyl.multiply(s, w);
    if (weyl.length(rest) != weyl.length(w) - 1) continue;
    for (auto tail : all_reduced_words(weyl, rest)) {
      tail.insert(tail.begin(), i);
      out.push_back(std::move(tail));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Dominance scan oracle for the flag-cohomology degree.
// ---------------------------------------------------------------------------

// Locates the dominant chamber representative of the shifted orbit via the
// plain action, independently of the shifted-action scan.
inline std::optional<BwbResult> bwb_oracle(const RootDatum& datum,
                                           const WeylGroup& weyl,
                                           const Vec& kappa) {
  const Vec shifted = kappa + datum.rho;
  if (!is_regular(datum, shifted)) return std::nullopt;
  std::optional<int> found;
  for (int w = 0; w < weyl.size(); ++w) {
    Vec image = weyl.apply(w, shifted);
    bool strict = true;
    for (const Vec& covec : datum.simple_coroots)
      if (dot(image, covec) <= 0) strict = false;
    if (!strict) continue;
    if (found)
      fail_precondition("reference", "bwb_oracle", "two strictly dominant images");
    found = w;
  }
  if (!found)
    fail_precondition("reference", "bwb_oracle",
                      "regular orbit with no strictly dominant image");
  BwbResult out;
  out.w = *found;
  out.degree = weyl.length(*found);
  out.weight = weyl.apply(*found, shifted) - datum.rho;
  out.dimension = weyl_dimension(datum, out.weight);
  return out;
}

// ---------------------------------------------------------------------------
// Simple factors and the boundary simple roots.
// ---------------------------------------------------------------------------

// Simple roots lying in a simple factor not entirely contained in the Levi.
inline std::vector<int> delta_b(const RootDatum& datum, const LeviDatum& levi) {
  const int m = datum.rank();
  std::vector<int> component(m, -1);
  int next_component = 0;
  for (int start = 0; start < m; ++start) {
    if (component[start] >= 0) continue;
    std::vector<int> queue{start};
    component[start] = next_component;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (int j = 0; j < m; ++j) {
        if (component[j] >= 0) continue;
        if (dot(datum.simple_roots[queue[head]], datum.simple_coroots[j]) != 0) {
          component[j] = next_component;
          queue.push_back(j);
        }
      }
    }
    ++next_component;
  }
  std::vector<bool> in_theta(m, false);
  for (int i : levi.theta) in_theta[i] = true;
  std::vector<bool> full(next_component, true);
  for (int i = 0; i < m; ++i)
    if (!in_theta[i]) full[component[i]] = false;
  std::vector<int> out;
  for (int i = 0; i < m; ++i)
    if (!full[component[i]]) out.push_back(i);
  return out;
}

// ---------------------------------------------------------------------------
// Alternative formulations of the slope conditions.
// ---------------------------------------------------------------------------

inline bool geq_restricted(const RootDatum& datum, const Vec& lambda,
                           const Vec& bound_ambient) {
  return datum.cone_split.contains(lambda -
                                   restrict_to_split(datum, bound_ambient));
}

// Simple-reflection form of the plus condition on nu.
inline bool ss_simple_form(const RootDatum& datum, const WeylGroup& weyl,
                           const Vec& nu, const Vec& lambda) {
  for (int i = 0; i < datum.rank(); ++i) {
    const int s = weyl.right_multiply(0, i);
    Vec image = weyl.dot(s, nu);
    if (image == nu) continue;
    if (geq_restricted(datum, lambda, -image)) return false;
  }
  return true;
}

// Coefficient-bound form; only applicable when lambda dominates the
// restriction of -nu.
inline std::optional<bool> ss_coefficient_form(const RootDatum& datum,
                                               const WeylGroup& weyl,
                                               const Vec& nu, const Vec& lambda,
                                               const std::vector<bool>& allowed) {
  const Vec base = restrict_to_split(datum, -nu);
  auto coords = datum.cone_split.span_coordinates(lambda - base);
  if (!coords) return std::nullopt;
  for (const Rat& c : *coords)
    if (c < 0) return std::nullopt;
  for (std::size_t a = 0; a < datum.delta_restricted.size(); ++a) {
    std::optional<Rat> bound;
    for (int beta = 0; beta < datum.rank(); ++beta) {
      if (datum.restriction_map[beta] != static_cast<int>(a)) continue;
      if (!allowed[beta]) continue;
      Rat candidate = dot(nu, datum.simple_coroots[beta]) + 1;
      if (!bound || candidate < *bound) bound = candidate;
    }
    if (bound && !((*coords)[a] < *bound)) return false;
  }
  return true;
}

// allowed[i] for the plain condition: s_i does not fix nu.
inline std::vector<bool> allowed_simple_default(const RootDatum& datum,
                                                const WeylGroup& weyl,
                                                const Vec& nu) {
  std::vector<bool> out(datum.rank(), false);
  for (int i = 0; i < datum.rank(); ++i) {
    const int s = weyl.right_multiply(0, i);
    out[i] = weyl.dot(s, nu) != nu;
  }
  return out;
}

// The translated quantifier set for the kappa-side condition: inverses of
// minimal representatives times chamber elements.
struct TranslatedKappaData {
  Vec nu;                        // dominant-shift representative
  std::vector<bool> in_s;       // membership of each group element in the set
};

inline TranslatedKappaData translated_kappa_data(const RootDatum& datum,
                                                 const WeylGroup& weyl,
                                                 const LeviDatum& levi,
                                                 const Vec& kappa) {
  TranslatedKappaData out;
  const Vec target = -(kappa + datum.rho);
  std::optional<Vec> rep;
  for (int w = 0; w < weyl.size(); ++w) {
    Vec image = weyl.apply(w, target);
    if (is_dominant(datum, image)) {
      rep = image;
      break;
    }
  }
  if (!rep)
    fail_precondition("reference", "translated_kappa_data",
                      "orbit has no dominant representative");
  out.nu = *rep - datum.rho;
  out.in_s.assign(weyl.size(), false);
  std::vector<int> chamber = c_set(datum, weyl, levi, kappa, Sign::plus);
  for (int u : weyl.kostant(levi))
    for (int c : chamber) out.in_s[weyl.multiply(weyl.inverse(u), c)] = true;
  return out;
}

// Form (2): quantify over the translated set minus the shifted stabilizer.
inline bool ssnc_translated_form(const RootDatum& datum, const WeylGroup& weyl,
                                 const TranslatedKappaData& data,
                                 const Vec& lambda) {
  for (int w = 0; w < weyl.size(); ++w) {
    if (!data.in_s[w]) continue;
    Vec image = weyl.dot(w, data.nu);
    if (image == data.nu) continue;
    if (geq_restricted(datum, lambda, -image)) return false;
  }
  return true;
}

// Form (3): only the simple reflections inside the translated set.
inline bool ssnc_simple_form(const RootDatum& datum, const WeylGroup& weyl,
                             const TranslatedKappaData& data, const Vec& lambda) {
  for (int i = 0; i < datum.rank(); ++i) {
    const int s = weyl.right_multiply(0, i);
    if (!data.in_s[s]) continue;
    Vec image = weyl.dot(s, data.nu);
    if (image == data.nu) continue;
    if (geq_restricted(datum, lambda, -image)) return false;
  }
  return true;
}

inline std::vector<bool> allowed_simple_translated(const RootDatum& datum,
                                                   const WeylGroup& weyl,
                                                   const TranslatedKappaData& data) {
  std::vector<bool> out(datum.rank(), false);
  for (int i = 0; i < datum.rank(); ++i) {
    const int s = weyl.right_multiply(0, i);
    out[i] = data.in_s[s] && weyl.dot(s, data.nu) != data.nu;
  }
  return out;
}

// Conjugated forms of the parabolic condition at a fixed minimal
// representative.
inline bool ssc_conjugated_form(const RootDatum& datum, const WeylGroup& weyl,
                                const LeviDatum& levi, int w, const Vec& kappa,
                                const Vec& lambda, bool simple_only) {
  const int v = weyl.multiply(weyl.longest_levi(levi), w);
  const Vec nu = weyl.apply_inverse(v, -(kappa + datum.rho)) - datum.rho;
  std::vector<int> inner;
  if (simple_only) {
    for (int i : levi.theta) inner.push_back(weyl.right_multiply(0, i));
  } else {
    for (int wp : weyl.parabolic_elements(levi))
      if (wp != 0) inner.push_back(wp);
  }
  for (int wp : inner) {
    const int conj = weyl.multiply(weyl.multiply(weyl.inverse(v), wp), v);
    if (geq_restricted(datum, lambda, -weyl.dot(conj, nu))) return false;
  }
  return true;
}

// Boundary-simple-root form of the everywhere condition.
inline bool ssb_boundary_form(const RootDatum& datum, const WeylGroup& weyl,
                              const LeviDatum& levi, const Vec& nu,
                              const Vec& lambda) {
  for (int i : delta_b(datum, levi)) {
    const int s = weyl.right_multiply(0, i);
    if (geq_restricted(datum, lambda, -weyl.dot(s, nu))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Polynomial helpers for the valuation oracles.
// ---------------------------------------------------------------------------

inline std::vector<Rat> poly_mul(const std::vector<Rat>& a,
                                 const std::vector<Rat>& b) {
  std::vector<Rat> out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

// Monic polynomial with the given roots, ascending coefficients.
inline std::vector<Rat> poly_from_roots(const std::vector<Rat>& roots) {
  std::vector<Rat> out{Rat(1)};
  for (const Rat& r : roots) out = poly_mul(out, {-r, Rat(1)});
  return out;
}

}  // namespace cousin
