#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cousin/char_ring.hpp"
#include "cousin/errors.hpp"
#include "cousin/root_datum.hpp"
#include "cousin/slope_calc.hpp"
#include "cousin/weyl.hpp"

namespace cousin {

struct CousinTerm {
  int weyl_element = 0;
  std::string label;
  std::optional<Vec> weight;                  // highest-weight label
  std::optional<FormalCharacter> character;             // flag variant only
};

struct CousinDescriptor {
  std::string variant;  // "flag" or "shimura"
  Sign sign = Sign::plus;
  int d = 0;
  std::vector<std::vector<CousinTerm>> terms;  // indexed by degree 0..d
};

// Degree-wise shape of the filtration complex on the full flag variety: one
// term per group element, in degree d - length, carrying the truncated
// highest-weight-module character at the twisted-shifted weight.
inline CousinDescriptor flag_cousin(const RootDatum& datum, const WeylGroup& weyl,
                                    const Vec& kappa, int depth) {
  if (static_cast<int>(kappa.size()) != datum.dim)
    fail_precondition("cousin", "flag_cousin", "weight has wrong dimension");
  CousinDescriptor out;
  out.variant = "flag";
  out.sign = Sign::plus;
  out.d = static_cast<int>(datum.positive_roots.size());
  out.terms.assign(out.d + 1, {});
  for (int w = 0; w < weyl.size(); ++w) {
    const int twist = weyl.multiply(weyl.inverse(w), weyl.longest());
    CousinTerm term;
    term.weyl_element = w;
    term.label = weyl.name(w);
    term.weight = weyl.dot(twist, kappa);
    term.character = verma_character(datum, *term.weight, depth);
    out.terms[out.d - weyl.length(w)].push_back(std::move(term));
  }
  return out;
}

// The unique representative of the shifted orbit whose shift is dominant.
inline Vec dominant_dot_rep(const RootDatum& datum, const WeylGroup& weyl,
                            const Vec& v) {
  for (int w = 0; w < weyl.size(); ++w) {
    Vec candidate = weyl.dot(w, v);
    if (is_dominant(datum, candidate + datum.rho)) return candidate;
  }
  fail_precondition("cousin", "dominant_dot_rep",
                    "orbit has no representative with dominant shift");
}

// lambda is "big" for nu when it is not below any proper shifted reflection of
// nu; by the simple-reflection criterion it suffices to test the simple ones.
inline bool big_weight(const RootDatum& datum, const WeylGroup& weyl,
                       const Vec& lambda, const Vec& nu) {
  if (!is_dominant(datum, nu + datum.rho))
    fail_precondition("cousin", "big_weight", "shifted weight must be dominant");
  for (int i = 0; i < datum.rank(); ++i) {
    const int s = weyl.right_multiply(0, i);
    Vec image = weyl.dot(s, nu);
    if (image == nu) continue;
    if (leq_absolute(datum, lambda, image)) return false;
  }
  return true;
}

// Elements whose twisted-shifted weight is the dominant representative.
inline std::vector<int> flag_c_set(const RootDatum& datum, const WeylGroup& weyl,
                                   const Vec& kappa) {
  const Vec rep = dominant_dot_rep(datum, weyl, kappa);
  std::vector<int> out;
  for (int w = 0; w < weyl.size(); ++w) {
    const int twist = weyl.multiply(weyl.inverse(w), weyl.longest());
    if (weyl.dot(twist, kappa) == rep) out.push_back(w);
  }
  return out;
}

// Cohomological amplitude of the flag complex after big-weight localization.
inline std::pair<int, int> bw_amplitude(const RootDatum& datum,
                                        const WeylGroup& weyl, const Vec& kappa) {
  const int d = static_cast<int>(datum.positive_roots.size());
  std::vector<int> c = flag_c_set(datum, weyl, kappa);
  int lo = d - weyl.length(c.front()), hi = lo;
  for (int w : c) {
    lo = std::min(lo, d - weyl.length(w));
    hi = std::max(hi, d - weyl.length(w));
  }
  return {lo, hi};
}

struct BwbResult {
  int w = 0;
  int degree = 0;
  Vec weight;
  Rat dimension;
};

// Characteristic-zero line-bundle cohomology on the flag variety: locate the
// unique element whose shifted action lands in the dominant chamber.  Returns
// nothing exactly when the shifted weight lies on a wall.
inline std::optional<BwbResult> bwb(const RootDatum& datum, const WeylGroup& weyl,
                                    const Vec& kappa) {
  std::optional<BwbResult> out;
  for (int w = 0; w < weyl.size(); ++w) {
    Vec image = weyl.dot(w, kappa);
    if (!is_dominant(datum, image)) continue;
    if (out)
      fail_precondition("cousin", "bwb",
                        "multiple elements give a dominant shifted image");
    BwbResult result;
    result.w = w;
    result.degree = weyl.length(w);
    result.weight = image;
    result.dimension = weyl_dimension(datum, image);
    out = std::move(result);
  }
  return out;
}

// Degree-wise shape of the finite-slope complex: one term per minimal coset
// representative, in its plus/minus cohomological degree, labels only.
inline CousinDescriptor shimura_cousin_shape(const RootDatum& datum,
                                             const WeylGroup& weyl,
                                             const LeviDatum& levi,
                                             const Vec& kappa, Sign sign) {
  require_levi_dominant(datum, levi, kappa, "shimura_cousin_shape");
  CousinDescriptor out;
  out.variant = "shimura";
  out.sign = sign;
  out.d = levi.d;
  out.terms.assign(out.d + 1, {});
  for (int w : weyl.kostant(levi)) {
    CousinTerm term;
    term.weyl_element = w;
    term.label = weyl.name(w);
    const int degree = sign == Sign::plus ? weyl.ell_plus(w)
                                          : weyl.ell_minus(w, levi);
    out.terms[degree].push_back(std::move(term));
  }
  return out;
}

struct ClassicalRanges {
  std::pair<int, int> cuspidal;      // [0, ell_max]
  std::pair<int, int> non_cuspidal;  // [ell_min, d]
  std::pair<int, int> interior;      // [ell_min, ell_max]
};

inline ClassicalRanges classical_ranges(const RootDatum& datum,
                                        const WeylGroup& weyl,
                                        const LeviDatum& levi, const Vec& kappa) {
  auto [lo, hi] = ell_min_max(datum, weyl, levi, kappa);
  ClassicalRanges out;
  out.cuspidal = {0, hi};
  out.non_cuspidal = {lo, levi.d};
  out.interior = {lo, hi};
  return out;
}

}  // namespace cousin
