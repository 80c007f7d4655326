#pragma once

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cousin/char_ring.hpp"
#include "cousin/errors.hpp"
#include "cousin/root_datum.hpp"
#include "cousin/weyl.hpp"

namespace cousin {

enum class Sign { plus, minus };

inline const char* sign_name(Sign s) { return s == Sign::plus ? "+" : "-"; }

inline Sign parse_sign(const std::string& text) {
  if (text == "+" || text == "plus") return Sign::plus;
  if (text == "-" || text == "minus") return Sign::minus;
  fail_config("slope_calc", "parse_sign", "sign must be + or -");
}

// ---------------------------------------------------------------------------
// Cocharacter valuations.
// ---------------------------------------------------------------------------

enum class SignClass { t_plus_plus, t_plus, t_minus_minus, t_minus, none };

inline const char* sign_class_name(SignClass c) {
  switch (c) {
    case SignClass::t_plus_plus: return "T++";
    case SignClass::t_plus: return "T+";
    case SignClass::t_minus_minus: return "T--";
    case SignClass::t_minus: return "T-";
    default: return "none";
  }
}

// A valuation vector of a torus element: pairing with a root gives the
// valuation of the root character there.  The sign class records where the
// pairings with the positive roots sit; min/max range over the positive roots
// for the plus classes and over their negatives for the minus classes.
struct CocharacterValuation {
  Vec coords;
  SignClass sign_class = SignClass::none;
  std::optional<Rat> min_pairing;
  std::optional<Rat> max_pairing;
};

inline CocharacterValuation make_cocharacter_valuation(const RootDatum& datum,
                                                       Vec coords) {
  if (static_cast<int>(coords.size()) != datum.dim)
    fail_precondition("slope_calc", "cocharacter_valuation", "dimension mismatch");
  CocharacterValuation out;
  out.coords = std::move(coords);
  bool all_nonneg = true, all_pos = true, all_nonpos = true, all_neg = true;
  std::optional<Rat> lo, hi;
  for (const Vec& root : datum.positive_roots) {
    Rat v = dot(out.coords, root);
    if (v < 0) all_nonneg = false;
    if (v <= 0) all_pos = false;
    if (v > 0) all_nonpos = false;
    if (v >= 0) all_neg = false;
    if (!lo || v < *lo) lo = v;
    if (!hi || v > *hi) hi = v;
  }
  if (datum.positive_roots.empty()) {
    out.sign_class = SignClass::t_plus;
    return out;
  }
  if (all_pos) out.sign_class = SignClass::t_plus_plus;
  else if (all_neg) out.sign_class = SignClass::t_minus_minus;
  else if (all_nonneg) out.sign_class = SignClass::t_plus;
  else if (all_nonpos) out.sign_class = SignClass::t_minus;
  else out.sign_class = SignClass::none;
  if (all_nonneg) {
    out.min_pairing = lo;
    out.max_pairing = hi;
  } else if (all_nonpos) {
    // Range over the negative roots instead.
    out.min_pairing = -*hi;
    out.max_pairing = -*lo;
  }
  return out;
}

// ---------------------------------------------------------------------------
// The kappa <-> nu dictionary.
// ---------------------------------------------------------------------------

inline Vec nu_from_kappa(const RootDatum& datum, const WeylGroup& weyl,
                         const LeviDatum& levi, const Vec& kappa, int w,
                         Sign sign) {
  const int w0m = weyl.longest_levi(levi);
  const Vec shifted = kappa + datum.rho;
  if (sign == Sign::plus)
    return -weyl.apply_inverse(w, weyl.apply(w0m, shifted)) - datum.rho;
  return -weyl.apply(weyl.longest(), weyl.apply_inverse(w, shifted)) - datum.rho;
}

inline Vec kappa_from_nu(const RootDatum& datum, const WeylGroup& weyl,
                         const LeviDatum& levi, const Vec& nu, int w, Sign sign) {
  const int w0m = weyl.longest_levi(levi);
  const Vec shifted = nu + datum.rho;
  if (sign == Sign::plus)
    return -weyl.apply(w0m, weyl.apply(w, shifted)) - datum.rho;
  return -weyl.apply(w, weyl.apply(weyl.longest(), shifted)) - datum.rho;
}

// The dual weights appearing in the plus/minus symmetries.
inline Vec dual_nu(const RootDatum& datum, const WeylGroup& weyl, const Vec& nu) {
  return -weyl.apply(weyl.longest(), nu);
}
inline Vec dual_kappa(const RootDatum& datum, const WeylGroup& weyl,
                      const LeviDatum& levi, const Vec& kappa) {
  return -weyl.apply(weyl.longest_levi(levi), kappa) - two_rho_nc(datum, levi);
}

// ---------------------------------------------------------------------------
// Chamber sets attached to a Levi-dominant weight.
// ---------------------------------------------------------------------------

inline void require_weight_dimension(const RootDatum& datum, const Vec& kappa,
                                     const char* op) {
  if (static_cast<int>(kappa.size()) != datum.dim)
    fail_precondition("slope_calc", op, "weight has wrong dimension");
}

inline void require_levi_dominant(const RootDatum& datum, const LeviDatum& levi,
                                  const Vec& kappa, const char* op) {
  require_weight_dimension(datum, kappa, op);
  if (!is_dominant(datum, kappa, Chamber::M, &levi))
    fail_precondition("slope_calc", op,
                      "weight must be dominant for the Levi: " + to_string(kappa));
}

// Plus: elements sending the Levi-flipped shifted weight to the anti-dominant
// cone.  Minus: elements sending the shifted weight to the dominant cone.
// Defined for every weight; the chambers are nonempty by construction.
inline std::vector<int> c_set(const RootDatum& datum, const WeylGroup& weyl,
                              const LeviDatum& levi, const Vec& kappa, Sign sign) {
  require_weight_dimension(datum, kappa, "c_set");
  const Vec target = sign == Sign::plus
                         ? weyl.apply(weyl.longest_levi(levi), kappa + datum.rho)
                         : kappa + datum.rho;
  std::vector<int> out;
  for (int w = 0; w < weyl.size(); ++w) {
    Vec v = weyl.apply_inverse(w, target);
    const bool inside =
        sign == Sign::plus ? is_antidominant(datum, v) : is_dominant(datum, v);
    if (inside) out.push_back(w);
  }
  return out;
}

// The stabilizer (plain action) of the same shifted weight.
inline std::vector<int> w_set(const RootDatum& datum, const WeylGroup& weyl,
                              const LeviDatum& levi, const Vec& kappa, Sign sign) {
  require_weight_dimension(datum, kappa, "w_set");
  const Vec target = sign == Sign::plus
                         ? weyl.apply(weyl.longest_levi(levi), kappa + datum.rho)
                         : kappa + datum.rho;
  std::vector<int> out;
  for (int w = 0; w < weyl.size(); ++w)
    if (weyl.apply(w, target) == target) out.push_back(w);
  return out;
}

inline std::pair<int, int> ell_min_max(const RootDatum& datum,
                                       const WeylGroup& weyl,
                                       const LeviDatum& levi, const Vec& kappa) {
  std::vector<int> plus = c_set(datum, weyl, levi, kappa, Sign::plus);
  int lo = weyl.length(plus.front()), hi = lo;
  for (int w : plus) {
    lo = std::min(lo, weyl.length(w));
    hi = std::max(hi, weyl.length(w));
  }
  return {lo, hi};
}

// ---------------------------------------------------------------------------
// Slope conditions.
// ---------------------------------------------------------------------------

enum class ConditionKind { ss, sss };
enum class ConditionFlavor { nu, M, Mw, b };

inline ConditionKind parse_condition_kind(const std::string& text) {
  if (text == "ss") return ConditionKind::ss;
  if (text == "sss") return ConditionKind::sss;
  fail_config("slope_calc", "parse_kind", "kind must be ss or sss");
}
inline ConditionFlavor parse_condition_flavor(const std::string& text) {
  if (text == "nu") return ConditionFlavor::nu;
  if (text == "M") return ConditionFlavor::M;
  if (text == "Mw") return ConditionFlavor::Mw;
  if (text == "b") return ConditionFlavor::b;
  fail_config("slope_calc", "parse_flavor", "flavor must be nu, M, Mw, or b");
}

struct SlopeConditionArgs {
  ConditionKind kind = ConditionKind::ss;
  ConditionFlavor flavor = ConditionFlavor::nu;
  Sign sign = Sign::plus;
  Vec weight;             // nu for flavors nu/b, kappa for flavors M/Mw
  std::optional<int> w;   // required for flavor Mw, and for kind sss flavor nu
};

// One universally quantified constraint: the condition fails at lambda exactly
// when lambda dominates (plus) or is dominated by (minus) every listed bound.
struct ConditionItem {
  std::string label;
  std::vector<Vec> bounds;  // restricted to the split part
};

struct CompiledSlopeCondition {
  Sign sign = Sign::plus;
  std::vector<ConditionItem> items;
  // Integer mirror of the bounds for the fast cone path (valid when every
  // restricted bound is integral).
  bool int_ok = false;
  std::vector<std::vector<std::vector<long long>>> int_bounds;
};

namespace detail {

inline std::optional<std::vector<long long>> to_int64(const Vec& v) {
  std::vector<long long> out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) return std::nullopt;
    const Int& n = numerator(v[i]);
    if (n > 1000000000LL || n < -1000000000LL) return std::nullopt;
    out[i] = static_cast<long long>(n);
  }
  return out;
}

inline void push_item(CompiledSlopeCondition& cond, const RootDatum& datum,
                      std::string label, std::vector<Vec> raw_bounds) {
  ConditionItem item;
  item.label = std::move(label);
  for (Vec& b : raw_bounds)
    item.bounds.push_back(restrict_to_split(datum, b));
  std::vector<std::vector<long long>> ints;
  for (const Vec& b : item.bounds) {
    auto i = to_int64(b);
    if (!i) cond.int_ok = false;
    else ints.push_back(std::move(*i));
  }
  cond.int_bounds.push_back(std::move(ints));
  cond.items.push_back(std::move(item));
}

// Shared worker for the kappa-side conditions (flavors M and Mw and the
// expansions of b/nu): appends the items for one kappa, with an optional
// label prefix naming the outer quantifier.
inline void compile_kappa_condition(CompiledSlopeCondition& cond,
                                    const RootDatum& datum, const WeylGroup& weyl,
                                    const LeviDatum& levi, ConditionKind kind,
                                    ConditionFlavor flavor, Sign sign,
                                    const Vec& kappa, std::optional<int> w_arg,
                                    const std::string& prefix,
                                    bool enforce_dominance = true) {
  const int w0m = weyl.longest_levi(levi);
  const Vec two_rho = two_rho_nc(datum, levi);
  if (flavor == ConditionFlavor::M) {
    // Weights transported internally from a dominant shifted weight may sit
    // on a chamber wall, so dominance is only enforced for direct requests.
    if (enforce_dominance)
      require_levi_dominant(datum, levi, kappa, "slope_condition");
    std::vector<bool> excluded(weyl.size(), false);
    for (int c : c_set(datum, weyl, levi, kappa, sign)) excluded[c] = true;
    for (int w = 0; w < weyl.size(); ++w) {
      if (!weyl.in_kostant(w, levi) || excluded[w]) continue;
      std::vector<Vec> bounds;
      if (kind == ConditionKind::ss) {
        bounds.push_back(
            sign == Sign::plus
                ? weyl.apply_inverse(w, weyl.apply(w0m, kappa + datum.rho)) +
                      datum.rho
                : weyl.apply_inverse(w, kappa + datum.rho) - datum.rho);
      } else {
        Vec base = sign == Sign::plus
                       ? weyl.apply_inverse(w, weyl.apply(w0m, kappa))
                       : weyl.apply_inverse(w, kappa);
        bounds.push_back(base);
        bounds.push_back(base + weyl.apply_inverse(w, two_rho));
      }
      push_item(cond, datum, prefix + weyl.name(w), std::move(bounds));
    }
    return;
  }
  // Flavor Mw: quantify over the nontrivial parabolic elements.
  if (!w_arg)
    fail_config("slope_calc", "slope_condition", "flavor Mw requires --w");
  const int w = *w_arg;
  if (!weyl.in_kostant(w, levi))
    fail_precondition("slope_calc", "slope_condition",
                      "w must be a minimal coset representative");
  for (int wp : weyl.parabolic_elements(levi)) {
    if (wp == 0) continue;
    std::vector<Vec> bounds;
    if (kind == ConditionKind::ss) {
      bounds.push_back(
          sign == Sign::plus
              ? weyl.apply_inverse(
                    w, weyl.apply(w0m, weyl.apply(wp, kappa + datum.rho))) +
                    datum.rho
              : weyl.apply_inverse(w, weyl.apply(wp, kappa + datum.rho)) -
                    datum.rho);
    } else if (sign == Sign::plus) {
      const int outer = weyl.multiply(weyl.multiply(weyl.inverse(w), w0m), wp);
      Vec base = weyl.apply(outer, kappa);
      bounds.push_back(base);
      bounds.push_back(base + Rat(2) * weyl.apply(outer, two_rho));
    } else {
      const int outer = weyl.multiply(weyl.inverse(w), wp);
      bounds.push_back(
          weyl.apply_inverse(w, weyl.apply(wp, kappa + datum.rho) - datum.rho));
      bounds.push_back(weyl.apply(outer, kappa) +
                       Rat(2) * weyl.apply(outer, two_rho));
    }
    push_item(cond, datum, prefix + weyl.name(wp), std::move(bounds));
  }
}

}  // namespace detail

inline CompiledSlopeCondition compile_slope_condition(
    const RootDatum& datum, const WeylGroup& weyl, const LeviDatum& levi,
    const SlopeConditionArgs& args) {
  CompiledSlopeCondition cond;
  cond.sign = args.sign;
  cond.int_ok = true;
  if (static_cast<int>(args.weight.size()) != datum.dim)
    fail_precondition("slope_calc", "slope_condition", "weight has wrong dimension");

  if (args.flavor == ConditionFlavor::M || args.flavor == ConditionFlavor::Mw) {
    detail::compile_kappa_condition(cond, datum, weyl, levi, args.kind,
                                    args.flavor, args.sign, args.weight, args.w,
                                    "");
    return cond;
  }

  // Flavors nu and b require the rho-shifted weight to be dominant.
  const Vec& nu = args.weight;
  if (!is_dominant(datum, nu + datum.rho))
    fail_precondition("slope_calc", "slope_condition",
                      "shifted weight must be dominant: " + to_string(nu));

  if (args.flavor == ConditionFlavor::b) {
    // For every minimal representative, impose the kappa-side condition at
    // the transported weight.
    for (int w : weyl.kostant(levi)) {
      Vec kappa_w = kappa_from_nu(datum, weyl, levi, nu, w, Sign::plus);
      detail::compile_kappa_condition(cond, datum, weyl, levi, args.kind,
                                      ConditionFlavor::M, args.sign, kappa_w,
                                      std::nullopt, weyl.name(w) + ":",
                                      /*enforce_dominance=*/false);
    }
    return cond;
  }

  // Flavor nu.
  if (args.kind == ConditionKind::ss) {
    // The plus condition bounds lambda below by the negated shifted
    // translates of nu; the minus condition bounds it above by the shifted
    // translates of the dual weight -w0(nu).  (Only this pairing makes the
    // two conditions exchange under both plus/minus symmetries.)
    const Vec target =
        args.sign == Sign::plus ? nu : -weyl.apply(weyl.longest(), nu);
    std::vector<bool> fixes(weyl.size(), false);
    for (int w : weyl.dot_stabilizer(target)) fixes[w] = true;
    for (int w = 0; w < weyl.size(); ++w) {
      if (fixes[w]) continue;
      Vec bound = args.sign == Sign::plus ? -weyl.dot(w, target)
                                          : weyl.dot(w, target);
      detail::push_item(cond, datum, weyl.name(w), {std::move(bound)});
    }
    return cond;
  }

  // Strong condition at a fixed minimal representative: both kappa-side
  // conditions at the transported weight.
  if (!args.w)
    fail_config("slope_calc", "slope_condition",
                "kind sss with flavor nu requires --w");
  const int w = *args.w;
  if (!weyl.in_kostant(w, levi))
    fail_precondition("slope_calc", "slope_condition",
                      "w must be a minimal coset representative");
  Vec kappa = kappa_from_nu(datum, weyl, levi, nu, w, args.sign);
  detail::compile_kappa_condition(cond, datum, weyl, levi, ConditionKind::sss,
                                  ConditionFlavor::M, args.sign, kappa,
                                  std::nullopt, "M:",
                                  /*enforce_dominance=*/false);
  detail::compile_kappa_condition(cond, datum, weyl, levi, ConditionKind::sss,
                                  ConditionFlavor::Mw, args.sign, kappa, w,
                                  "Mw:");
  return cond;
}

namespace detail {

inline void require_slope_vector(const RootDatum& datum, const Vec& lambda) {
  if (static_cast<int>(lambda.size()) != datum.dim)
    fail_precondition("slope_calc", "slope_condition",
                      "slope vector has wrong dimension");
  if (!is_gamma_invariant(datum, lambda))
    fail_precondition("slope_calc", "slope_condition",
                      "slope vector must be invariant under the coordinate "
                      "symmetry");
}

inline bool item_fails(const RootDatum& datum, Sign sign,
                       const ConditionItem& item, const Vec& lambda) {
  for (const Vec& bound : item.bounds) {
    const bool dominated = sign == Sign::plus
                               ? datum.cone_split.contains(lambda - bound)
                               : datum.cone_split.contains(bound - lambda);
    if (!dominated) return false;
  }
  return true;
}

}  // namespace detail

inline bool eval_condition(const RootDatum& datum,
                           const CompiledSlopeCondition& cond, const Vec& lambda) {
  detail::require_slope_vector(datum, lambda);
  for (const auto& item : cond.items)
    if (detail::item_fails(datum, cond.sign, item, lambda)) return false;
  return true;
}

// Fast path for integer slope vectors on integral bound systems; falls back
// to the exact rational path otherwise.
inline bool eval_condition_int(const RootDatum& datum,
                               const CompiledSlopeCondition& cond,
                               const std::vector<long long>& lambda) {
  if (!cond.int_ok) {
    Vec v(lambda.size());
    for (std::size_t i = 0; i < lambda.size(); ++i) v[i] = Rat(lambda[i]);
    return eval_condition(datum, cond, v);
  }
  const std::size_t n = lambda.size();
  std::vector<long long> diff(n);
  for (std::size_t at = 0; at < cond.int_bounds.size(); ++at) {
    bool fails = true;
    for (const auto& bound : cond.int_bounds[at]) {
      for (std::size_t i = 0; i < n; ++i)
        diff[i] = cond.sign == Sign::plus ? lambda[i] - bound[i]
                                          : bound[i] - lambda[i];
      if (!datum.cone_split.contains_int(diff)) {
        fails = false;
        break;
      }
    }
    if (fails) return false;
  }
  return true;
}

inline std::vector<int> violating_items(const RootDatum& datum,
                                        const CompiledSlopeCondition& cond,
                                        const Vec& lambda) {
  detail::require_slope_vector(datum, lambda);
  std::vector<int> out;
  for (std::size_t at = 0; at < cond.items.size(); ++at)
    if (detail::item_fails(datum, cond.sign, cond.items[at], lambda))
      out.push_back(static_cast<int>(at));
  return out;
}

inline bool slope_condition(const RootDatum& datum, const WeylGroup& weyl,
                            const LeviDatum& levi, const SlopeConditionArgs& args,
                            const Vec& lambda) {
  CompiledSlopeCondition cond = compile_slope_condition(datum, weyl, levi, args);
  return eval_condition(datum, cond, lambda);
}

// ---------------------------------------------------------------------------
// Slope bounds.
// ---------------------------------------------------------------------------

enum class BoundVariant { conjectural, proven_pair };

inline BoundVariant parse_bound_variant(const std::string& text) {
  if (text == "conjectural") return BoundVariant::conjectural;
  if (text == "proven_pair" || text == "proven") return BoundVariant::proven_pair;
  fail_config("slope_calc", "parse_variant",
              "variant must be conjectural or proven_pair");
}

// Expected lower bounds for the slope of a finite-slope class at w, restricted
// to the split part: one vector for the conjectural variant, two whose max is
// the proven variant.
inline std::vector<Vec> slope_bound(const RootDatum& datum, const WeylGroup& weyl,
                                    const LeviDatum& levi, int w, const Vec& kappa,
                                    Sign sign, BoundVariant variant) {
  if (static_cast<int>(kappa.size()) != datum.dim)
    fail_precondition("slope_calc", "slope_bound", "weight has wrong dimension");
  if (!weyl.in_kostant(w, levi))
    fail_precondition("slope_calc", "slope_bound",
                      "w must be a minimal coset representative");
  const int w0m = weyl.longest_levi(levi);
  std::vector<Vec> out;
  if (variant == BoundVariant::conjectural) {
    out.push_back(sign == Sign::plus
                      ? weyl.apply_inverse(w, weyl.apply(w0m, kappa + datum.rho)) +
                            datum.rho
                      : weyl.apply_inverse(w, kappa + datum.rho) - datum.rho);
  } else {
    Vec base = sign == Sign::plus
                   ? weyl.apply_inverse(w, weyl.apply(w0m, kappa))
                   : weyl.apply_inverse(w, kappa);
    out.push_back(base);
    out.push_back(base + weyl.apply_inverse(w, two_rho_nc(datum, levi)));
  }
  for (Vec& v : out) v = restrict_to_split(datum, v);
  return out;
}

// ---------------------------------------------------------------------------
// Affine forms and the symbolic operator tables.
// ---------------------------------------------------------------------------

struct AffineForm {
  std::vector<Rat> coeffs;  // coefficient of k_1, ..., k_g
  Rat constant;

  bool operator==(const AffineForm& other) const = default;
};

// Canonical rendering: monomials by ascending variable index, constant last,
// unit coefficients omitted, '*' between coefficient and variable, no spaces.
inline std::string affine_to_string(const AffineForm& form) {
  std::string out;
  auto append = [&out](const Rat& coeff, const std::string& symbol) {
    if (coeff == 0) return;
    const bool negative = coeff < 0;
    Rat mag = negative ? -coeff : coeff;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? "-" : "+";
    }
    if (symbol.empty()) {
      out += to_string(mag);
    } else if (mag == 1) {
      out += symbol;
    } else {
      out += to_string(mag) + "*" + symbol;
    }
  };
  for (std::size_t i = 0; i < form.coeffs.size(); ++i)
    append(form.coeffs[i], "k" + std::to_string(i + 1));
  append(form.constant, "");
  if (out.empty()) out = "0";
  return out;
}

struct HeckeTable {
  int genus = 0;
  std::vector<std::string> row_names;  // operator names, highest index first
  std::vector<std::string> col_names;  // minimal representative names
  std::vector<std::string> row_classes;  // sign classes of the operators
  std::vector<std::vector<AffineForm>> cells;
};

// Recognizes the symplectic-similitude presets structurally: g+1 coordinates,
// simple roots e_i - e_{i+1} followed by -2 e_1.
inline int gsp_genus(const RootDatum& datum) {
  const int g = datum.rank();
  if (datum.dim != g + 1)
    fail_config("slope_calc", "gsp_genus", "preset is not symplectic-similitude");
  auto expect = [&](const Vec& got, const Vec& want) {
    if (got != want)
      fail_config("slope_calc", "gsp_genus", "preset is not symplectic-similitude");
  };
  for (int i = 0; i + 1 < g; ++i) {
    Vec r = zero_vec(datum.dim);
    r[i] = 1;
    r[i + 1] = -1;
    expect(datum.simple_roots[i], r);
    expect(datum.simple_coroots[i], r);
  }
  Vec last = zero_vec(datum.dim);
  last[0] = -2;
  expect(datum.simple_roots[g - 1], last);
  last[0] = -1;
  expect(datum.simple_coroots[g - 1], last);
  return g;
}

inline LeviDatum gsp_standard_levi(const RootDatum& datum) {
  const int g = gsp_genus(datum);
  std::vector<int> theta;
  for (int i = 0; i + 1 < g; ++i) theta.push_back(i);
  return make_levi(datum, theta);
}

// The standard normalized operator valuations U_g, ..., U_1.
inline std::vector<std::pair<std::string, CocharacterValuation>>
standard_hecke_operators(const RootDatum& datum) {
  const int g = gsp_genus(datum);
  std::vector<std::pair<std::string, CocharacterValuation>> out;
  Vec ug(g + 1, Rat(-1, 2));
  out.emplace_back("U" + std::to_string(g),
                   make_cocharacter_valuation(datum, ug));
  for (int i = g - 1; i >= 1; --i) {
    Vec t = zero_vec(g + 1);
    for (int j = g - i; j < g; ++j) t[j] = -1;
    t[g] = -1;
    out.emplace_back("U" + std::to_string(i),
                     make_cocharacter_valuation(datum, t));
  }
  return out;
}

// Symbolic table of lower bounds: one row per standard operator, one column
// per minimal representative; each cell is the pairing of the operator
// valuation with the slope bound at the weight (k_1,...,k_g; -sum k_i), as an
// affine form in the k_i, reconstructed from g+1 evaluations.
inline HeckeTable hecke_table(const RootDatum& datum, const WeylGroup& weyl,
                              ConditionKind variant) {
  HeckeTable table;
  table.genus = gsp_genus(datum);
  const int g = table.genus;
  LeviDatum levi = gsp_standard_levi(datum);
  auto operators = standard_hecke_operators(datum);
  std::vector<int> cols = weyl.kostant(levi);
  for (int w : cols) table.col_names.push_back(weyl.name(w));
  for (const auto& [name, val] : operators) {
    table.row_names.push_back(name);
    table.row_classes.push_back(sign_class_name(val.sign_class));
  }

  auto kappa_at = [&](const std::vector<Rat>& k) {
    Vec kappa = zero_vec(g + 1);
    Rat total(0);
    for (int i = 0; i < g; ++i) {
      kappa[i] = k[i];
      total += k[i];
    }
    kappa[g] = -total;
    return kappa;
  };
  auto cell_value = [&](const Vec& t, int w, const Vec& kappa) {
    if (variant == ConditionKind::ss) {
      Vec bound = slope_bound(datum, weyl, levi, w, kappa, Sign::plus,
                              BoundVariant::conjectural)
                      .front();
      return dot(t, bound);
    }
    std::vector<Vec> pair = slope_bound(datum, weyl, levi, w, kappa, Sign::plus,
                                        BoundVariant::proven_pair);
    return std::max(dot(t, pair[0]), dot(t, pair[1]));
  };

  for (const auto& [name, val] : operators) {
    std::vector<AffineForm> row;
    for (int w : cols) {
      AffineForm form;
      std::vector<Rat> zero(g, Rat(0));
      form.constant = cell_value(val.coords, w, kappa_at(zero));
      form.coeffs.assign(g, Rat(0));
      for (int j = 0; j < g; ++j) {
        std::vector<Rat> probe = zero;
        probe[j] = 1;
        form.coeffs[j] = cell_value(val.coords, w, kappa_at(probe)) - form.constant;
      }
      // The cell must actually be affine in the k_i; probe a combined point.
      std::vector<Rat> ones(g, Rat(1));
      Rat predicted = form.constant;
      for (int j = 0; j < g; ++j) predicted += form.coeffs[j];
      if (cell_value(val.coords, w, kappa_at(ones)) != predicted)
        fail_precondition("slope_calc", "hecke_table",
                          "cell value is not affine in the weight");
      row.push_back(std::move(form));
    }
    table.cells.push_back(std::move(row));
  }
  return table;
}

}  // namespace cousin
