#pragma once

// Self-contained property suites.  Each suite re-verifies one slice of the
// library against frozen expected values or independent brute-force
// recomputations (see reference.hpp), and reports a pass/fail result with a
// counterexample description on failure.  The `check` CLI subcommand and the
// acceptance runner both drive these.

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cousin/char_ring.hpp"
#include "cousin/cousin_complex.hpp"
#include "cousin/errors.hpp"
#include "cousin/newton.hpp"
#include "cousin/rational.hpp"
#include "cousin/reference.hpp"
#include "cousin/root_datum.hpp"
#include "cousin/slope_calc.hpp"
#include "cousin/weyl.hpp"

namespace cousin {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::string detail;      // first counterexample, empty when passed
  long long checks = 0;    // number of individual assertions evaluated
  long long millis = 0;
};

// Seed for the randomized valuation suite; settable so runs stay
// reproducible for a fixed configuration.
inline unsigned long long& randomized_check_seed() {
  static unsigned long long seed = 20260823ULL;
  return seed;
}

class CheckRecorder {
 public:
  explicit CheckRecorder(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const char* context) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = context;
    }
  }

  template <typename MsgFn>
  void expect(bool ok, MsgFn&& message) {
    ++result_.checks;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = message();
    }
  }

  bool passing() const { return result_.passed; }
  CheckResult take() { return std::move(result_); }

 private:
  CheckResult result_;
};

namespace checks_detail {

// ---------------------------------------------------------------------------
// Small helpers shared by the suites.
// ---------------------------------------------------------------------------

using IntVec = std::vector<long long>;

inline Vec as_vec(const IntVec& v) {
  Vec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Rat(v[i]);
  return out;
}

inline std::string str_of(const IntVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(v[i]);
  }
  return out + ")";
}

template <typename Fn>
void for_each_point(int dim, long long lo, long long hi, Fn&& fn) {
  IntVec v(dim, lo);
  for (;;) {
    fn(v);
    int at = 0;
    while (at < dim && v[at] == hi) v[at++] = lo;
    if (at == dim) return;
    ++v[at];
  }
}

inline std::vector<IntVec> grid_points(int dim, long long lo, long long hi) {
  std::vector<IntVec> out;
  for_each_point(dim, lo, hi, [&](const IntVec& v) { out.push_back(v); });
  return out;
}

inline std::vector<std::vector<int>> all_theta_subsets(int rank) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << rank); ++mask) {
    std::vector<int> theta;
    for (int i = 0; i < rank; ++i)
      if (mask & (1 << i)) theta.push_back(i);
    out.push_back(std::move(theta));
  }
  return out;
}

inline std::optional<IntVec> to_int_vec(const Vec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!is_integer(v[i])) return std::nullopt;
    const Int& n = numerator(v[i]);
    if (n > 1000000000LL || n < -1000000000LL) return std::nullopt;
    out[i] = static_cast<long long>(n);
  }
  return out;
}

// Integer matrix of the plain action of a group element, when it exists.
inline std::optional<std::vector<IntVec>> int_action(const WeylGroup& weyl,
                                                     int w) {
  const int dim = weyl.datum().dim;
  std::vector<IntVec> cols(dim);
  for (int j = 0; j < dim; ++j) {
    Vec e = zero_vec(dim);
    e[j] = 1;
    auto img = to_int_vec(weyl.apply(w, e));
    if (!img) return std::nullopt;
    cols[j] = *img;
  }
  std::vector<IntVec> rows(dim, IntVec(dim, 0));
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) rows[i][j] = cols[j][i];
  return rows;
}

inline IntVec apply_int(const std::vector<IntVec>& rows, const IntVec& v) {
  IntVec out(rows.size(), 0);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < v.size(); ++j) out[i] += rows[i][j] * v[j];
  return out;
}

inline IntVec negate(const IntVec& v) {
  IntVec out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = -v[i];
  return out;
}

// List of integralized restricted bounds for the brute-force forms.
struct IntBoundList {
  std::vector<IntVec> bounds;
};

inline bool push_bound(IntBoundList& list, const RootDatum& datum,
                       const Vec& ambient) {
  auto b = to_int_vec(restrict_to_split(datum, ambient));
  if (!b) return false;
  list.bounds.push_back(std::move(*b));
  return true;
}

// lambda >= bound in the restricted order, integer fast path.
inline bool geq_int(const RootDatum& datum, const IntVec& lam, const IntVec& b) {
  IntVec diff(lam.size());
  for (std::size_t i = 0; i < lam.size(); ++i) diff[i] = lam[i] - b[i];
  return datum.cone_split.contains_int(diff);
}

// True when lambda dominates none of the listed bounds.
inline bool none_geq(const RootDatum& datum, const IntVec& lam,
                     const IntBoundList& list) {
  for (const IntVec& b : list.bounds)
    if (geq_int(datum, lam, b)) return false;
  return true;
}

inline const std::vector<std::string>& small_rank_presets() {
  static const std::vector<std::string> presets{"A1", "product:A1xA1", "A2",
                                               "C2"};
  return presets;
}

// ---------------------------------------------------------------------------
// Suites 1-3: frozen operator tables and bounds for the symplectic presets.
// ---------------------------------------------------------------------------

inline void expect_table(CheckRecorder& rec, const HeckeTable& table,
                         const std::vector<std::string>& want_rows,
                         const std::vector<std::string>& want_cols,
                         const std::vector<std::vector<std::string>>& want_cells,
                         const std::vector<std::vector<AffineForm>>& want_forms) {
  rec.expect(table.row_names == want_rows, "unexpected row names");
  rec.expect(table.col_names == want_cols, "unexpected column names");
  rec.expect(table.cells.size() == want_cells.size(), "unexpected row count");
  for (std::size_t r = 0; r < want_cells.size() && r < table.cells.size(); ++r) {
    rec.expect(table.cells[r].size() == want_cells[r].size(),
               "unexpected column count");
    for (std::size_t c = 0;
         c < want_cells[r].size() && c < table.cells[r].size(); ++c) {
      const std::string got = affine_to_string(table.cells[r][c]);
      rec.expect(got == want_cells[r][c], [&] {
        return "cell (" + table.row_names[r] + ", " + table.col_names[c] +
               "): got " + got + ", want " + want_cells[r][c];
      });
      rec.expect(table.cells[r][c] == want_forms[r][c], [&] {
        return "cell (" + table.row_names[r] + ", " + table.col_names[c] +
               "): affine data differs from the expected linear form";
      });
    }
  }
}

inline void suite_table_ss(CheckRecorder& rec) {
  const RootDatum datum = preset_datum("GSp4");
  const WeylGroup weyl(datum);
  const auto start = std::chrono::steady_clock::now();
  const HeckeTable table = hecke_table(datum, weyl, ConditionKind::ss);
  const auto elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(
                           std::chrono::steady_clock::now() - start)
                           .count();
  rec.expect(table.genus == 2, "genus should be 2");
  expect_table(
      rec, table, {"U2", "U1"}, {"Id", "s1", "s1s0", "s1s0s1"},
      {{"3", "k2+1", "k2+1", "k1+k2"},
       {"k2+3", "k2+3", "k1+2*k2", "k1+2*k2"}},
      {{{{Rat(0), Rat(0)}, Rat(3)},
        {{Rat(0), Rat(1)}, Rat(1)},
        {{Rat(0), Rat(1)}, Rat(1)},
        {{Rat(1), Rat(1)}, Rat(0)}},
       {{{Rat(0), Rat(1)}, Rat(3)},
        {{Rat(0), Rat(1)}, Rat(3)},
        {{Rat(1), Rat(2)}, Rat(0)},
        {{Rat(1), Rat(2)}, Rat(0)}}});
  rec.expect(elapsed < 1000, [&] {
    return "table took " + std::to_string(elapsed) + " ms (budget 1000 ms)";
  });
}

inline void suite_table_sss(CheckRecorder& rec) {
  const RootDatum datum = preset_datum("GSp4");
  const WeylGroup weyl(datum);
  const HeckeTable table = hecke_table(datum, weyl, ConditionKind::sss);
  rec.expect(table.genus == 2, "genus should be 2");
  expect_table(
      rec, table, {"U2", "U1"}, {"Id", "s1", "s1s0", "s1s0s1"},
      {{"3", "k2", "k2", "k1+k2"},
       {"k2+3", "k2+3", "k1+2*k2", "k1+2*k2"}},
      {{{{Rat(0), Rat(0)}, Rat(3)},
        {{Rat(0), Rat(1)}, Rat(0)},
        {{Rat(0), Rat(1)}, Rat(0)},
        {{Rat(1), Rat(1)}, Rat(0)}},
       {{{Rat(0), Rat(1)}, Rat(3)},
        {{Rat(0), Rat(1)}, Rat(3)},
        {{Rat(1), Rat(2)}, Rat(0)},
        {{Rat(1), Rat(2)}, Rat(0)}}});
}

inline void suite_gl2_bounds(CheckRecorder& rec) {
  const RootDatum datum = preset_datum("GSp2g:g=1");
  const WeylGroup weyl(datum);
  const LeviDatum levi = gsp_standard_levi(datum);
  const Vec t{Rat(-1, 2), Rat(-1, 2)};
  for (long long k : {0LL, 1LL, 5LL, 9LL}) {
    const Vec kappa{Rat(k), Rat(-k)};
    const Vec at_id = slope_bound(datum, weyl, levi, weyl.identity(), kappa,
                                  Sign::plus, BoundVariant::conjectural)
                          .front();
    rec.expect(dot(t, at_id) == 1, [&] {
      return "identity-column pairing at k=" + std::to_string(k) +
             " is not the constant 1";
    });
    const Vec at_w0 = slope_bound(datum, weyl, levi, weyl.longest(), kappa,
                                  Sign::plus, BoundVariant::conjectural)
                          .front();
    rec.expect(dot(t, at_w0) == Rat(k), [&] {
      return "longest-column pairing at k=" + std::to_string(k) +
             " is not k";
    });
  }
  const HeckeTable ss = hecke_table(datum, weyl, ConditionKind::ss);
  rec.expect(ss.row_names == std::vector<std::string>{"U1"}, "row names");
  rec.expect(ss.col_names == std::vector<std::string>{"Id", "s0"},
             "column names");
  rec.expect(affine_to_string(ss.cells[0][0]) == "1", "ss cell at Id");
  rec.expect(affine_to_string(ss.cells[0][1]) == "k1", "ss cell at s0");
  const HeckeTable sss = hecke_table(datum, weyl, ConditionKind::sss);
  rec.expect(affine_to_string(sss.cells[0][0]) == "1", "sss cell at Id");
  rec.expect(affine_to_string(sss.cells[0][1]) == "k1", "sss cell at s0");
}

// ---------------------------------------------------------------------------
// Suites 4-5: structural constants of the symplectic presets.
// ---------------------------------------------------------------------------

inline void suite_gsp_constants(CheckRecorder& rec) {
  for (int g = 1; g <= 4; ++g) {
    const std::string tag = "GSp2g:g=" + std::to_string(g);
    const RootDatum datum = preset_datum(tag);
    Vec want_rho = zero_vec(g + 1);
    for (int i = 0; i < g; ++i) want_rho[i] = Rat(-(i + 1));
    rec.expect(datum.rho == want_rho,
               [&] { return tag + ": unexpected half-sum vector"; });
    const WeylGroup weyl(datum);
    const LeviDatum levi = gsp_standard_levi(datum);
    Vec want_nc = zero_vec(g + 1);
    for (int i = 0; i < g; ++i) want_nc[i] = Rat(-(g + 1));
    rec.expect(two_rho_nc(datum, levi) == want_nc,
               [&] { return tag + ": unexpected non-Levi root sum"; });
    long long order = 1;
    for (int i = 1; i <= g; ++i) order *= 2 * i;  // 2^g * g!
    rec.expect(weyl.size() == order,
               [&] { return tag + ": unexpected group order"; });
    rec.expect(static_cast<long long>(weyl.kostant(levi).size()) ==
                   (1LL << g),
               [&] { return tag + ": unexpected number of minimal "
                                  "representatives"; });
    rec.expect(levi.d == g * (g + 1) / 2,
               [&] { return tag + ": unexpected cell-degree span"; });
    rec.expect(static_cast<int>(datum.positive_roots.size()) == g * g,
               [&] { return tag + ": unexpected positive-root count"; });
  }
}

inline void suite_kostant_gsp4(CheckRecorder& rec) {
  const RootDatum datum = preset_datum("GSp4");
  const WeylGroup weyl(datum);
  const LeviDatum levi = gsp_standard_levi(datum);
  const std::vector<int> reps = weyl.kostant(levi);
  const std::vector<std::string> want_names{"Id", "s1", "s1s0", "s1s0s1"};
  rec.expect(reps.size() == 4, "expected four minimal representatives");
  for (std::size_t i = 0; i < reps.size() && i < 4; ++i) {
    rec.expect(weyl.name(reps[i]) == want_names[i], [&] {
      return "representative " + std::to_string(i) + " is " +
             weyl.name(reps[i]);
    });
    rec.expect(weyl.length(reps[i]) == static_cast<int>(i), [&] {
      return "representative " + weyl.name(reps[i]) + " has length " +
             std::to_string(weyl.length(reps[i]));
    });
  }
}

// ---------------------------------------------------------------------------
// Suite 6: exhaustive agreement of the slope conditions with their
// brute-force reformulations on all small-rank presets.
// ---------------------------------------------------------------------------

inline void equivalence_suite_for(CheckRecorder& rec, const std::string& preset) {
  const RootDatum datum = preset_datum(preset);
  const WeylGroup weyl(datum);
  const int dim = datum.dim;
  const int rank = datum.rank();
  const LeviDatum levi_empty = make_levi(datum, {});
  const auto w0_rows = int_action(weyl, weyl.longest());
  rec.expect(bool(w0_rows),
             [&] { return preset + ": longest element is not integral"; });
  if (!w0_rows) return;

  const std::vector<IntVec> lam_grid = grid_points(dim, -4, 4);
  std::vector<IntVec> nu_shift_dom, nu_plain_dom;
  for (const IntVec& v : lam_grid) {
    const Vec vv = as_vec(v);
    if (is_dominant(datum, vv + datum.rho)) nu_shift_dom.push_back(v);
    if (is_dominant(datum, vv)) nu_plain_dom.push_back(v);
  }
  std::vector<LeviDatum> levis;
  for (const auto& theta : all_theta_subsets(rank))
    levis.push_back(make_levi(datum, theta));

  auto fail_at = [&](const char* what, const IntVec& ctx, const IntVec& lam) {
    return [&, what, ctx, lam] {
      return preset + ": " + what + " at weight " + str_of(ctx) + ", slope " +
             str_of(lam);
    };
  };

  // (a) One-step reformulation of the basic condition, plus the coefficient
  // form on the dominated range.
  for (const IntVec& nu_i : nu_shift_dom) {
    const Vec nu = as_vec(nu_i);
    const auto cond = compile_slope_condition(
        datum, weyl, levi_empty,
        {ConditionKind::ss, ConditionFlavor::nu, Sign::plus, nu, std::nullopt});
    IntBoundList simple;
    bool ok = true;
    for (int i = 0; i < rank; ++i) {
      const int s = weyl.right_multiply(weyl.identity(), i);
      Vec image = weyl.dot(s, nu);
      if (image == nu) continue;
      ok = ok && push_bound(simple, datum, -image);
    }
    const Vec base_vec = restrict_to_split(datum, -nu);
    const auto base_int = to_int_vec(base_vec);
    ok = ok && bool(base_int);
    rec.expect(ok, [&] { return preset + ": non-integral bound data"; });
    if (!ok) continue;
    const auto allowed = allowed_simple_default(datum, weyl, nu);
    for (const IntVec& lam : lam_grid) {
      const bool full = eval_condition_int(datum, cond, lam);
      rec.expect(full == none_geq(datum, lam, simple),
                 fail_at("simple-reflection form differs", nu_i, lam));
      if (geq_int(datum, lam, *base_int)) {
        auto coeff = ss_coefficient_form(datum, weyl, nu, as_vec(lam), allowed);
        rec.expect(coeff.has_value(),
                   fail_at("coefficient form not applicable", nu_i, lam));
        if (coeff)
          rec.expect(*coeff == full,
                     fail_at("coefficient form differs", nu_i, lam));
      } else {
        rec.expect(full,
                   fail_at("condition must hold below the base weight", nu_i,
                           lam));
      }
    }
  }

  // Per-Levi suites.
  for (const LeviDatum& levi : levis) {
    const int w0m = weyl.longest_levi(levi);
    const std::vector<int> reps = weyl.kostant(levi);
    std::vector<IntVec> kappa_grid;
    for (const IntVec& v : lam_grid)
      if (is_dominant(datum, as_vec(v), Chamber::M, &levi))
        kappa_grid.push_back(v);

    // (b) Translated forms of the chamber condition.
    for (const IntVec& kap_i : kappa_grid) {
      const Vec kappa = as_vec(kap_i);
      const auto cond = compile_slope_condition(
          datum, weyl, levi,
          {ConditionKind::ss, ConditionFlavor::M, Sign::plus, kappa,
           std::nullopt});
      const auto data = translated_kappa_data(datum, weyl, levi, kappa);
      IntBoundList full_list, simple_list;
      bool ok = true;
      for (int w = 0; w < weyl.size(); ++w) {
        if (!data.in_s[w]) continue;
        Vec image = weyl.dot(w, data.nu);
        if (image == data.nu) continue;
        ok = ok && push_bound(full_list, datum, -image);
      }
      for (int i = 0; i < rank; ++i) {
        const int s = weyl.right_multiply(weyl.identity(), i);
        if (!data.in_s[s]) continue;
        Vec image = weyl.dot(s, data.nu);
        if (image == data.nu) continue;
        ok = ok && push_bound(simple_list, datum, -image);
      }
      const auto base_int = to_int_vec(restrict_to_split(datum, -data.nu));
      ok = ok && bool(base_int);
      rec.expect(ok, [&] { return preset + ": non-integral translated data"; });
      if (!ok) continue;
      const auto allowed = allowed_simple_translated(datum, weyl, data);
      for (const IntVec& lam : lam_grid) {
        const bool full = eval_condition_int(datum, cond, lam);
        rec.expect(full == none_geq(datum, lam, full_list),
                   fail_at("translated form differs", kap_i, lam));
        rec.expect(full == none_geq(datum, lam, simple_list),
                   fail_at("translated simple form differs", kap_i, lam));
        if (geq_int(datum, lam, *base_int)) {
          auto coeff =
              ss_coefficient_form(datum, weyl, data.nu, as_vec(lam), allowed);
          rec.expect(coeff.has_value() && *coeff == full,
                     fail_at("translated coefficient form differs", kap_i,
                             lam));
        } else {
          rec.expect(full, fail_at("chamber condition must hold below the "
                                   "translated base weight",
                                   kap_i, lam));
        }
      }
    }

    // (c) Conjugated forms of the fixed-representative condition, plus the
    // triviality of the shifted stabilizer inside the Levi.
    for (int w : reps) {
      for (const IntVec& kap_i : kappa_grid) {
        const Vec kappa = as_vec(kap_i);
        const auto cond = compile_slope_condition(
            datum, weyl, levi,
            {ConditionKind::ss, ConditionFlavor::Mw, Sign::plus, kappa, w});
        const int v = weyl.multiply(w0m, w);
        const Vec nu_c = weyl.apply_inverse(v, -(kappa + datum.rho)) - datum.rho;
        IntBoundList full_list, simple_list;
        bool ok = true;
        for (int wp : weyl.parabolic_elements(levi)) {
          if (wp == weyl.identity()) continue;
          const int conj =
              weyl.multiply(weyl.multiply(weyl.inverse(v), wp), v);
          Vec image = weyl.dot(conj, nu_c);
          rec.expect(image != nu_c,
                     fail_at("inner stabilizer should be trivial", kap_i,
                             kap_i));
          ok = ok && push_bound(full_list, datum, -image);
        }
        for (int i : levi.theta) {
          const int s = weyl.right_multiply(weyl.identity(), i);
          const int conj = weyl.multiply(weyl.multiply(weyl.inverse(v), s), v);
          ok = ok && push_bound(simple_list, datum, -weyl.dot(conj, nu_c));
        }
        rec.expect(ok, [&] { return preset + ": non-integral conjugated data"; });
        if (!ok) continue;
        if (full_list.bounds.empty()) {
          rec.expect(cond.items.empty(),
                     "empty quantifier should compile to no constraints");
          continue;
        }
        for (const IntVec& lam : lam_grid) {
          const bool full = eval_condition_int(datum, cond, lam);
          rec.expect(full == none_geq(datum, lam, full_list),
                     fail_at("conjugated form differs", kap_i, lam));
          rec.expect(full == none_geq(datum, lam, simple_list),
                     fail_at("conjugated simple form differs", kap_i, lam));
        }
      }
    }

    // (d) The basic condition at a transported weight is the conjunction of
    // the two parabolic conditions.
    for (const IntVec& kap_i : kappa_grid) {
      const Vec kappa = as_vec(kap_i);
      const auto cond_m = compile_slope_condition(
          datum, weyl, levi,
          {ConditionKind::ss, ConditionFlavor::M, Sign::plus, kappa,
           std::nullopt});
      for (int w : c_set(datum, weyl, levi, kappa, Sign::plus)) {
        const Vec nu = nu_from_kappa(datum, weyl, levi, kappa, w, Sign::plus);
        const auto cond_nu = compile_slope_condition(
            datum, weyl, levi_empty,
            {ConditionKind::ss, ConditionFlavor::nu, Sign::plus, nu,
             std::nullopt});
        const auto cond_mw = compile_slope_condition(
            datum, weyl, levi,
            {ConditionKind::ss, ConditionFlavor::Mw, Sign::plus, kappa, w});
        for (const IntVec& lam : lam_grid) {
          const bool lhs = eval_condition_int(datum, cond_nu, lam);
          const bool rhs = eval_condition_int(datum, cond_m, lam) &&
                           eval_condition_int(datum, cond_mw, lam);
          rec.expect(lhs == rhs,
                     fail_at("conjunction decomposition differs", kap_i, lam));
        }
      }
    }

    // (e) The everywhere condition reduces to boundary simple roots.
    {
      IntBoundList boundary;
      const std::vector<int> db = delta_b(datum, levi);
      for (const IntVec& nu_i : nu_plain_dom) {
        const Vec nu = as_vec(nu_i);
        const auto cond = compile_slope_condition(
            datum, weyl, levi,
            {ConditionKind::ss, ConditionFlavor::b, Sign::plus, nu,
             std::nullopt});
        boundary.bounds.clear();
        bool ok = true;
        for (int i : db) {
          const int s = weyl.right_multiply(weyl.identity(), i);
          ok = ok && push_bound(boundary, datum, -weyl.dot(s, nu));
        }
        rec.expect(ok, [&] { return preset + ": non-integral boundary data"; });
        if (!ok) continue;
        for (const IntVec& lam : lam_grid) {
          rec.expect(eval_condition_int(datum, cond, lam) ==
                         none_geq(datum, lam, boundary),
                     fail_at("boundary form differs", nu_i, lam));
        }
      }
    }

    // (f) Plus/minus symmetries, all condition families.
    // Family: basic condition on a shifted-dominant weight.
    if (levi.theta.empty()) {
      for (const IntVec& nu_i : nu_shift_dom) {
        const Vec nu = as_vec(nu_i);
        const Vec nu_star = dual_nu(datum, weyl, nu);
        const auto cm = compile_slope_condition(
            datum, weyl, levi_empty,
            {ConditionKind::ss, ConditionFlavor::nu, Sign::minus, nu,
             std::nullopt});
        const auto cp = compile_slope_condition(
            datum, weyl, levi_empty,
            {ConditionKind::ss, ConditionFlavor::nu, Sign::plus, nu,
             std::nullopt});
        const auto cpd = compile_slope_condition(
            datum, weyl, levi_empty,
            {ConditionKind::ss, ConditionFlavor::nu, Sign::plus, nu_star,
             std::nullopt});
        for (const IntVec& lam : lam_grid) {
          const bool minus = eval_condition_int(datum, cm, lam);
          rec.expect(minus == eval_condition_int(datum, cp,
                                                 apply_int(*w0_rows, lam)),
                     fail_at("flip symmetry differs (basic)", nu_i, lam));
          rec.expect(minus == eval_condition_int(datum, cpd, negate(lam)),
                     fail_at("dual symmetry differs (basic)", nu_i, lam));
        }
      }
    }
    // Family: everywhere condition.
    for (const IntVec& nu_i : nu_shift_dom) {
      const Vec nu = as_vec(nu_i);
      const Vec nu_star = dual_nu(datum, weyl, nu);
      const auto cm = compile_slope_condition(
          datum, weyl, levi,
          {ConditionKind::ss, ConditionFlavor::b, Sign::minus, nu,
           std::nullopt});
      const auto cp = compile_slope_condition(
          datum, weyl, levi,
          {ConditionKind::ss, ConditionFlavor::b, Sign::plus, nu,
           std::nullopt});
      const auto cpd = compile_slope_condition(
          datum, weyl, levi,
          {ConditionKind::ss, ConditionFlavor::b, Sign::plus, nu_star,
           std::nullopt});
      for (const IntVec& lam : lam_grid) {
        const bool minus = eval_condition_int(datum, cm, lam);
        rec.expect(minus == eval_condition_int(datum, cp,
                                               apply_int(*w0_rows, lam)),
                   fail_at("flip symmetry differs (everywhere)", nu_i, lam));
        rec.expect(minus == eval_condition_int(datum, cpd, negate(lam)),
                   fail_at("dual symmetry differs (everywhere)", nu_i, lam));
      }
    }
    // Families: chamber condition and its strengthened variant.
    for (const IntVec& kap_i : kappa_grid) {
      const Vec kappa = as_vec(kap_i);
      const Vec kappa_star = dual_kappa(datum, weyl, levi, kappa);
      rec.expect(is_dominant(datum, kappa_star, Chamber::M, &levi),
                 [&] { return preset + ": dual weight left the Levi chamber"; });
      for (ConditionKind kind : {ConditionKind::ss, ConditionKind::sss}) {
        const auto cm = compile_slope_condition(
            datum, weyl, levi,
            {kind, ConditionFlavor::M, Sign::minus, kappa, std::nullopt});
        const auto cp = compile_slope_condition(
            datum, weyl, levi,
            {kind, ConditionFlavor::M, Sign::plus, kappa, std::nullopt});
        const auto cpd = compile_slope_condition(
            datum, weyl, levi,
            {kind, ConditionFlavor::M, Sign::plus, kappa_star, std::nullopt});
        for (const IntVec& lam : lam_grid) {
          const bool minus = eval_condition_int(datum, cm, lam);
          rec.expect(minus == eval_condition_int(datum, cp,
                                                 apply_int(*w0_rows, lam)),
                     fail_at("flip symmetry differs (chamber)", kap_i, lam));
          rec.expect(minus == eval_condition_int(datum, cpd, negate(lam)),
                     fail_at("dual symmetry differs (chamber)", kap_i, lam));
        }
      }
      // Family: fixed-representative condition.
      for (int w : reps) {
        const int w_star = weyl.multiply(weyl.multiply(w0m, w), weyl.longest());
        rec.expect(weyl.in_kostant(w_star, levi),
                   "dual representative should stay minimal");
        const auto cm = compile_slope_condition(
            datum, weyl, levi,
            {ConditionKind::ss, ConditionFlavor::Mw, Sign::minus, kappa, w});
        const auto cp = compile_slope_condition(
            datum, weyl, levi,
            {ConditionKind::ss, ConditionFlavor::Mw, Sign::plus, kappa,
             w_star});
        const auto cpd = compile_slope_condition(
            datum, weyl, levi,
            {ConditionKind::ss, ConditionFlavor::Mw, Sign::plus, kappa_star,
             w});
        if (cm.items.empty() && cp.items.empty() && cpd.items.empty())
          continue;  // trivial Levi: nothing to quantify over
        for (const IntVec& lam : lam_grid) {
          const bool minus = eval_condition_int(datum, cm, lam);
          rec.expect(minus == eval_condition_int(datum, cp,
                                                 apply_int(*w0_rows, lam)),
                     fail_at("flip symmetry differs (representative)", kap_i,
                             lam));
          rec.expect(minus == eval_condition_int(datum, cpd, negate(lam)),
                     fail_at("dual symmetry differs (representative)", kap_i,
                             lam));
        }
      }
    }
  }
}

inline void suite_equivalences(CheckRecorder& rec) {
  for (const std::string& preset : small_rank_presets())
    equivalence_suite_for(rec, preset);
}

// ---------------------------------------------------------------------------
// Suite 7: order and coset combinatorics of the group.
// ---------------------------------------------------------------------------

inline void suite_weyl_lemmas(CheckRecorder& rec) {
  for (const std::string& preset : {std::string("A2"), std::string("C2")}) {
    const RootDatum datum = preset_datum(preset);
    const WeylGroup weyl(datum);
    const BruhatOracle oracle(datum, weyl);
    const int n = weyl.size();

    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w)
        rec.expect(weyl.bruhat_leq(u, w) == oracle.leq(u, w), [&] {
          return preset + ": order disagreement at (" + weyl.name(u) + ", " +
                 weyl.name(w) + ")";
        });

    // Monotonicity of the shifted action against the order.
    std::vector<Vec> nus;
    for_each_point(datum.dim, -4, 4, [&](const IntVec& v) {
      Vec vv = as_vec(v);
      if (is_dominant(datum, vv + datum.rho)) nus.push_back(vv);
    });
    for (int u = 0; u < n; ++u)
      for (int w = 0; w < n; ++w) {
        if (!weyl.bruhat_leq(u, w)) continue;
        for (const Vec& nu : nus)
          rec.expect(
              datum.cone_absolute.contains(weyl.dot(u, nu) - weyl.dot(w, nu)),
              [&] {
                return preset + ": monotonicity fails for " + weyl.name(u) +
                       " <= " + weyl.name(w);
              });
      }

    for (const auto& theta : all_theta_subsets(datum.rank())) {
      const LeviDatum levi = make_levi(datum, theta);
      const std::vector<int> reps = weyl.kostant(levi);

      // Prefix property: walking one minimal representative to another along
      // any reduced word keeps every intermediate element minimal.
      for (int w : reps)
        for (int wp : reps) {
          const int x = weyl.multiply(weyl.inverse(w), wp);
          for (const auto& word : all_reduced_words(weyl, x)) {
            int prefix = w;
            for (int letter : word) {
              prefix = weyl.right_multiply(prefix, letter);
              rec.expect(weyl.in_kostant(prefix, levi), [&] {
                return preset + ": prefix " + weyl.name(prefix) +
                       " left the minimal set between " + weyl.name(w) +
                       " and " + weyl.name(wp);
              });
            }
          }
        }

      // Dichotomy: a simple step from a minimal representative either stays
      // minimal or factors through a Levi simple reflection.
      for (int w : reps)
        for (int i = 0; i < datum.rank(); ++i) {
          const int moved = weyl.right_multiply(w, i);
          bool alternative = weyl.in_kostant(moved, levi);
          for (int j : theta) {
            if (alternative) break;
            const int s = weyl.right_multiply(weyl.identity(), j);
            alternative = weyl.multiply(s, w) == moved;
          }
          rec.expect(alternative, [&] {
            return preset + ": step " + weyl.name(w) + " * s" +
                   std::to_string(i) + " violates the dichotomy";
          });
        }
    }
  }
}

// ---------------------------------------------------------------------------
// Suite 8: structure of the chamber sets.
// ---------------------------------------------------------------------------

inline void suite_chamber_structure(CheckRecorder& rec) {
  for (const std::string& preset : small_rank_presets()) {
    const RootDatum datum = preset_datum(preset);
    const WeylGroup weyl(datum);
    for (const auto& theta : all_theta_subsets(datum.rank())) {
      const LeviDatum levi = make_levi(datum, theta);
      const int w0m = weyl.longest_levi(levi);
      for_each_point(datum.dim, -4, 4, [&](const IntVec& kap_i) {
        const Vec kappa = as_vec(kap_i);
        if (!is_dominant(datum, kappa, Chamber::M, &levi)) return;
        auto fail = [&](const char* what) {
          return [&, what] {
            return preset + ": " + what + " at weight " + str_of(kap_i);
          };
        };
        std::vector<int> cp = c_set(datum, weyl, levi, kappa, Sign::plus);
        std::vector<int> cm = c_set(datum, weyl, levi, kappa, Sign::minus);
        std::vector<int> wp = w_set(datum, weyl, levi, kappa, Sign::plus);
        std::vector<int> wm = w_set(datum, weyl, levi, kappa, Sign::minus);
        rec.expect(!cp.empty() && cp.size() == wp.size() &&
                       cm.size() == wm.size() && cp.size() == cm.size(),
                   fail("chamber and stabilizer sizes differ"));
        for (int c : cp)
          rec.expect(weyl.in_kostant(c, levi),
                     fail("plus chamber left the minimal set"));
        for (int c : cm)
          rec.expect(weyl.in_kostant(c, levi),
                     fail("minus chamber left the minimal set"));
        auto sorted = [](std::vector<int> v) {
          std::sort(v.begin(), v.end());
          return v;
        };
        for (int c : cp) {
          std::vector<int> orbit;
          for (int u : wp) orbit.push_back(weyl.multiply(u, c));
          rec.expect(sorted(orbit) == sorted(cp),
                     fail("plus chamber is not one stabilizer orbit"));
        }
        for (int c : cm) {
          std::vector<int> orbit;
          for (int u : wm) orbit.push_back(weyl.multiply(u, c));
          rec.expect(sorted(orbit) == sorted(cm),
                     fail("minus chamber is not one stabilizer orbit"));
        }
        std::vector<int> mapped;
        for (int c : cm)
          mapped.push_back(weyl.multiply(weyl.multiply(w0m, c), weyl.longest()));
        rec.expect(sorted(mapped) == sorted(cp),
                   fail("conjugation duality between the chambers fails"));
        const Vec kappa_star = dual_kappa(datum, weyl, levi, kappa);
        rec.expect(sorted(c_set(datum, weyl, levi, kappa_star, Sign::minus)) ==
                       sorted(cp),
                   fail("dual-weight duality (plus side) fails"));
        rec.expect(sorted(c_set(datum, weyl, levi, kappa_star, Sign::plus)) ==
                       sorted(cm),
                   fail("dual-weight duality (minus side) fails"));
        rec.expect(is_regular(datum, kappa + datum.rho) == (cp.size() == 1),
                   fail("regularity vs chamber size"));
        auto [lo, hi] = ell_min_max(datum, weyl, levi, kappa);
        int lo2 = weyl.length(cp.front()), hi2 = lo2;
        for (int c : cp) {
          lo2 = std::min(lo2, weyl.length(c));
          hi2 = std::max(hi2, weyl.length(c));
        }
        rec.expect(lo == lo2 && hi == hi2, fail("length range differs"));
      });
    }
  }
}

// ---------------------------------------------------------------------------
// Suite 9: highest-weight bookkeeping on the flag variety.
// ---------------------------------------------------------------------------

inline void suite_cousin_bwb(CheckRecorder& rec) {
  for (const std::string& preset :
       {std::string("A1"), std::string("A2"), std::string("C2")}) {
    const RootDatum datum = preset_datum(preset);
    const WeylGroup weyl(datum);
    const int d = static_cast<int>(datum.positive_roots.size());
    const int depth = 8;
    for_each_point(datum.dim, -5, 5, [&](const IntVec& kap_i) {
      const Vec kappa = as_vec(kap_i);
      auto fail = [&](const char* what) {
        return [&, what] {
          return preset + ": " + what + " at weight " + str_of(kap_i);
        };
      };
      const auto fast = bwb(datum, weyl, kappa);
      const auto slow = bwb_oracle(datum, weyl, kappa);
      rec.expect(fast.has_value() == slow.has_value(),
                 fail("resolution existence differs"));
      if (fast && slow) {
        rec.expect(fast->w == slow->w && fast->degree == slow->degree &&
                       fast->weight == slow->weight &&
                       fast->dimension == slow->dimension,
                   fail("resolution data differs"));
        rec.expect(fast->dimension == weyl_dimension(datum, fast->weight),
                   fail("dimension is not the product formula value"));
        rec.expect(fast->degree == weyl.length(fast->w),
                   fail("degree is not the length"));
      }
      if (!fast)
        rec.expect(!is_regular(datum, kappa + datum.rho),
                   fail("missing resolution for a regular weight"));

      // Degree interval from the brute-force scan of the twisting elements.
      const Vec rep = dominant_dot_rep(datum, weyl, kappa);
      std::vector<int> members;
      for (int w = 0; w < weyl.size(); ++w) {
        const int twist = weyl.multiply(weyl.inverse(w), weyl.longest());
        if (weyl.dot(twist, kappa) == rep) members.push_back(w);
      }
      int lo = d, hi = 0;
      for (int w : members) {
        lo = std::min(lo, d - weyl.length(w));
        hi = std::max(hi, d - weyl.length(w));
      }
      const auto amp = bw_amplitude(datum, weyl, kappa);
      rec.expect(amp.first == lo && amp.second == hi,
                 fail("degree interval differs"));
      if (fast)
        rec.expect(amp.first == fast->degree && amp.second == fast->degree,
                   fail("regular interval should be one degree"));

      // Alternating sum of the descriptor characters.
      const CousinDescriptor desc = flag_cousin(datum, weyl, kappa, depth);
      FormalCharacter total;
      total.anchor = rep;
      total.depth = depth;
      for (int p = 0; p <= desc.d; ++p) {
        const long long sign = (p % 2 == 0) ? 1 : -1;
        for (const auto& term : desc.terms[p])
          add_scaled(total,
                     reanchor(datum, *term.character, rep, depth), sign);
      }
      if (is_dominant(datum, kappa)) {
        rec.expect(same_character(total,
                                  weyl_character(datum, weyl, kappa, depth)),
                   fail("alternating sum differs from the full character"));
      } else if (!is_regular(datum, kappa + datum.rho)) {
        rec.expect(total.coeffs.empty(),
                   fail("alternating sum should cancel"));
      } else {
        FormalCharacter want = weyl_character(datum, weyl, rep, depth);
        const long long sign = (fast->degree % 2 == 0) ? 1 : -1;
        FormalCharacter scaled;
        scaled.anchor = rep;
        scaled.depth = depth;
        add_scaled(scaled, want, sign);
        rec.expect(same_character(total, scaled),
                   fail("alternating sum differs from the signed character"));
      }
    });

    // Big-weight filtration: terms away from the surviving chamber contribute
    // no big weights; the surviving anchors are big.
    for_each_point(datum.dim, -3, 3, [&](const IntVec& kap_i) {
      const Vec kappa = as_vec(kap_i);
      const bool regular = is_regular(datum, kappa + datum.rho);
      const Vec rep = dominant_dot_rep(datum, weyl, kappa);
      const std::vector<int> members = flag_c_set(datum, weyl, kappa);
      std::set<int> member_set(members.begin(), members.end());
      const CousinDescriptor desc = flag_cousin(datum, weyl, kappa, 4);
      for (int p = 0; p <= desc.d; ++p)
        for (const auto& term : desc.terms[p]) {
          const bool inside = member_set.count(term.weyl_element) > 0;
          if (inside) {
            rec.expect(big_weight(datum, weyl, *term.weight, rep), [&] {
              return preset + ": surviving anchor is not big at " +
                     str_of(kap_i);
            });
            continue;
          }
          if (!regular) continue;
          for (const auto& [key, coeff] : term.character->coeffs) {
            if (coeff == 0) continue;
            const Vec mu = weight_of_key(datum, *term.character, key);
            rec.expect(!big_weight(datum, weyl, mu, rep), [&] {
              return preset + ": non-surviving term carries a big weight at " +
                     str_of(kap_i);
            });
          }
        }
    });
  }
}

// ---------------------------------------------------------------------------
// Suite 10: series coefficients against direct partition counting.
// ---------------------------------------------------------------------------

inline void suite_verma_partition(CheckRecorder& rec) {
  for (const std::string& preset :
       {std::string("A1"), std::string("A2"), std::string("C2")}) {
    const RootDatum datum = preset_datum(preset);
    KostantCounter counter(datum);
    const int depth = 6;
    const FormalCharacter chr =
        verma_character(datum, zero_vec(datum.dim), depth);
    for_each_point(datum.rank(), 0, depth, [&](const IntVec& key_i) {
      long long height = 0;
      for (long long x : key_i) height += x;
      if (height > depth) return;
      std::vector<int> key(key_i.begin(), key_i.end());
      auto it = chr.coeffs.find(key);
      const long long got = it == chr.coeffs.end() ? 0 : it->second;
      rec.expect(got == counter.count(key), [&] {
        return preset + ": multiplicity at drop " + str_of(key_i) + " is " +
               std::to_string(got) + ", want " +
               std::to_string(counter.count(key));
      });
    });
  }
}

// ---------------------------------------------------------------------------
// Suite 11: seeded randomized valuation checks.
// ---------------------------------------------------------------------------

inline void suite_newton_random(CheckRecorder& rec) {
  std::mt19937_64 rng(randomized_check_seed());
  const std::vector<long long> primes{2, 3, 5, 7};

  auto random_unit = [&](long long p) {
    static const std::vector<long long> nums{1,  -1, 3,  -3, 7,  -7,
                                             9,  11, 13, -5, 5,  2};
    static const std::vector<long long> dens{1, 2, 3, 5, 7, 11};
    long long n = 0, d = 0;
    do {
      n = nums[rng() % nums.size()];
    } while (n % p == 0);
    do {
      d = dens[rng() % dens.size()];
    } while (d % p == 0);
    return Rat(n, d);
  };
  auto p_power = [](long long p, long long a) {
    Rat out(1);
    for (long long i = 0; i < (a >= 0 ? a : -a); ++i) {
      if (a >= 0)
        out *= p;
      else
        out /= p;
    }
    return out;
  };

  std::vector<Rat> previous_poly;
  std::optional<PValuation> previous_val;
  for (int iter = 0; iter < 200; ++iter) {
    const long long p = primes[iter % primes.size()];
    const PValuation val(p);
    const int n = 1 + static_cast<int>(rng() % 5);
    std::vector<Rat> roots;
    std::vector<long long> exponents;
    for (int j = 0; j < n; ++j) {
      const long long a = static_cast<long long>(rng() % 9) - 4;
      exponents.push_back(a);
      roots.push_back(random_unit(p) * p_power(p, a));
    }
    const std::vector<Rat> coeffs = poly_from_roots(roots);
    const NewtonPolygon poly = newton_polygon(val, coeffs);

    std::map<Rat, long long> want;
    for (long long a : exponents) ++want[Rat(a)];
    std::map<Rat, long long> got;
    for (const auto& [value, mult] : root_valuations(poly)) got[value] += mult;
    rec.expect(got == want, [&] {
      return "valuation multiset differs at iteration " + std::to_string(iter);
    });

    long long min_exp = exponents.front();
    for (long long a : exponents) min_exp = std::min(min_exp, a);
    for (long long h = -5; h <= 5; ++h) {
      rec.expect(is_slope_leq_h(val, coeffs, Rat(h)) == (min_exp >= -h), [&] {
        return "slope predicate differs at iteration " + std::to_string(iter) +
               ", h=" + std::to_string(h);
      });
    }

    // Multiplying polynomials merges the valuation multisets.
    if (previous_val && previous_val->p == p) {
      const std::vector<Rat> product = poly_mul(coeffs, previous_poly);
      std::map<Rat, long long> merged = got;
      for (const auto& [value, mult] :
           root_valuations(newton_polygon(val, previous_poly)))
        merged[value] += mult;
      std::map<Rat, long long> combined;
      for (const auto& [value, mult] :
           root_valuations(newton_polygon(val, product)))
        combined[value] += mult;
      rec.expect(combined == merged, [&] {
        return "product multiset differs at iteration " + std::to_string(iter);
      });
    }
    previous_poly = coeffs;
    previous_val.emplace(p);
  }

  // Conjugated diagonal matrices: the slope-part dimension is eigenvalue
  // counting.
  for (int iter = 0; iter < 40; ++iter) {
    const long long p = primes[iter % primes.size()];
    const PValuation val(p);
    const int m = 1 + static_cast<int>(rng() % 8);
    std::vector<Rat> eigen(m, Rat(0));
    int nonzero = 0;
    for (int j = 0; j < m; ++j) {
      if (rng() % 10 < 3) continue;  // keep a genuine kernel now and then
      const long long a = static_cast<long long>(rng() % 9) - 4;
      eigen[j] = random_unit(p) * p_power(p, a);
      ++nonzero;
    }
    Mat s = identity_matrix(m);
    for (int op = 0; op < 2 * m; ++op) {
      const int r1 = static_cast<int>(rng() % m);
      int r2 = static_cast<int>(rng() % m);
      if (r1 == r2) r2 = (r2 + 1) % m;
      if (m == 1) break;
      const long long c = static_cast<long long>(rng() % 5) - 2;
      if (c == 0) continue;
      for (int j = 0; j < m; ++j) s[r2][j] += Rat(c) * s[r1][j];
    }
    const auto s_inv = try_inverse(s);
    rec.expect(bool(s_inv), "conjugating matrix must stay invertible");
    if (!s_inv) continue;
    Mat diag(m, zero_vec(m));
    for (int j = 0; j < m; ++j) diag[j][j] = eigen[j];
    const Mat a = mat_mul(mat_mul(s, diag), *s_inv);

    int last = -1;
    for (long long twice_h = -9; twice_h <= 9; ++twice_h) {
      const Rat h = Rat(twice_h, 2);
      int want = 0;
      for (const Rat& e : eigen) {
        if (e == 0) continue;
        auto ve = val(e);
        if (ve && Rat(*ve) <= h) ++want;
      }
      const int got = h_slope_dimension(val, a, h);
      rec.expect(got == want, [&] {
        return "slope-part dimension differs at iteration " +
               std::to_string(iter) + ", h=" + to_string(h);
      });
      rec.expect(got >= last, "slope-part dimension must be monotone");
      last = got;
    }
    rec.expect(h_slope_dimension(val, a, Rat(1000000)) == nonzero,
               "large-h limit should count the invertible part");
  }
}

// ---------------------------------------------------------------------------
// Suite 12: degree-duality of the stratification lengths.
// ---------------------------------------------------------------------------

inline void suite_length_duality(CheckRecorder& rec) {
  const std::vector<std::string> presets{
      "A1",           "A2",           "C2",           "GSp4",
      "GSp2g:g=1",    "GSp2g:g=2",    "GSp2g:g=3",    "product:A1xA1",
      "product:A1xA2", "res:A1^2",    "res:A2^2"};
  for (const std::string& preset : presets) {
    const RootDatum datum = preset_datum(preset);
    const WeylGroup weyl(datum);
    for (const auto& theta : all_theta_subsets(datum.rank())) {
      const LeviDatum levi = make_levi(datum, theta);
      const int w0m = weyl.longest_levi(levi);
      for (int w : weyl.kostant(levi)) {
        const int w_star = weyl.multiply(weyl.multiply(w0m, w), weyl.longest());
        rec.expect(weyl.in_kostant(w_star, levi), [&] {
          return preset + ": dual of " + weyl.name(w) + " is not minimal";
        });
        rec.expect(weyl.ell_plus(w_star) == weyl.ell_minus(w, levi), [&] {
          return preset + ": length duality fails at " + weyl.name(w);
        });
      }
    }
  }
}

}  // namespace checks_detail

// ---------------------------------------------------------------------------
// Public driver.
// ---------------------------------------------------------------------------

struct CheckSpec {
  std::string name;
  std::function<void(CheckRecorder&)> run;
};

inline const std::vector<CheckSpec>& all_check_specs() {
  static const std::vector<CheckSpec> specs{
      {"gsp4-table-ss", checks_detail::suite_table_ss},
      {"gsp4-table-sss", checks_detail::suite_table_sss},
      {"gl2-bounds", checks_detail::suite_gl2_bounds},
      {"gsp-structural-constants", checks_detail::suite_gsp_constants},
      {"gsp4-kostant-set", checks_detail::suite_kostant_gsp4},
      {"slope-condition-equivalences", checks_detail::suite_equivalences},
      {"weyl-lemmas", checks_detail::suite_weyl_lemmas},
      {"chamber-structure", checks_detail::suite_chamber_structure},
      {"flag-degrees", checks_detail::suite_cousin_bwb},
      {"verma-partition-counts", checks_detail::suite_verma_partition},
      {"newton-random", checks_detail::suite_newton_random},
      {"length-duality", checks_detail::suite_length_duality},
  };
  return specs;
}

inline CheckResult run_check(const CheckSpec& spec) {
  CheckRecorder rec(spec.name);
  const auto start = std::chrono::steady_clock::now();
  try {
    spec.run(rec);
  } catch (const std::exception& e) {
    rec.expect(false, [&] {
      return std::string("unexpected exception: ") + e.what();
    });
  }
  CheckResult result = rec.take();
  result.millis = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
  return result;
}

inline std::vector<CheckResult> run_all_checks(std::ostream* log = nullptr) {
  std::vector<CheckResult> out;
  for (const CheckSpec& spec : all_check_specs()) {
    CheckResult result = run_check(spec);
    if (log) {
      *log << (result.passed ? "ok   " : "FAIL ") << result.name << " ("
           << result.checks << " checks, " << result.millis << " ms)";
      if (!result.passed) *log << ": " << result.detail;
      *log << "\n";
    }
    out.push_back(std::move(result));
  }
  return out;
}

}  // namespace cousin
