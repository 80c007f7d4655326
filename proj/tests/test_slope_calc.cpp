#include <catch2/catch_amalgamated.hpp>

#include <cousin/slope_calc.hpp>

#include "test_util.hpp"

using cousin::BoundVariant;
using cousin::ConditionFlavor;
using cousin::ConditionKind;
using cousin::Error;
using cousin::Rat;
using cousin::RootDatum;
using cousin::Sign;
using cousin::SignClass;
using cousin::SlopeConditionArgs;
using cousin::Vec;
using cousin::WeylGroup;
using test_util::q;
using test_util::v;

namespace {

struct Setup {
  RootDatum datum;
  WeylGroup weyl;
  cousin::LeviDatum levi;
  explicit Setup(const std::string& preset, std::vector<int> theta)
      : datum(cousin::preset_datum(preset)),
        weyl(datum),
        levi(cousin::make_levi(datum, std::move(theta))) {}
};

}  // namespace

TEST_CASE("weight dictionary between the two conventions", "[slope_calc]") {
  // Rank-one similitude group, trivial Levi part, w = identity: the excluded
  // bound vector at kappa = (k; -k) is (k-2; -k).
  Setup gl2("GSp2g:g=1", {});
  const long long k = 5;
  Vec kappa = v({k, -k});
  std::vector<Vec> bound = cousin::slope_bound(
      gl2.datum, gl2.weyl, gl2.levi, gl2.weyl.identity(), kappa, Sign::plus,
      BoundVariant::conjectural);
  REQUIRE(bound == std::vector<Vec>{v({k - 2, -k})});
  REQUIRE(cousin::dot(Vec{q(-1, 2), q(-1, 2)}, bound[0]) == 1);

  Vec nu = cousin::nu_from_kappa(gl2.datum, gl2.weyl, gl2.levi, kappa,
                                 gl2.weyl.identity(), Sign::plus);
  REQUIRE(nu == -bound[0]);

  // The transported bound at the longest representative of the symplectic
  // rank-two group is (-k1, -k2; -k1-k2).
  Setup gsp4("GSp4", {0});
  int w_long = gsp4.weyl.parse("s1s0s1");
  Vec kappa2 = v({5, 3, -8});
  std::vector<Vec> bound2 = cousin::slope_bound(
      gsp4.datum, gsp4.weyl, gsp4.levi, w_long, kappa2, Sign::plus,
      BoundVariant::conjectural);
  REQUIRE(bound2 == std::vector<Vec>{v({-5, -3, -8})});

  // Round trip over the whole group on a small grid.
  for (int w = 0; w < gsp4.weyl.size(); ++w) {
    for (Sign sign : {Sign::plus, Sign::minus}) {
      Vec nu2 = cousin::nu_from_kappa(gsp4.datum, gsp4.weyl, gsp4.levi, kappa2,
                                      w, sign);
      REQUIRE(cousin::kappa_from_nu(gsp4.datum, gsp4.weyl, gsp4.levi, nu2, w,
                                    sign) == kappa2);
    }
  }
}

TEST_CASE("chamber sets attached to a weight", "[slope_calc]") {
  Setup gsp4("GSp4", {0});
  Vec kappa = v({5, 3, -8});
  std::vector<int> plus = cousin::c_set(gsp4.datum, gsp4.weyl, gsp4.levi,
                                        kappa, Sign::plus);
  REQUIRE(plus.size() == 1);
  REQUIRE(gsp4.weyl.name(plus[0]) == "Id");
  REQUIRE(cousin::ell_min_max(gsp4.datum, gsp4.weyl, gsp4.levi, kappa) ==
          std::pair<int, int>{0, 0});

  // Central shifted weight: every element belongs to both sets.
  Vec central = -gsp4.datum.rho;
  REQUIRE(cousin::c_set(gsp4.datum, gsp4.weyl, gsp4.levi, central, Sign::plus)
              .size() == 8);
  REQUIRE(cousin::w_set(gsp4.datum, gsp4.weyl, gsp4.levi, central, Sign::plus)
              .size() == 8);

  // Regular shifted weight in another chamber: still a singleton.
  Vec mid = v({3, -1, -2});
  REQUIRE(cousin::is_regular(gsp4.datum, mid + gsp4.datum.rho));
  auto [lo, hi] = cousin::ell_min_max(gsp4.datum, gsp4.weyl, gsp4.levi, mid);
  REQUIRE(lo == hi);
  REQUIRE(cousin::c_set(gsp4.datum, gsp4.weyl, gsp4.levi, mid, Sign::plus)
              .size() == 1);

  // Shifted weight on a wall: the interval is genuinely wider.
  Vec wall = v({1, 0, 0});
  REQUIRE(!cousin::is_regular(gsp4.datum, wall + gsp4.datum.rho));
  auto [wlo, whi] = cousin::ell_min_max(gsp4.datum, gsp4.weyl, gsp4.levi, wall);
  REQUIRE(wlo < whi);
}

TEST_CASE("expected slope lower bounds", "[slope_calc]") {
  Setup gsp4("GSp4", {0});
  Vec kappa = v({5, 3, -8});
  Vec t{q(-1, 2), q(-1, 2), q(-1, 2)};

  std::vector<Vec> s1 = cousin::slope_bound(gsp4.datum, gsp4.weyl, gsp4.levi,
                                            gsp4.weyl.parse("s1"), kappa,
                                            Sign::plus, BoundVariant::conjectural);
  REQUIRE(s1 == std::vector<Vec>{v({-2, 2, -8})});
  REQUIRE(cousin::dot(t, s1[0]) == 4);  // k2 + 1 at (k1,k2) = (5,3)

  std::vector<Vec> id_pair = cousin::slope_bound(
      gsp4.datum, gsp4.weyl, gsp4.levi, gsp4.weyl.identity(), kappa, Sign::plus,
      BoundVariant::proven_pair);
  REQUIRE(id_pair.size() == 2);
  REQUIRE(cousin::dot(t, id_pair[0]) == 0);
  REQUIRE(cousin::dot(t, id_pair[1]) == 3);

  // Only minimal coset representatives are accepted.
  REQUIRE_THROWS_AS(
      cousin::slope_bound(gsp4.datum, gsp4.weyl, gsp4.levi,
                          gsp4.weyl.parse("s0"), kappa, Sign::plus,
                          BoundVariant::conjectural),
      Error);
}

TEST_CASE("slope condition on the full group", "[slope_calc]") {
  Setup a1("A1", {});
  auto holds = [&](ConditionKind kind, ConditionFlavor flavor, Sign sign,
                   Vec weight, Vec lambda) {
    SlopeConditionArgs args;
    args.kind = kind;
    args.flavor = flavor;
    args.sign = sign;
    args.weight = std::move(weight);
    return cousin::slope_condition(a1.datum, a1.weyl, a1.levi, args, lambda);
  };

  // Plus form at a dominant weight k: fails exactly from k+2 upward.
  for (long long k : {0, 1, 3}) {
    REQUIRE(holds(ConditionKind::ss, ConditionFlavor::nu, Sign::plus, v({k}),
                  v({k + 1})));
    REQUIRE(!holds(ConditionKind::ss, ConditionFlavor::nu, Sign::plus, v({k}),
                   v({k + 2})));
    REQUIRE(!holds(ConditionKind::ss, ConditionFlavor::nu, Sign::plus, v({k}),
                   v({k + 3})));
  }

  // Minus form mirrors it through the longest element on both arguments.
  REQUIRE(holds(ConditionKind::ss, ConditionFlavor::nu, Sign::minus, v({0}),
                v({-1})));
  REQUIRE(!holds(ConditionKind::ss, ConditionFlavor::nu, Sign::minus, v({0}),
                 v({-2})));
  REQUIRE(!holds(ConditionKind::ss, ConditionFlavor::nu, Sign::minus, v({0}),
                 v({-3})));

  // The shifted weight must be dominant for this flavor.
  REQUIRE_THROWS_AS(holds(ConditionKind::ss, ConditionFlavor::nu, Sign::plus,
                          v({-2}), v({0})),
                    Error);
}

TEST_CASE("slope condition relative to a Levi", "[slope_calc]") {
  Setup gsp4("GSp4", {0});
  Vec kappa = v({5, 3, -8});
  SlopeConditionArgs args;
  args.kind = ConditionKind::ss;
  args.flavor = ConditionFlavor::M;
  args.sign = Sign::plus;
  args.weight = kappa;

  REQUIRE(cousin::slope_condition(gsp4.datum, gsp4.weyl, gsp4.levi, args,
                                  v({-3, 3, -8})));
  // Each excluded bound vector itself violates the condition.
  for (Vec bad : {v({-2, 2, -8}), v({3, -3, -8}), v({-5, -3, -8})})
    REQUIRE(!cousin::slope_condition(gsp4.datum, gsp4.weyl, gsp4.levi, args,
                                     bad));

  cousin::CompiledSlopeCondition cond =
      cousin::compile_slope_condition(gsp4.datum, gsp4.weyl, gsp4.levi, args);
  REQUIRE(cond.items.size() == 3);  // minimal representatives minus the chamber
  std::vector<std::string> labels;
  for (const auto& item : cond.items) labels.push_back(item.label);
  REQUIRE(labels == std::vector<std::string>{"s1", "s1s0", "s1s0s1"});
  REQUIRE(cousin::violating_items(gsp4.datum, cond, v({-2, 2, -8})) ==
          std::vector<int>{0});
  REQUIRE(cousin::violating_items(gsp4.datum, cond, v({-3, 3, -8})).empty());

  // This flavor demands a Levi-dominant weight when called directly.
  args.weight = v({3, 5, -8});
  REQUIRE_THROWS_AS(cousin::compile_slope_condition(gsp4.datum, gsp4.weyl,
                                                    gsp4.levi, args),
                    Error);

  // The single-representative flavor quantifies over the Levi reflections.
  SlopeConditionArgs mw;
  mw.kind = ConditionKind::ss;
  mw.flavor = ConditionFlavor::Mw;
  mw.sign = Sign::plus;
  mw.weight = kappa;
  mw.w = gsp4.weyl.identity();
  REQUIRE(cousin::slope_condition(gsp4.datum, gsp4.weyl, gsp4.levi, mw,
                                  v({0, 0, -8})));
  REQUIRE(!cousin::slope_condition(gsp4.datum, gsp4.weyl, gsp4.levi, mw,
                                   v({3, -1, -8})));
  mw.w.reset();
  REQUIRE_THROWS_AS(cousin::slope_condition(gsp4.datum, gsp4.weyl, gsp4.levi,
                                            mw, v({0, 0, -8})),
                    Error);

  // The strong single-representative form needs the representative too.
  SlopeConditionArgs sss;
  sss.kind = ConditionKind::sss;
  sss.flavor = ConditionFlavor::nu;
  sss.sign = Sign::plus;
  sss.weight = v({0, 0, 0});
  REQUIRE_THROWS_AS(cousin::slope_condition(gsp4.datum, gsp4.weyl, gsp4.levi,
                                            sss, v({0, 0, 0})),
                    Error);
}

TEST_CASE("boundary flavor accepts weights transported onto walls",
          "[slope_calc]") {
  Setup a1("A1", {});
  SlopeConditionArgs args;
  args.kind = ConditionKind::ss;
  args.flavor = ConditionFlavor::b;
  args.sign = Sign::plus;
  args.weight = v({-1});  // shifted weight sits exactly on the wall
  REQUIRE_NOTHROW(cousin::slope_condition(a1.datum, a1.weyl, a1.levi, args,
                                          v({0})));
}

TEST_CASE("valuation vectors of torus elements", "[slope_calc]") {
  RootDatum d = cousin::preset_datum("GSp4");
  cousin::CocharacterValuation u2 = cousin::make_cocharacter_valuation(
      d, Vec{q(-1, 2), q(-1, 2), q(-1, 2)});
  REQUIRE(u2.sign_class == SignClass::t_plus);
  REQUIRE(u2.min_pairing == Rat(0));
  REQUIRE(u2.max_pairing == Rat(1));

  cousin::CocharacterValuation u1 =
      cousin::make_cocharacter_valuation(d, v({0, -1, -1}));
  REQUIRE(u1.sign_class == SignClass::t_plus);
  REQUIRE(u1.max_pairing == Rat(2));

  REQUIRE(cousin::make_cocharacter_valuation(d, v({-1, -2, 0})).sign_class ==
          SignClass::t_plus_plus);
  REQUIRE(cousin::make_cocharacter_valuation(d, Vec{q(1, 2), q(1, 2), q(1, 2)})
              .sign_class == SignClass::t_minus);
  cousin::CocharacterValuation mixed =
      cousin::make_cocharacter_valuation(d, v({1, 0, 0}));
  REQUIRE(mixed.sign_class == SignClass::none);
  REQUIRE(!mixed.min_pairing.has_value());
  REQUIRE(std::string(cousin::sign_class_name(u2.sign_class)) == "T+");
}

TEST_CASE("symbolic affine forms render canonically", "[slope_calc]") {
  using cousin::AffineForm;
  auto text = [](AffineForm f) { return cousin::affine_to_string(f); };
  REQUIRE(text({{Rat(0), Rat(0)}, Rat(3)}) == "3");
  REQUIRE(text({{Rat(1), Rat(2)}, Rat(0)}) == "k1+2*k2");
  REQUIRE(text({{Rat(0), Rat(1)}, Rat(1)}) == "k2+1");
  REQUIRE(text({{Rat(-1), Rat(1)}, Rat(-1)}) == "-k1+k2-1");
  REQUIRE(text({{Rat(-2), Rat(0)}, Rat(5)}) == "-2*k1+5");
  REQUIRE(text({{Rat(0)}, Rat(0)}) == "0");
  REQUIRE(text({{q(1, 2)}, Rat(0)}) == "1/2*k1");
}

TEST_CASE("symbolic operator tables for the symplectic family", "[slope_calc]") {
  Setup gsp4("GSp4", {0});
  cousin::HeckeTable ss = cousin::hecke_table(gsp4.datum, gsp4.weyl,
                                              ConditionKind::ss);
  REQUIRE(ss.genus == 2);
  REQUIRE(ss.row_names == std::vector<std::string>{"U2", "U1"});
  REQUIRE(ss.col_names ==
          std::vector<std::string>{"Id", "s1", "s1s0", "s1s0s1"});
  REQUIRE(ss.row_classes == std::vector<std::string>{"T+", "T+"});
  auto cell = [&](const cousin::HeckeTable& t, int r, int c) {
    return cousin::affine_to_string(t.cells[r][c]);
  };
  REQUIRE(cell(ss, 0, 0) == "3");
  REQUIRE(cell(ss, 0, 1) == "k2+1");
  REQUIRE(cell(ss, 0, 2) == "k2+1");
  REQUIRE(cell(ss, 0, 3) == "k1+k2");
  REQUIRE(cell(ss, 1, 0) == "k2+3");
  REQUIRE(cell(ss, 1, 1) == "k2+3");
  REQUIRE(cell(ss, 1, 2) == "k1+2*k2");
  REQUIRE(cell(ss, 1, 3) == "k1+2*k2");

  cousin::HeckeTable sss = cousin::hecke_table(gsp4.datum, gsp4.weyl,
                                               ConditionKind::sss);
  REQUIRE(cell(sss, 0, 0) == "3");
  REQUIRE(cell(sss, 0, 1) == "k2");
  REQUIRE(cell(sss, 0, 2) == "k2");
  REQUIRE(cell(sss, 0, 3) == "k1+k2");
  REQUIRE(sss.cells[1] == ss.cells[1]);  // the second row agrees

  // Rank-one table: entries 1 and k.
  RootDatum gl2 = cousin::preset_datum("GSp2g:g=1");
  WeylGroup wgl(gl2);
  cousin::HeckeTable small = cousin::hecke_table(gl2, wgl, ConditionKind::ss);
  REQUIRE(small.row_names == std::vector<std::string>{"U1"});
  REQUIRE(cousin::affine_to_string(small.cells[0][0]) == "1");
  REQUIRE(cousin::affine_to_string(small.cells[0][1]) == "k1");
  cousin::HeckeTable small2 = cousin::hecke_table(gl2, wgl, ConditionKind::sss);
  REQUIRE(small2.cells == small.cells);

  // Non-symplectic presets are rejected.
  RootDatum a2 = cousin::preset_datum("A2");
  WeylGroup wa2(a2);
  REQUIRE_THROWS_AS(cousin::hecke_table(a2, wa2, ConditionKind::ss), Error);
}

TEST_CASE("dual weights of the plus/minus symmetries", "[slope_calc]") {
  Setup gsp4("GSp4", {0});
  Vec kappa = v({5, 3, -8});
  Vec dual = cousin::dual_kappa(gsp4.datum, gsp4.weyl, gsp4.levi, kappa);
  REQUIRE(cousin::dual_kappa(gsp4.datum, gsp4.weyl, gsp4.levi, dual) == kappa);
  REQUIRE(cousin::dual_nu(gsp4.datum, gsp4.weyl, v({0, 0, 0})) == v({0, 0, 0}));
  // Self-inverse on the nu side as well.
  Vec nu = v({2, 1, -5});
  REQUIRE(cousin::dual_nu(gsp4.datum, gsp4.weyl,
                          cousin::dual_nu(gsp4.datum, gsp4.weyl, nu)) == nu);
}
