#include <catch2/catch_amalgamated.hpp>

#include <cousin/cousin_complex.hpp>

#include "test_util.hpp"

using cousin::Error;
using cousin::Rat;
using cousin::RootDatum;
using cousin::Sign;
using cousin::Vec;
using cousin::WeylGroup;
using test_util::v;

TEST_CASE("filtration complex on the full flag variety", "[cousin]") {
  RootDatum a1 = cousin::preset_datum("A1");
  WeylGroup w1(a1);
  cousin::CousinDescriptor desc = cousin::flag_cousin(a1, w1, v({3}), 4);
  REQUIRE(desc.variant == "flag");
  REQUIRE(desc.d == 1);
  REQUIRE(desc.terms.size() == 2);
  REQUIRE(desc.terms[0].size() == 1);
  REQUIRE(desc.terms[1].size() == 1);
  // Degree 0 carries the weight itself, degree 1 its reflected shift.
  REQUIRE(*desc.terms[0][0].weight == v({3}));
  REQUIRE(*desc.terms[1][0].weight == v({-5}));
  REQUIRE(desc.terms[0][0].character->anchor == v({3}));

  RootDatum a2 = cousin::preset_datum("A2");
  WeylGroup w2(a2);
  cousin::CousinDescriptor flag2 = cousin::flag_cousin(a2, w2, v({1, 1}), 3);
  REQUIRE(flag2.d == 3);
  std::vector<std::size_t> counts;
  for (const auto& layer : flag2.terms) counts.push_back(layer.size());
  REQUIRE(counts == std::vector<std::size_t>{1, 2, 2, 1});
  std::size_t total = 0;
  for (const auto& layer : flag2.terms) total += layer.size();
  REQUIRE(total == static_cast<std::size_t>(w2.size()));
}

TEST_CASE("alternating sum of the complex recovers the finite character",
          "[cousin]") {
  RootDatum d = cousin::preset_datum("A2");
  WeylGroup weyl(d);
  const Vec kappa = v({1, 1});
  const int depth = 6;
  cousin::CousinDescriptor desc = cousin::flag_cousin(d, weyl, kappa, depth);
  cousin::FormalCharacter acc;
  acc.anchor = kappa;
  acc.depth = depth;
  for (std::size_t p = 0; p < desc.terms.size(); ++p) {
    for (const auto& term : desc.terms[p]) {
      cousin::FormalCharacter shifted =
          cousin::reanchor(d, *term.character, kappa, depth);
      cousin::add_scaled(acc, shifted, p % 2 == 0 ? 1 : -1);
    }
  }
  REQUIRE(cousin::same_character(
      acc, cousin::weyl_character(d, weyl, kappa, depth)));
}

TEST_CASE("weights outside every reflected cone", "[cousin]") {
  RootDatum d = cousin::preset_datum("A1");
  WeylGroup weyl(d);
  // At a strictly dominant shift: big means not below the reflected weight.
  REQUIRE(cousin::big_weight(d, weyl, v({0}), v({0})));
  REQUIRE(!cousin::big_weight(d, weyl, v({-2}), v({0})));
  REQUIRE(!cousin::big_weight(d, weyl, v({-4}), v({0})));
  REQUIRE(cousin::big_weight(d, weyl, v({-1}), v({0})));  // off the cone lattice
  // Shifted weight at the wall fixed point: the test is vacuous.
  REQUIRE(cousin::big_weight(d, weyl, v({-100}), v({-1})));
  // The shifted weight must be dominant.
  REQUIRE_THROWS_AS(cousin::big_weight(d, weyl, v({0}), v({-2})), Error);
}

TEST_CASE("dominant representative of a shifted orbit", "[cousin]") {
  RootDatum d = cousin::preset_datum("C2");
  WeylGroup weyl(d);
  Vec rep = cousin::dominant_dot_rep(d, weyl, v({5, 3, -8}));
  REQUIRE(cousin::is_dominant(d, rep + d.rho));
  REQUIRE(rep == v({0, -2, -8}));
  // Dominant inputs are their own representatives.
  REQUIRE(cousin::dominant_dot_rep(d, weyl, v({0, -2, -8})) == v({0, -2, -8}));
}

TEST_CASE("cohomology of a line bundle on the flag variety", "[cousin]") {
  RootDatum a1 = cousin::preset_datum("A1");
  WeylGroup w1(a1);

  auto dominant = cousin::bwb(a1, w1, v({3}));
  REQUIRE(dominant.has_value());
  REQUIRE(dominant->degree == 0);
  REQUIRE(dominant->weight == v({3}));
  REQUIRE(dominant->dimension == 4);

  REQUIRE(!cousin::bwb(a1, w1, v({-1})).has_value());

  auto reflected = cousin::bwb(a1, w1, v({-3}));
  REQUIRE(reflected.has_value());
  REQUIRE(reflected->degree == 1);
  REQUIRE(reflected->weight == v({1}));
  REQUIRE(reflected->dimension == 2);

  RootDatum c2 = cousin::preset_datum("C2");
  WeylGroup wc(c2);
  auto big = cousin::bwb(c2, wc, v({5, 3, -8}));
  REQUIRE(big.has_value());
  REQUIRE(wc.name(big->w) == "s1s0s1");
  REQUIRE(big->degree == 3);
  REQUIRE(big->weight == v({0, -2, -8}));
  REQUIRE(big->dimension == 10);
}

TEST_CASE("amplitude of the perfect complex", "[cousin]") {
  RootDatum d = cousin::preset_datum("A1");
  WeylGroup weyl(d);
  REQUIRE(cousin::bw_amplitude(d, weyl, v({3})) == std::pair<int, int>{0, 0});
  REQUIRE(cousin::bw_amplitude(d, weyl, v({-3})) == std::pair<int, int>{1, 1});
  REQUIRE(cousin::bw_amplitude(d, weyl, v({-1})) == std::pair<int, int>{0, 1});
  REQUIRE(cousin::flag_c_set(d, weyl, v({-1})).size() == 2);
  REQUIRE(cousin::flag_c_set(d, weyl, v({3})).size() == 1);
}

TEST_CASE("cohomology degrees over the smaller flag variety", "[cousin]") {
  RootDatum d = cousin::preset_datum("GSp4");
  WeylGroup weyl(d);
  cousin::LeviDatum levi = cousin::make_levi(d, {0});
  Vec kappa = v({5, 3, -8});

  cousin::CousinDescriptor plus =
      cousin::shimura_cousin_shape(d, weyl, levi, kappa, Sign::plus);
  REQUIRE(plus.d == 3);
  std::vector<std::string> order;
  for (const auto& layer : plus.terms) {
    REQUIRE(layer.size() == 1);
    order.push_back(layer[0].label);
  }
  REQUIRE(order == std::vector<std::string>{"Id", "s1", "s1s0", "s1s0s1"});

  // The minus variant grades by the complementary length.
  cousin::CousinDescriptor minus =
      cousin::shimura_cousin_shape(d, weyl, levi, kappa, Sign::minus);
  std::vector<std::string> rev;
  for (const auto& layer : minus.terms) rev.push_back(layer[0].label);
  REQUIRE(rev == std::vector<std::string>{"s1s0s1", "s1s0", "s1", "Id"});

  // Levi dominance is required here.
  REQUIRE_THROWS_AS(
      cousin::shimura_cousin_shape(d, weyl, levi, v({3, 5, -8}), Sign::plus),
      Error);

  cousin::ClassicalRanges ranges =
      cousin::classical_ranges(d, weyl, levi, kappa);
  REQUIRE(ranges.cuspidal == std::pair<int, int>{0, 0});
  REQUIRE(ranges.non_cuspidal == std::pair<int, int>{0, 3});
  REQUIRE(ranges.interior == std::pair<int, int>{0, 0});
}
