#include <catch2/catch_amalgamated.hpp>

#include <cousin/char_ring.hpp>
#include <cousin/weyl.hpp>

#include "test_util.hpp"

using cousin::Error;
using cousin::FormalCharacter;
using cousin::Rat;
using cousin::RootDatum;
using cousin::Vec;
using cousin::WeylGroup;
using test_util::v;

TEST_CASE("highest-weight module character in rank one", "[char_ring]") {
  RootDatum d = cousin::preset_datum("A1");
  FormalCharacter chr = cousin::verma_character(d, v({0}), 3);
  REQUIRE(chr.anchor == v({0}));
  REQUIRE(chr.depth == 3);
  for (long long k : {0, -2, -4, -6})
    REQUIRE(cousin::coefficient(d, chr, v({k})) == 1);
  REQUIRE(cousin::coefficient(d, chr, v({1})) == 0);   // above the anchor
  REQUIRE(cousin::coefficient(d, chr, v({-1})) == 0);  // off the root lattice
  REQUIRE_THROWS_AS(cousin::coefficient(d, chr, v({-8})), Error);
}

TEST_CASE("anchor coefficient is one and partition counts appear",
          "[char_ring]") {
  RootDatum d = cousin::preset_datum("A2");
  FormalCharacter chr = cousin::verma_character(d, v({0, 0}), 2);
  REQUIRE(cousin::coefficient(d, chr, v({0, 0})) == 1);
  // Two ways down to -alpha0-alpha1: the sum root, or both simples.
  REQUIRE(cousin::coefficient(d, chr, v({-1, -1})) == 2);
  REQUIRE(cousin::coefficient(d, chr, v({-2, 1})) == 1);
}

TEST_CASE("finite-dimensional character truncations", "[char_ring]") {
  RootDatum a1 = cousin::preset_datum("A1");
  WeylGroup w1(a1);
  FormalCharacter chr = cousin::weyl_character(a1, w1, v({2}), 8);
  for (long long k : {2, 0, -2})
    REQUIRE(cousin::coefficient(a1, chr, v({k})) == 1);
  REQUIRE(cousin::coefficient(a1, chr, v({-4})) == 0);
  REQUIRE(cousin::coefficient(a1, chr, v({-6})) == 0);

  RootDatum a2 = cousin::preset_datum("A2");
  WeylGroup w2(a2);
  // Adjoint-sized module at the weight pairing to (1,1) with the coroots.
  FormalCharacter adj = cousin::weyl_character(a2, w2, v({1, 1}), 8);
  long long total = 0;
  for (const auto& [weight, mult] : cousin::character_entries(a2, adj)) {
    REQUIRE(mult > 0);
    total += mult;
  }
  REQUIRE(total == 8);
  REQUIRE(cousin::coefficient(a2, adj, v({0, 0})) == 2);
  REQUIRE(cousin::coefficient(a2, adj, v({1, 1})) == 1);
  REQUIRE(cousin::coefficient(a2, adj, v({-1, 2})) == 1);

  // The zero weight gives the one-dimensional module.
  FormalCharacter triv = cousin::weyl_character(a2, w2, v({0, 0}), 5);
  REQUIRE(cousin::character_entries(a2, triv).size() == 1);

  REQUIRE_THROWS_AS(cousin::weyl_character(a1, w1, v({-1}), 4), Error);
}

TEST_CASE("dimension formula", "[char_ring]") {
  RootDatum a1 = cousin::preset_datum("A1");
  for (long long k = 0; k <= 6; ++k)
    REQUIRE(cousin::weyl_dimension(a1, v({k})) == k + 1);

  RootDatum a2 = cousin::preset_datum("A2");
  REQUIRE(cousin::weyl_dimension(a2, v({1, 1})) == 8);
  REQUIRE(cousin::weyl_dimension(a2, v({0, 0})) == 1);

  RootDatum c2 = cousin::preset_datum("C2");
  REQUIRE(cousin::weyl_dimension(c2, v({0, -2, -8})) == 10);
  // A weight with singular shift has an empty module.
  REQUIRE(cousin::weyl_dimension(c2, v({1, 0, 0})) == 0);
  // Non-integral coroot pairings are rejected.
  REQUIRE_THROWS_AS(
      cousin::weyl_dimension(c2, Vec{test_util::q(1, 2), Rat(0), Rat(0)}),
      Error);
}

TEST_CASE("truncated alternating sum lands on the finite character",
          "[char_ring]") {
  RootDatum d = cousin::preset_datum("A2");
  WeylGroup weyl(d);
  const Vec lambda = v({1, 1});
  const int depth = 6;
  FormalCharacter acc;
  acc.anchor = lambda;
  acc.depth = depth;
  for (int w = 0; w < weyl.size(); ++w) {
    Vec mu = weyl.dot(w, lambda);
    FormalCharacter term = cousin::verma_character(d, mu, depth);
    FormalCharacter shifted = cousin::reanchor(d, term, lambda, depth);
    cousin::add_scaled(acc, shifted, weyl.length(w) % 2 == 0 ? 1 : -1);
  }
  REQUIRE(cousin::same_character(acc, cousin::weyl_character(d, weyl, lambda, depth)));
}

TEST_CASE("anchor changes and truncation rules", "[char_ring]") {
  RootDatum d = cousin::preset_datum("A1");
  FormalCharacter chr = cousin::verma_character(d, v({0}), 4);
  FormalCharacter moved = cousin::reanchor(d, chr, v({2}), 5);
  REQUIRE(moved.anchor == v({2}));
  REQUIRE(cousin::coefficient(d, moved, v({0})) == 1);
  REQUIRE(cousin::coefficient(d, moved, v({2})) == 0);
  // Asking for more depth than the source computed is rejected.
  REQUIRE_THROWS_AS(cousin::reanchor(d, chr, v({2}), 6), Error);
  // Anchors must differ by a root-lattice vector.
  REQUIRE_THROWS_AS(cousin::reanchor(d, chr, v({1}), 2), Error);
  // Support must stay below the new anchor.
  REQUIRE_THROWS_AS(cousin::reanchor(d, chr, v({-2}), 1), Error);

  FormalCharacter other = cousin::verma_character(d, v({2}), 4);
  REQUIRE_THROWS_AS(cousin::add_scaled(other, chr, 1), Error);
}

TEST_CASE("root-cone partial orders", "[char_ring]") {
  RootDatum a1 = cousin::preset_datum("A1");
  REQUIRE(cousin::leq_absolute(a1, v({1}), v({2})));
  REQUIRE(cousin::leq_absolute(a1, v({2}), v({2})));
  REQUIRE(!cousin::leq_absolute(a1, v({2}), v({1})));

  RootDatum c2 = cousin::preset_datum("GSp4");
  // Difference needs coefficient -6 on the first simple root: not below.
  REQUIRE(!cousin::leq_absolute(c2, v({3, -3, -8}), v({-3, 3, -8})));
  REQUIRE(cousin::leq_absolute(c2, v({-3, 3, -8}), v({3, -3, -8})));
  // Central coordinates must match exactly.
  REQUIRE(!cousin::leq_absolute(c2, v({0, 0, 0}), v({0, 0, 1})));

  // Split order on the restriction-of-scalars preset averages first.
  RootDatum res = cousin::preset_datum("res:A1^2");
  REQUIRE(cousin::leq_split(res, v({1, 1}), v({3, 3})));
  REQUIRE(!cousin::leq_split(res, v({3, 3}), v({1, 1})));
}
