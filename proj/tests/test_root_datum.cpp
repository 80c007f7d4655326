#include <catch2/catch_amalgamated.hpp>

#include <cousin/root_datum.hpp>

#include "test_util.hpp"

using cousin::Chamber;
using cousin::Error;
using cousin::Rat;
using cousin::RootDatum;
using cousin::Vec;
using test_util::q;
using test_util::v;

TEST_CASE("rank-one preset", "[root_datum]") {
  RootDatum d = cousin::preset_datum("A1");
  REQUIRE(d.dim == 1);
  REQUIRE(d.simple_roots == std::vector<Vec>{v({2})});
  REQUIRE(d.simple_coroots == std::vector<Vec>{v({1})});
  REQUIRE(d.rho == v({1}));
  REQUIRE(d.positive_roots.size() == 1);
  REQUIRE(cousin::pairing(d.rho, d.simple_coroots[0]) == 1);
}

TEST_CASE("rank-two type A preset", "[root_datum]") {
  RootDatum d = cousin::preset_datum("A2");
  REQUIRE(d.dim == 2);
  REQUIRE(d.rho == v({1, 1}));
  REQUIRE(d.positive_roots.size() == 3);
  REQUIRE(d.is_positive_root(v({1, 1})));  // the highest root alpha_0 + alpha_1
  REQUIRE(!d.is_root(v({2, 2})));
}

TEST_CASE("symplectic similitude preset structure", "[root_datum]") {
  RootDatum d = cousin::preset_datum("GSp4");
  REQUIRE(d.dim == 3);
  REQUIRE(d.simple_roots == std::vector<Vec>{v({1, -1, 0}), v({-2, 0, 0})});
  REQUIRE(d.simple_coroots == std::vector<Vec>{v({1, -1, 0}), v({-1, 0, 0})});
  REQUIRE(d.rho == v({-1, -2, 0}));
  REQUIRE(d.positive_roots.size() == 4);
  // Same datum under its type-C name.
  REQUIRE(cousin::preset_datum("C2").simple_roots == d.simple_roots);

  cousin::LeviDatum levi = cousin::make_levi(d, {0});
  REQUIRE(levi.d == 3);
  REQUIRE(cousin::two_rho_nc(d, levi) == v({-3, -3, 0}));
  REQUIRE(cousin::rho_levi(d, levi) == Vec{q(1, 2), q(-1, 2), Rat(0)});
}

TEST_CASE("symplectic similitude family scales with the genus", "[root_datum]") {
  for (int g = 1; g <= 4; ++g) {
    RootDatum d = cousin::preset_datum("GSp2g:g=" + std::to_string(g));
    REQUIRE(d.dim == g + 1);
    REQUIRE(static_cast<int>(d.positive_roots.size()) == g * g);
    Vec rho(static_cast<std::size_t>(g + 1), Rat(0));
    for (int i = 0; i < g; ++i) rho[i] = Rat(-(i + 1));
    REQUIRE(d.rho == rho);
    // Siegel-type Levi: all simple roots except the last (long) one.
    std::vector<int> theta;
    for (int i = 0; i + 1 < d.rank(); ++i) theta.push_back(i);
    cousin::LeviDatum levi = cousin::make_levi(d, theta);
    REQUIRE(levi.d == g * (g + 1) / 2);
    Vec nc(static_cast<std::size_t>(g + 1), Rat(-(g + 1)));
    nc[g] = Rat(0);
    REQUIRE(cousin::two_rho_nc(d, levi) == nc);
  }
}

TEST_CASE("pairing is the exact bilinear form", "[root_datum]") {
  // Symplectic pairing sample: with (k1,k2) = (5,3) the contraction below
  // evaluates to k2 + 3 = 6.
  REQUIRE(cousin::pairing(v({0, -1, -1}), v({0, 2, -8})) == 6);
  REQUIRE(cousin::pairing(v({7, -5, 13}), v({0, 0, 0})) == 0);
  REQUIRE_THROWS_AS(cousin::pairing(v({1}), v({1, 2})), Error);
}

TEST_CASE("sum of positive roots is twice rho", "[root_datum]") {
  for (const char* name : {"A1", "A2", "C2", "GSp2g:g=3", "product:A1xA2"}) {
    RootDatum d = cousin::preset_datum(name);
    Vec acc = cousin::zero_vec(d.dim);
    for (const Vec& root : d.positive_roots) acc = acc + root;
    REQUIRE(acc == Rat(2) * d.rho);
    for (const Vec& coroot : d.simple_coroots)
      REQUIRE(cousin::pairing(d.rho, coroot) == 1);
  }
}

TEST_CASE("dominance tests for both chambers", "[root_datum]") {
  RootDatum d = cousin::preset_datum("GSp4");
  cousin::LeviDatum levi = cousin::make_levi(d, {0});
  REQUIRE(cousin::is_dominant(d, v({5, 3, -8}), Chamber::M, &levi));
  REQUIRE(!cousin::is_dominant(d, v({5, 3, -8})));
  REQUIRE(cousin::is_dominant(d, v({-1, -2, 0})));  // rho itself
  REQUIRE(cousin::is_dominant(d, v({0, 0, 0})));
  REQUIRE(cousin::is_dominant(d, v({0, 0, 0}), Chamber::M, &levi));
  REQUIRE(cousin::is_antidominant(d, v({0, 1, 4})));
  REQUIRE(cousin::is_regular(d, v({-1, -2, 0})));
  REQUIRE(!cousin::is_regular(d, v({1, 1, 0})));
}

TEST_CASE("product preset is the block direct sum", "[root_datum]") {
  RootDatum d = cousin::preset_datum("product:A1xA1");
  REQUIRE(d.dim == 2);
  REQUIRE(d.simple_roots == std::vector<Vec>{v({2, 0}), v({0, 2})});
  REQUIRE(d.rho == v({1, 1}));
  REQUIRE(d.gamma_group.size() == 1);  // trivial symmetry group
}

TEST_CASE("restriction-of-scalars preset averages over the symmetry",
          "[root_datum]") {
  RootDatum d = cousin::preset_datum("res:A1^2");
  REQUIRE(d.dim == 2);
  REQUIRE(d.gamma_group.size() == 2);
  // Coordinate swap identifies the two blocks: averaging projector.
  REQUIRE(cousin::restrict_to_split(d, v({4, 0})) == v({2, 2}));
  REQUIRE(cousin::restrict_to_split(d, v({3, 3})) == v({3, 3}));
  // Idempotent on its image.
  Vec r = cousin::restrict_to_split(d, v({5, -1}));
  REQUIRE(cousin::restrict_to_split(d, r) == r);
  REQUIRE(cousin::is_gamma_invariant(d, r));
  // Both simple roots restrict to the same class.
  REQUIRE(d.delta_restricted.size() == 1);
  // Trivial symmetry group: restriction is the identity.
  RootDatum plain = cousin::preset_datum("A2");
  REQUIRE(cousin::restrict_to_split(plain, v({2, 5})) == v({2, 5}));
}

TEST_CASE("levi validation and custom construction errors", "[root_datum]") {
  RootDatum d = cousin::preset_datum("A2");
  REQUIRE_THROWS_AS(cousin::make_levi(d, {2}), Error);
  REQUIRE_THROWS_AS(cousin::make_levi(d, {-1}), Error);
  // Mismatched root/coroot pairing (must be 2 on the diagonal).
  REQUIRE_THROWS_AS(
      cousin::make_root_datum(1, {v({2})}, {v({2})}, {}, "custom"),
      Error);
  // Dimension mismatch between roots and ambient space.
  REQUIRE_THROWS_AS(
      cousin::make_root_datum(2, {v({2})}, {v({1})}, {}, "custom"),
      Error);
  REQUIRE_THROWS_AS(cousin::preset_datum("E8"), Error);
  try {
    cousin::preset_datum("E8");
  } catch (const Error& e) {
    REQUIRE(e.exit_code() == 2);
    REQUIRE(e.module_name() == "root_datum");
  }
}

TEST_CASE("levi subdatum bookkeeping", "[root_datum]") {
  RootDatum d = cousin::preset_datum("GSp4");
  cousin::LeviDatum levi = cousin::make_levi(d, {0});
  REQUIRE(levi.theta == std::vector<int>{0});
  int inside = 0;
  for (bool b : levi.positive_in_levi) inside += b ? 1 : 0;
  REQUIRE(inside == 1);
  REQUIRE(levi.levi_positive.size() == 1);
  REQUIRE(levi.non_levi_positive.size() == 3);
  // 2*rho decomposes into the Levi and transverse halves.
  Vec total = Rat(2) * cousin::rho_levi(d, levi) + cousin::two_rho_nc(d, levi);
  REQUIRE(total == Rat(2) * d.rho);
}
