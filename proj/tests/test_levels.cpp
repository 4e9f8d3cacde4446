// Level vectors: the commutative filtration model. Containment order,
// relative index exponents, conjugation by translations and Weyl elements,
// and the containment/stability/estimate sweeps built from them.

#include <catch2/catch_amalgamated.hpp>

#include <parahoric/alcove.hpp>
#include <parahoric/levels.hpp>
#include <parahoric/root_system.hpp>
#include <parahoric/subset.hpp>
#include <parahoric/weyl.hpp>

#include <vector>

using namespace parahoric;

TEST_CASE("chamber fixator levels equal the polyhedron read-off", "[levels]") {
  for (const char* name : {"A2", "B2", "G2", "B3"}) {
    INFO("type " << name);
    RootSystem rs(name);
    CHECK(chamber_levels(rs) == LevelVector::from_polyhedron(rs, fundamental_chamber(rs)));
    LevelVector lv = chamber_levels(rs);
    for (int r = 0; r < rs.root_count(); ++r) {
      REQUIRE(lv.at(r).has_value());
      CHECK(*lv.at(r) == (rs.is_positive(r) ? 0 : 1));
    }
  }
}

TEST_CASE("opposite unipotent part is level one exactly off the subset", "[levels]") {
  RootSystem b2("B2");
  LevelVector lv = opposite_unipotent_levels(b2, SubsetI::of({0}));
  std::vector<int> expect{b2.root_index({-1, -2}), b2.root_index({-1, -1}),
                          b2.root_index({0, -1})};
  std::sort(expect.begin(), expect.end());
  CHECK(lv.support() == expect);
  for (int r : lv.support()) CHECK(*lv.at(r) == 1);

  CHECK(opposite_unipotent_levels(b2, SubsetI::full(2)).support().empty());
  CHECK(opposite_unipotent_levels(b2, SubsetI{}).support().size() == 4);
}

TEST_CASE("containment is the pointwise reversed order", "[levels]") {
  RootSystem a2("A2");
  LevelVector base = opposite_unipotent_levels(a2, SubsetI{});
  CHECK(level_contains(base, base));

  LevelVector deeper = base;
  deeper.at(0) = *deeper.at(0) + 1;
  CHECK(level_contains(base, deeper));
  CHECK_FALSE(level_contains(deeper, base));

  // a factor where the outer group has none breaks containment
  LevelVector wider = base;
  wider.at(a2.root_index({1, 0})) = 0;
  CHECK_FALSE(level_contains(base, wider));
  CHECK(level_contains(chamber_levels(a2), base));
}

TEST_CASE("relative index exponents for dominant translation conjugates", "[levels]") {
  RootSystem a2("A2");

  LevelVector base = opposite_unipotent_levels(a2, SubsetI{});
  Coweight rho = Coweight::fundamental(2, 0) + Coweight::fundamental(2, 1);
  LevelVector conj = conjugate_by_translation(a2, base, rho);
  CHECK(index_exponent(conj, base) == 4);
  CHECK(index_exponent(base, base) == 0);

  LevelVector base1 = opposite_unipotent_levels(a2, SubsetI::of({0}));
  LevelVector conj1 = conjugate_by_translation(a2, base1, Coweight::fundamental(2, 1));
  CHECK(index_exponent(conj1, base1) == 2);

  CHECK_THROWS_AS(index_exponent(base, conj), NotNested);  // reversed nesting
  // infinite relative index: finite outer levels over a trivial inner factor
  CHECK_THROWS_AS(index_exponent(base, chamber_levels(a2)), NotNested);
}

TEST_CASE("translation conjugation shifts by the pairing and round-trips", "[levels]") {
  RootSystem a2("A2");
  LevelVector lv = chamber_levels(a2);
  Coweight lam = Coweight::fundamental(2, 0);
  LevelVector shifted = conjugate_by_translation(a2, lv, lam);
  CHECK(*shifted.at(a2.root_index({1, 0})) == -1);
  CHECK(*shifted.at(a2.root_index({1, 1})) == -1);
  CHECK(*shifted.at(a2.root_index({0, 1})) == 0);
  CHECK(*shifted.at(a2.root_index({-1, 0})) == 2);

  RootSystem b3("B3");
  LevelVector base = chamber_levels(b3);
  Coweight mixed = Coweight::zero(3);
  mixed.coords = {Rat(1), Rat(-2), Rat(3)};
  LevelVector there = conjugate_by_translation(b3, base, mixed);
  LevelVector back = conjugate_by_translation(b3, there, mixed.scaled(Rat(-1)));
  CHECK(back == base);

  Coweight half = Coweight::fundamental(2, 0).scaled(Rat(1, 2));
  CHECK_THROWS_AS(conjugate_by_translation(a2, chamber_levels(a2), half), NonIntegralCoweight);
}

TEST_CASE("Weyl conjugation transports levels along the root action", "[levels]") {
  RootSystem b2("B2");
  WeylGroup g(b2);
  LevelVector base = chamber_levels(b2);
  for (int e = 0; e < static_cast<int>(g.size()); ++e) {
    LevelVector conj = conjugate_by_weyl(b2, base, g.element(e));
    for (int r = 0; r < b2.root_count(); ++r)
      CHECK(conj.at(g.apply(e, r)) == base.at(r));
    LevelVector back = conjugate_by_weyl(b2, conj, g.element(g.inverse(e)));
    CHECK(back == base);
  }
}

TEST_CASE("dominant translations never lower the opposite unipotent levels", "[levels]") {
  for (const char* name : {"A3", "B3", "C3", "G2", "F4"}) {
    INFO("type " << name);
    RootSystem rs(name);
    for (SubsetI I : all_subsets_lex(rs.rank())) {
      auto cex = translation_containment_counterexample(rs, I);
      if (cex) INFO("subset " << I.to_string_one_based() << " root " << cex->root);
      CHECK_FALSE(cex.has_value());
    }
  }
}

TEST_CASE("every Weyl conjugate of the opposite unipotent part fixes the chamber", "[levels]") {
  for (const char* name : {"A2", "B2", "A3", "B3", "C3", "G2"}) {
    INFO("type " << name);
    RootSystem rs(name);
    CHECK_FALSE(weyl_containment_counterexample(rs).has_value());
  }
}

TEST_CASE("the parabolic subgroup permutes the opposite unipotent factors", "[levels]") {
  for (const char* name : {"B3", "F4", "A1xB2"}) {
    INFO("type " << name);
    RootSystem rs(name);
    for (SubsetI I : all_subsets_lex(rs.rank())) {
      auto cex = levi_stability_counterexample(rs, I);
      if (cex) INFO("subset " << I.to_string_one_based() << " root " << cex->root);
      CHECK_FALSE(cex.has_value());
    }
  }
}

TEST_CASE("contraction estimate minima at rank 2", "[levels]") {
  RootSystem b2("B2");
  CHECK(neighborhood_estimate(b2, SubsetI{}).min_pairing == 1);
  CHECK(neighborhood_estimate(b2, SubsetI::of({0})).min_pairing == 1);
  CHECK(neighborhood_estimate(b2, SubsetI::of({1})).min_pairing == 1);
  NeighborhoodEstimate full = neighborhood_estimate(b2, SubsetI::full(2));
  CHECK_FALSE(full.min_pairing.has_value());  // nothing to contract
  CHECK(full.ok);

  RootSystem g2("G2");
  CHECK(neighborhood_estimate(g2, SubsetI::of({0})).min_pairing == 1);
  CHECK(neighborhood_estimate(g2, SubsetI::of({1})).min_pairing == 1);
  CHECK(neighborhood_estimate(g2, SubsetI{}).min_pairing == 1);
}

TEST_CASE("index exponents along the translation tower are additive", "[levels]") {
  RootSystem b2("B2");
  SubsetI I = SubsetI::of({1});
  LevelVector base = opposite_unipotent_levels(b2, I);
  Coweight nu = t_I_coweight(b2, I);
  std::vector<LevelVector> tower{base};
  for (int k = 0; k < 3; ++k) tower.push_back(conjugate_by_translation(b2, tower.back(), nu));
  CHECK(index_exponent(tower[1], tower[0]) == 3);
  CHECK(index_exponent(tower[2], tower[1]) == 3);
  CHECK(index_exponent(tower[3], tower[2]) == 3);
  CHECK(index_exponent(tower[3], tower[0]) == 9);

  RootSystem a2("A2");
  LevelVector b0 = opposite_unipotent_levels(a2, SubsetI{});
  Coweight nu0 = t_I_coweight(a2, SubsetI{});
  LevelVector b1 = conjugate_by_translation(a2, b0, nu0);
  LevelVector b2v = conjugate_by_translation(a2, b1, nu0);
  CHECK(index_exponent(b1, b0) == 4);
  CHECK(index_exponent(b2v, b0) == 8);
}
