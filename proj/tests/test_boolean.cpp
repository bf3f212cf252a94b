#include <doctest.h>

#include "slrep/boolean_resolution.hpp"
#include "slrep/order.hpp"
#include "support/enumerate.hpp"

using namespace slrep;

namespace {

FiniteSemilattice three_chain() {
  return FiniteSemilattice({"0", "a", "b"}, {0, 1, 2, 1, 1, 2, 2, 2, 2});
}

FiniteSemilattice square() {
  return FiniteSemilattice({"0", "p", "q", "1"},
                           {0, 1, 2, 3, 1, 1, 3, 3, 2, 3, 2, 3, 3, 3, 3, 3});
}

}  // namespace

TEST_CASE("Boolean embedding of a 3-chain over meet irreducibles") {
  auto emb = embed_boolean(three_chain(), EmbedMode::meet_irreducible);
  CHECK(emb.index_set == std::vector<int>{0, 1});
  // s maps to {x in the index set : s is not below x}
  CHECK(emb.j.map == std::vector<int>{0, 1, 3});
  CHECK(emb.j.is_homomorphism());
  CHECK(emb.j.is_injective());
}

TEST_CASE("Boolean embedding over the full powerset") {
  auto S = square();
  auto emb = embed_boolean(S, EmbedMode::powerset);
  CHECK(emb.boolean.size() == 16);
  CHECK(emb.j.is_homomorphism());
  CHECK(emb.j.is_injective());
  CHECK(emb.j.preserves_zero());
}

TEST_CASE("extension picks the least admissible values") {
  auto B = boolean_semilattice(2);
  // A = { {}, {0} }, f({}) = 0, f({0}) = a
  auto g = extend_hom(B, {0, 1}, {0, 1}, three_chain());
  CHECK(g == std::vector<int>{0, 1, 0, 1});
  SemilatticeHom gh{B, three_chain(), g};
  CHECK(gh.is_homomorphism());
}

TEST_CASE("extension agrees with f on its domain") {
  auto B = boolean_semilattice(3);
  auto S = square();
  // A = { {0}, {1}, {0,1} }, mapping the two atoms to p and q
  auto g = extend_hom(B, {1, 2, 3}, {1, 2, 3}, S);
  CHECK(g[1] == 1);
  CHECK(g[2] == 2);
  CHECK(g[3] == 3);
  SemilatticeHom gh{B, S, g};
  CHECK(gh.is_homomorphism());
}

TEST_CASE("extension input validation") {
  auto B = boolean_semilattice(2);
  // A not join-closed
  CHECK_THROWS_AS(extend_hom(B, {1, 2}, {1, 1}, three_chain()),
                  std::invalid_argument);
  // f not a homomorphism on A
  CHECK_THROWS_AS(extend_hom(B, {0, 1, 2, 3}, {0, 1, 1, 0}, three_chain()),
                  std::invalid_argument);
}

TEST_CASE("triangle factorization postconditions") {
  SemilatticeHom f{square(), three_chain(), {0, 1, 2, 2}};
  auto t = triangle_factor(f);
  CHECK(boolean_structure(t.boolean).has_value());
  CHECK(kernel(t.phi) == kernel(f));
  for (int x = 0; x < f.source.size(); ++x) CHECK(t.g(t.phi(x)) == f(x));
  CHECK(t.phi.is_homomorphism());
  CHECK(t.g.is_homomorphism());
}

TEST_CASE("tower of the 3-chain reproduces the constant system") {
  auto tower = synth_boolean_tower(three_chain(), 3, TowerVariant::zero_one);
  REQUIRE(tower.system.stages.size() == 3);
  for (const auto& stage : tower.system.stages) CHECK(stage.size() == 4);
  for (const auto& r : tower.system.transitions)
    CHECK(r.map == std::vector<int>{0, 1, 3, 3});
  for (const auto& leg : tower.cone.legs)
    CHECK(leg.map == std::vector<int>{0, 1, 2, 2});
  auto report = verify_cone(tower.system, tower.cone, 3);
  CHECK(report.certified());
  CHECK(report.stabilization_offset == 1);
}

TEST_CASE("tower variants agree at finite scale") {
  for (auto variant :
       {TowerVariant::plain, TowerVariant::zero, TowerVariant::zero_one}) {
    auto tower = synth_boolean_tower(square(), 4, variant);
    CHECK(verify_cone(tower.system, tower.cone, 4).certified());
  }
}

TEST_CASE("tower synthesis rejects non-distributive input") {
  FiniteSemilattice M3({"0", "x", "y", "z", "1"},
                       {0, 1, 2, 3, 4, 1, 1, 4, 4, 4, 2, 4, 2, 4, 4,
                        3, 4, 4, 3, 4, 4, 4, 4, 4, 4});
  CHECK_THROWS_AS(synth_boolean_tower(M3, 3, TowerVariant::zero),
                  std::invalid_argument);
}

TEST_CASE("cone verification flags an incompatible leg") {
  auto tower = synth_boolean_tower(three_chain(), 3, TowerVariant::zero);
  tower.cone.legs[0].map[1] = 2;  // break compatibility at stage 0
  auto report = verify_cone(tower.system, tower.cone, 3);
  CHECK(!report.certified());
  CHECK(!report.compatible);
  CHECK(report.defect_stage == 0);
}

TEST_CASE("cone verification flags a non-surjective final leg") {
  auto B = boolean_semilattice(1);
  SequentialSystem system{{B, B}, {identity_hom(B)}};
  FiniteSemilattice S = three_chain();
  Cone cone{S, {SemilatticeHom{B, S, {0, 1}}, SemilatticeHom{B, S, {0, 1}}}};
  auto report = verify_cone(system, cone, 2);
  CHECK(report.compatible);
  CHECK(!report.final_leg_surjective);
  CHECK(!report.certified());
}

TEST_CASE("extension exists for every hom out of a join-closed subset") {
  // spot check of the exhaustive oracle against the algorithm
  auto B = boolean_semilattice(2);
  auto S = three_chain();
  for (const auto& A : testing::join_closed_subsets(B))
    for (const auto& f : testing::all_homs_on_subset(B, A, S)) {
      CHECK(testing::extension_exists(B, A, f, S));
      auto g = extend_hom(B, A, f, S);
      SemilatticeHom gh{B, S, g};
      CHECK(gh.is_homomorphism());
      for (std::size_t i = 0; i < A.size(); ++i) CHECK(g[A[i]] == f[i]);
    }
}
