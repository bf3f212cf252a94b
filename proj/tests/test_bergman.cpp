#include <doctest.h>

#include "slrep/bergman.hpp"
#include "slrep/boolean_resolution.hpp"

using namespace slrep;

namespace {

FiniteSemilattice three_chain() {
  return FiniteSemilattice({"0", "a", "b"}, {0, 1, 2, 1, 1, 2, 2, 2, 2});
}

}  // namespace

TEST_CASE("shape validation") {
  BratteliTower tower;
  tower.levels = {MatricialShape{{1, 1}}, MatricialShape{{2, 1}}};
  tower.maps = {MultiplicityMatrix{{{1, 0}, {1, 1}}}};
  tower.unital = true;
  CHECK(tower_shapes_valid(tower));

  tower.levels[1].sizes = {3, 1};  // column sum 2 != 3 breaks unitality
  std::string why;
  CHECK(!tower_shapes_valid(tower, &why));
  CHECK(!why.empty());

  tower.unital = false;  // slack columns are fine without unitality
  CHECK(tower_shapes_valid(tower));

  tower.levels[1].sizes = {1, 1};  // column sum exceeds the target size
  CHECK(!tower_shapes_valid(tower));
}

TEST_CASE("unital tower over the 3-chain") {
  auto boolean_tower =
      synth_boolean_tower(three_chain(), 4, TowerVariant::zero_one);
  auto tower = synth_tower(boolean_tower.system, 4, true);
  REQUIRE(tower.levels.size() == 4);
  for (int i = 0; i < 4; ++i)
    CHECK(tower.levels[i].sizes == std::vector<long long>{i + 1, 1});
  for (const auto& m : tower.maps)
    CHECK(m.s == std::vector<std::vector<long long>>{{1, 0}, {1, 1}});
  CHECK(tower.unital);
  CHECK(tower_shapes_valid(tower));
  CHECK(verify_squares(tower, boolean_tower.system).ok);
}

TEST_CASE("non-unital towers pad empty columns to size one") {
  auto boolean_tower =
      synth_boolean_tower(three_chain(), 3, TowerVariant::zero);
  auto tower = synth_tower(boolean_tower.system, 3, false);
  CHECK(!tower.unital);
  CHECK(tower_shapes_valid(tower));
  for (const auto& level : tower.levels)
    for (long long t : level.sizes) CHECK(t >= 1);
  CHECK(verify_squares(tower, boolean_tower.system).ok);
}

TEST_CASE("induced semilattice maps come from row supports") {
  BratteliTower tower;
  tower.levels = {MatricialShape{{1, 1}}, MatricialShape{{2, 1}}};
  tower.maps = {MultiplicityMatrix{{{1, 0}, {1, 1}}}};
  auto f = nabla_v(tower, 0);
  CHECK(f.map == std::vector<int>{0, 1, 3, 3});
}

TEST_CASE("square verification detects a wrong multiplicity") {
  auto boolean_tower =
      synth_boolean_tower(three_chain(), 3, TowerVariant::zero_one);
  auto tower = synth_tower(boolean_tower.system, 3, true);
  tower.maps[0].s[0][1] = 1;  // support change breaks the square
  auto report = verify_squares(tower, boolean_tower.system);
  CHECK(!report.ok);
  CHECK(report.defect_level == 0);
}

TEST_CASE("stage ideal semilattice is the powerset of blocks") {
  auto S = idc_stage(MatricialShape{{3, 1}});
  CHECK(S.size() == 4);
  CHECK(S.join(1, 2) == 3);
}
