#include "slrep/bergman.hpp"

#include <algorithm>
#include <stdexcept>

#include "slrep/monoid.hpp"

namespace slrep {

bool tower_shapes_valid(const BratteliTower& tower, std::string* why) {
  auto fail = [&](const std::string& msg) {
    if (why) *why = msg;
    return false;
  };
  if (tower.levels.empty()) {
    if (!tower.maps.empty()) return fail("maps without levels");
  } else if (tower.maps.size() + 1 != tower.levels.size()) {
    return fail("level/map count mismatch");
  }
  for (const auto& level : tower.levels)
    for (long long t : level.sizes)
      if (t < 1) return fail("block size < 1");
  for (std::size_t i = 0; i < tower.maps.size(); ++i) {
    const auto& s = tower.maps[i];
    const auto& from = tower.levels[i].sizes;
    const auto& to = tower.levels[i + 1].sizes;
    if (s.rows() != static_cast<int>(from.size()) ||
        (s.rows() > 0 && s.cols() != static_cast<int>(to.size())))
      return fail("matrix shape mismatch at level " + std::to_string(i));
    if (s.rows() == 0 && !to.empty()) return fail("matrix shape mismatch");
    for (int j = 0; j < static_cast<int>(to.size()); ++j) {
      long long sum = 0;
      for (int k = 0; k < s.rows(); ++k) {
        if (s.s[k][j] < 0) return fail("negative multiplicity");
        sum += s.s[k][j] * from[k];
      }
      if (sum > to[j]) return fail("embedding invalid at level " +
                                   std::to_string(i) + " column " +
                                   std::to_string(j));
      if (tower.unital && sum != to[j])
        return fail("unital tower with strict inequality at level " +
                    std::to_string(i) + " column " + std::to_string(j));
    }
  }
  return true;
}

BratteliTower synth_tower(const SequentialSystem& boolean_tower, int depth,
                          bool unital) {
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  if (static_cast<int>(boolean_tower.stages.size()) < depth)
    throw std::invalid_argument("boolean tower shallower than requested depth");

  std::vector<BooleanStructure> structures;
  for (int i = 0; i < depth; ++i) {
    auto bs = boolean_structure(boolean_tower.stages[i]);
    if (!bs) throw std::invalid_argument("stage " + std::to_string(i) +
                                         " is not Boolean");
    structures.push_back(std::move(*bs));
  }

  BratteliTower tower;
  tower.unital = unital;
  tower.levels.push_back(
      MatricialShape{std::vector<long long>(structures[0].rank, 1)});

  for (int i = 0; i + 1 < depth; ++i) {
    const auto& f = boolean_tower.transitions[i];
    if (unital) {
      SemilatticeHom h = f;
      if (!h.preserves_one())
        throw std::invalid_argument(
            "unital tower requires 1-preserving transitions");
    }
    const int k = structures[i].rank;
    const int l = structures[i + 1].rank;
    // s_ij = 1 iff atom j of the next stage lies below f(atom i).
    MultiplicityMatrix s;
    s.s.assign(k, std::vector<long long>(l, 0));
    for (int a = 0; a < k; ++a) {
      int image = f.map[structures[i].iso[1 << a]];
      for (int b = 0; b < l; ++b)
        if (boolean_tower.stages[i + 1].leq(structures[i + 1].iso[1 << b],
                                            image))
          s.s[a][b] = 1;
    }
    std::vector<long long> sizes(l, 0);
    for (int b = 0; b < l; ++b) {
      long long sum = 0;
      for (int a = 0; a < k; ++a) sum += s.s[a][b] * tower.levels.back().sizes[a];
      sizes[b] = unital ? sum : std::max<long long>(sum, 1);
      if (unital && sum == 0)
        throw std::invalid_argument("unital tower with an empty column");
    }
    tower.maps.push_back(std::move(s));
    tower.levels.push_back(MatricialShape{std::move(sizes)});
  }

  std::string why;
  if (!tower_shapes_valid(tower, &why))
    throw std::logic_error("synthesized tower invalid: " + why);
  return tower;
}

SemilatticeHom nabla_v(const BratteliTower& tower, int i) {
  if (i < 0 || i >= static_cast<int>(tower.maps.size()))
    throw std::out_of_range("level index");
  return simplicial_nabla_map(tower.maps[i].s);
}

SquaresReport verify_squares(const BratteliTower& tower,
                             const SequentialSystem& boolean_tower) {
  SquaresReport report;
  if (tower.levels.size() > boolean_tower.stages.size()) {
    report.defect = "tower deeper than boolean system";
    return report;
  }
  std::vector<BooleanStructure> structures;
  for (std::size_t i = 0; i < tower.levels.size(); ++i) {
    auto bs = boolean_structure(boolean_tower.stages[i]);
    if (!bs || bs->rank != tower.levels[i].block_count()) {
      report.defect = "shape mismatch at level " + std::to_string(i);
      report.defect_level = static_cast<int>(i);
      return report;
    }
    structures.push_back(std::move(*bs));
  }
  for (std::size_t i = 0; i < tower.maps.size(); ++i) {
    SemilatticeHom v = nabla_v(tower, static_cast<int>(i));
    const auto& f = boolean_tower.transitions[i];
    const int k = structures[i].rank;
    // Equality at the empty set (atom index -1) plus all atoms pins the
    // two join-homomorphisms down.
    if (structures[i + 1].iso[v.map[0]] != f.map[structures[i].iso[0]]) {
      report.defect = "square fails at the least element";
      report.defect_level = static_cast<int>(i);
      return report;
    }
    for (int a = 0; a < k; ++a) {
      // g_{i+1}(nabla_v(atom a)) vs f_i(g_i(atom a)).
      int lhs = structures[i + 1].iso[v.map[1 << a]];
      int rhs = f.map[structures[i].iso[1 << a]];
      if (lhs != rhs) {
        report.defect = "square fails";
        report.defect_level = static_cast<int>(i);
        report.defect_atom = a;
        return report;
      }
    }
  }
  report.ok = true;
  return report;
}

FiniteSemilattice idc_stage(const MatricialShape& shape) {
  return boolean_semilattice(shape.block_count());
}

}  // namespace slrep
