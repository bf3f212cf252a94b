#include "slrep/boolean_resolution.hpp"

#include <algorithm>
#include <stdexcept>

#include "slrep/order.hpp"

namespace slrep {

BooleanEmbedding embed_boolean(const FiniteSemilattice& S, EmbedMode mode) {
  std::vector<int> index_set;
  if (mode == EmbedMode::powerset) {
    index_set.resize(S.size());
    for (int x = 0; x < S.size(); ++x) index_set[x] = x;
  } else {
    index_set = meet_irreducibles(S);  // throws on a non-lattice
  }
  const int r = static_cast<int>(index_set.size());
  std::vector<std::string> atom_labels(r);
  for (int t = 0; t < r; ++t) atom_labels[t] = S.label(index_set[t]);
  FiniteSemilattice B = boolean_semilattice(r, atom_labels);

  std::vector<int> map(S.size(), 0);
  for (int s = 0; s < S.size(); ++s) {
    int mask = 0;
    for (int t = 0; t < r; ++t)
      if (!S.leq(s, index_set[t])) mask |= 1 << t;
    map[s] = mask;
  }
  SemilatticeHom j{S, B, std::move(map)};
  if (!j.is_homomorphism() || !j.is_injective())
    throw std::logic_error("boolean embedding failed");
  return BooleanEmbedding{std::move(B), std::move(index_set), std::move(j)};
}

std::vector<int> extend_hom(const FiniteSemilattice& B,
                            const std::vector<int>& A,
                            const std::vector<int>& f_on_A,
                            const FiniteSemilattice& S) {
  if (A.empty()) throw std::invalid_argument("extend_hom: empty subsemilattice");
  if (A.size() != f_on_A.size())
    throw std::invalid_argument("extend_hom: map size mismatch");
  if (!is_distributive(S))
    throw std::invalid_argument("extend_hom: target not distributive");

  std::vector<int> val(B.size(), -1);
  for (std::size_t i = 0; i < A.size(); ++i) {
    if (A[i] < 0 || A[i] >= B.size() || f_on_A[i] < 0 || f_on_A[i] >= S.size())
      throw std::invalid_argument("extend_hom: index out of range");
    val[A[i]] = f_on_A[i];
  }
  for (std::size_t i = 0; i < A.size(); ++i)
    for (std::size_t k = 0; k < A.size(); ++k) {
      int j = B.join(A[i], A[k]);
      if (val[j] < 0)
        throw std::invalid_argument("extend_hom: A not join-closed");
      if (val[j] != S.join(f_on_A[i], f_on_A[k]))
        throw std::invalid_argument("extend_hom: f is not a homomorphism");
    }

  // Adjoin the missing elements one at a time, in canonical order; each
  // step gives the new generator the least admissible value.
  for (int b = 0; b < B.size(); ++b) {
    if (val[b] >= 0) continue;
    std::vector<std::pair<int, int>> pairs;
    std::vector<int> uppers;
    int below_join = -1;
    for (int x = 0; x < B.size(); ++x) {
      if (val[x] < 0) continue;
      for (int y = 0; y < B.size(); ++y)
        if (val[y] >= 0 && B.leq(x, B.join(y, b)))
          pairs.emplace_back(val[x], val[y]);
      if (B.leq(b, x)) uppers.push_back(val[x]);
      if (B.leq(x, b))
        below_join = below_join < 0 ? val[x] : S.join(below_join, val[x]);
    }
    auto alpha = solve_constraints(S, pairs, uppers);
    if (!alpha)
      throw std::logic_error("extend_hom: no admissible value (hypotheses violated)");
    int beta = below_join < 0 ? *alpha : S.join(*alpha, below_join);
    std::vector<int> known;
    for (int x = 0; x < B.size(); ++x)
      if (val[x] >= 0) known.push_back(x);
    val[b] = beta;
    for (int x : known) {
      int xb = B.join(x, b);
      if (val[xb] < 0) val[xb] = S.join(val[x], beta);
    }
  }

  SemilatticeHom g{B, S, val};
  if (!g.is_homomorphism())
    throw std::logic_error("extend_hom produced a non-homomorphism");
  return val;
}

TriangleFactorization triangle_factor(const SemilatticeHom& f) {
  if (!is_distributive(f.target))
    throw std::invalid_argument("triangle_factor: target not distributive");
  FactoredHom fac = factor_hom(f);
  EmbedMode mode = fac.quotient.is_lattice() ? EmbedMode::meet_irreducible
                                             : EmbedMode::powerset;
  BooleanEmbedding emb = embed_boolean(fac.quotient, mode);

  std::vector<int> A;
  std::vector<int> fvals;
  for (int q = 0; q < fac.quotient.size(); ++q) {
    A.push_back(emb.j.map[q]);
    fvals.push_back(fac.embedding.map[q]);
  }
  std::vector<std::size_t> order(A.size());
  for (std::size_t i = 0; i < A.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t k) { return A[i] < A[k]; });
  std::vector<int> A_sorted, f_sorted;
  for (std::size_t i : order) {
    A_sorted.push_back(A[i]);
    f_sorted.push_back(fvals[i]);
  }

  std::vector<int> gmap = extend_hom(emb.boolean, A_sorted, f_sorted, f.target);
  SemilatticeHom phi = compose(emb.j, fac.projection);
  SemilatticeHom g{emb.boolean, f.target, std::move(gmap)};
  return TriangleFactorization{std::move(emb.boolean), std::move(phi),
                               std::move(g)};
}

BooleanTower synth_boolean_tower(const FiniteSemilattice& S, int depth,
                                 TowerVariant variant) {
  if (depth < 1) throw std::invalid_argument("depth must be positive");
  if (S.size() == 0) throw std::invalid_argument("empty semilattice");
  if (variant != TowerVariant::plain && !S.least())
    throw std::invalid_argument("zero variant requires a least element");
  if (variant == TowerVariant::zero_one && !S.greatest())
    throw std::invalid_argument("zero-one variant requires a greatest element");

  BirkhoffDefect defect;
  auto dual = birkhoff(S, &defect);
  if (!dual)
    throw std::invalid_argument("tower synthesis requires a distributive "
                                "lattice (" + defect.reason + ")");

  const auto& irr = dual->join_irreducibles;
  const int r = static_cast<int>(irr.size());
  std::vector<std::string> atom_labels(r);
  for (int i = 0; i < r; ++i) atom_labels[i] = S.label(irr[i]);

  BooleanTower tower;
  tower.cone.apex = S;
  FiniteSemilattice stage0 = boolean_semilattice(r, atom_labels);
  std::vector<int> leg0(stage0.size());
  int bottom = *S.least();
  for (int mask = 0; mask < stage0.size(); ++mask) {
    int v = bottom;
    for (int i = 0; i < r; ++i)
      if ((mask >> i) & 1) v = S.join(v, irr[i]);
    leg0[mask] = v;
  }
  tower.system.stages.push_back(stage0);
  tower.cone.legs.push_back(SemilatticeHom{stage0, S, std::move(leg0)});

  for (int i = 1; i < depth; ++i) {
    TriangleFactorization tf = triangle_factor(tower.cone.legs.back());
    tower.system.transitions.push_back(tf.phi);
    tower.system.stages.push_back(tf.boolean);
    tower.cone.legs.push_back(tf.g);
  }
  return tower;
}

ConeReport verify_cone(const SequentialSystem& system, const Cone& cone,
                       int depth) {
  if (system.stages.size() != cone.legs.size() ||
      system.transitions.size() + 1 != system.stages.size())
    throw std::invalid_argument("verify_cone: mismatched shapes");
  ConeReport report;
  const int stages = static_cast<int>(system.stages.size());
  const int d = std::min(depth, stages);
  report.checked_depth = d;
  if (d < 1) {
    report.defect = "no stages to check";
    return report;
  }

  for (int i = 0; i + 1 < d; ++i) {
    SemilatticeHom composite = compose(cone.legs[i + 1], system.transitions[i]);
    for (int x = 0; x < system.stages[i].size(); ++x)
      if (composite.map[x] != cone.legs[i].map[x]) {
        report.defect = "leg " + std::to_string(i + 1) +
                        " o transition != leg " + std::to_string(i);
        report.defect_stage = i;
        report.defect_x = x;
        return report;
      }
  }
  report.compatible = true;

  if (!cone.legs[d - 1].is_surjective()) {
    report.defect = "final leg not surjective";
    report.defect_stage = d - 1;
    return report;
  }
  report.final_leg_surjective = true;

  for (int i = 0; i + 1 < d; ++i) {
    const auto& leg = cone.legs[i];
    for (int x = 0; x < system.stages[i].size(); ++x)
      for (int y = x + 1; y < system.stages[i].size(); ++y) {
        if (leg.map[x] != leg.map[y]) continue;
        int cx = x, cy = y, merged_at = -1;
        for (int j = i; j + 1 < d; ++j) {
          cx = system.transitions[j].map[cx];
          cy = system.transitions[j].map[cy];
          if (cx == cy) {
            merged_at = j + 1;
            break;
          }
        }
        if (merged_at < 0) {
          report.defect = "pair never merged within depth";
          report.defect_stage = i;
          report.defect_x = x;
          report.defect_y = y;
          return report;
        }
        report.stabilization_offset =
            std::max(report.stabilization_offset, merged_at - i);
      }
  }
  report.kernels_stabilize = true;
  return report;
}

}  // namespace slrep
