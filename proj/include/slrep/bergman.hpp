// Bratteli-tower synthesis from a Boolean resolution tower: block sizes,
// multiplicity matrices, commuting-square verification and stage ideal
// semilattices.
#ifndef SLREP_BERGMAN_HPP
#define SLREP_BERGMAN_HPP

#include <string>
#include <vector>

#include "slrep/boolean_resolution.hpp"
#include "slrep/semilattice.hpp"

namespace slrep {

struct MatricialShape {
  std::vector<long long> sizes;  // block sizes t(1..k), all >= 1; empty = zero algebra

  int block_count() const { return static_cast<int>(sizes.size()); }
};

struct MultiplicityMatrix {
  std::vector<std::vector<long long>> s;  // k x l, nonnegative

  int rows() const { return static_cast<int>(s.size()); }
  int cols() const { return s.empty() ? 0 : static_cast<int>(s[0].size()); }
};

struct BratteliTower {
  std::vector<MatricialShape> levels;
  std::vector<MultiplicityMatrix> maps;
  bool unital = false;
};

// Embedding validity: sum_i s_ij t(i) <= t'(j) per column, equality when unital.
bool tower_shapes_valid(const BratteliTower& tower, std::string* why = nullptr);

// Level 1 is K^{n_1} (all block sizes 1); s_ij records whether atom j of
// the next stage lies below the image of atom i; sizes follow the unital
// recurrence t'(j) = sum_i s_ij t(i), padded to 1 in non-unital mode.
// The Boolean tower must have at least `depth` stages; unital mode
// requires 1-preserving transitions.
BratteliTower synth_tower(const SequentialSystem& boolean_tower, int depth,
                          bool unital);

// The semilattice map 2^{k_i} -> 2^{k_{i+1}} induced by the i-th
// multiplicity matrix (supports of rows).
SemilatticeHom nabla_v(const BratteliTower& tower, int i);

struct SquaresReport {
  bool ok = false;
  int defect_level = -1;
  int defect_atom = -1;
  std::string defect;
};

// Checks g_{i+1} o nabla_v(i) = f_i o g_i for the atom-labeling
// isomorphisms g_i at every level.
SquaresReport verify_squares(const BratteliTower& tower,
                             const SequentialSystem& boolean_tower);

// Ideal semilattice of a finite product of simple blocks: 2^{block count}.
FiniteSemilattice idc_stage(const MatricialShape& shape);

}  // namespace slrep

#endif
