// Boolean embeddings, finite injectivity, the triangle factorization and
// Boolean resolution towers for a finite distributive semilattice.
#ifndef SLREP_BOOLEAN_RESOLUTION_HPP
#define SLREP_BOOLEAN_RESOLUTION_HPP

#include <optional>
#include <string>
#include <vector>

#include "slrep/semilattice.hpp"

namespace slrep {

struct SequentialSystem {
  std::vector<FiniteSemilattice> stages;
  std::vector<SemilatticeHom> transitions;  // stage i -> stage i+1
};

struct Cone {
  FiniteSemilattice apex;
  std::vector<SemilatticeHom> legs;  // stage i -> apex
};

enum class EmbedMode { powerset, meet_irreducible };

struct BooleanEmbedding {
  FiniteSemilattice boolean;      // 2^{index set}
  std::vector<int> index_set;     // S-indices indexing the atoms
  SemilatticeHom j;               // injective, join-preserving, j(s) = {x : s !<= x}
};

BooleanEmbedding embed_boolean(const FiniteSemilattice& S, EmbedMode mode);

// Extends a homomorphism f defined on the join-closed subset A of B to all
// of B, into a distributive semilattice S. A is a sorted list of B-indices,
// f_on_A[i] the image of A[i]. Generators of B \ A are processed in
// canonical element order; each new value is the least admissible one.
std::vector<int> extend_hom(const FiniteSemilattice& B,
                            const std::vector<int>& A,
                            const std::vector<int>& f_on_A,
                            const FiniteSemilattice& S);

struct TriangleFactorization {
  FiniteSemilattice boolean;  // B
  SemilatticeHom phi;         // A -> B, ker(phi) = ker(f)
  SemilatticeHom g;           // B -> S, f = g o phi
};

TriangleFactorization triangle_factor(const SemilatticeHom& f);

enum class TowerVariant { plain, zero, zero_one };

struct BooleanTower {
  SequentialSystem system;
  Cone cone;
};

// Stage 0 is 2^{J(S)} with the leg sending atoms to the join-irreducibles
// of S; each next stage comes from triangle_factor of the current leg.
BooleanTower synth_boolean_tower(const FiniteSemilattice& S, int depth,
                                 TowerVariant variant);

struct ConeReport {
  bool compatible = false;
  bool final_leg_surjective = false;
  bool kernels_stabilize = false;
  int stabilization_offset = 0;  // max stages needed to merge an identified pair
  int checked_depth = 0;
  std::string defect;            // empty when certified
  int defect_stage = -1;
  int defect_x = -1, defect_y = -1;

  bool certified() const {
    return compatible && final_leg_surjective && kernels_stabilize;
  }
};

// Certifies, up to `depth` stages: leg compatibility, surjectivity of the
// final leg, and kernel stabilization (every pair identified by a leg is
// merged by some composite transition within the depth bound).
ConeReport verify_cone(const SequentialSystem& system, const Cone& cone,
                       int depth);

}  // namespace slrep

#endif
