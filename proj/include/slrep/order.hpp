// Finite posets, lower sets, and Birkhoff duality between finite posets
// and finite distributive lattices.
#ifndef SLREP_ORDER_HPP
#define SLREP_ORDER_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "slrep/semilattice.hpp"

namespace slrep {

// Subsets of element indices are bitsets over the canonical (input) order.
using Mask = std::uint32_t;

constexpr int popcount(Mask m) { return __builtin_popcount(m); }

enum class RelationInput { covers, full };

class FinitePoset {
public:
  FinitePoset() = default;

  // Builds the poset from labels and a relation given either as cover
  // pairs or as a full relation; the reflexive-transitive closure is
  // taken and antisymmetry is checked (throws std::invalid_argument).
  FinitePoset(std::vector<std::string> labels,
              const std::vector<std::pair<int, int>>& relation,
              RelationInput input = RelationInput::covers);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int p) const { return labels_.at(p); }
  const std::vector<std::string>& labels() const { return labels_; }

  bool leq(int p, int q) const { return (below_[q] >> p) & 1u; }

  // ↓p = {x : x <= p}, as a bitset.
  Mask down_mask(int p) const;

  bool is_lower_set(Mask m) const;
  Mask lower_closure(Mask m) const;

  // Cover pairs (p, q) with p < q and nothing strictly between.
  std::vector<std::pair<int, int>> covers() const;

private:
  std::vector<std::string> labels_;
  std::vector<Mask> below_;  // below_[q] = mask of {x : x <= q}
};

struct LowerSet {
  Mask members = 0;
};

LowerSet down_set(const FinitePoset& P, int p);

// H(P): the distributive 0-lattice of all lower subsets of P under union.
// Elements are listed in increasing mask order; sets[i] is the member set
// of element i of the lattice.
struct LowerSetLattice {
  FinitePoset poset;
  FiniteSemilattice lattice;
  std::vector<Mask> sets;

  int index_of(Mask m) const;  // -1 when m is not a lower set
};

LowerSetLattice lower_sets(const FinitePoset& P);

// Birkhoff dual of a finite distributive lattice L: the poset of nonzero
// join-irreducible elements, together with the isomorphism H(P) -> L
// sending a lower set to the join of its members.
struct BirkhoffResult {
  FinitePoset poset;
  std::vector<int> join_irreducibles;  // L-indices, aligned with poset elements
  LowerSetLattice dual;                // H(poset)
  std::vector<int> iso;                // iso[k] = L-index of dual element k
};

struct BirkhoffDefect {
  std::string reason;            // "not-a-lattice" or "not-distributive"
  std::vector<int> witness;
};

// Returns the dual or a defect report when L is not a distributive lattice.
std::optional<BirkhoffResult> birkhoff(const FiniteSemilattice& L,
                                       BirkhoffDefect* defect = nullptr);

// Non-top elements with exactly one upper cover. Requires L to be a
// lattice (throws std::invalid_argument otherwise).
std::vector<int> meet_irreducibles(const FiniteSemilattice& L);

// Convenience builders used throughout the test suites.
FinitePoset chain_poset(int n);
FinitePoset antichain_poset(int n);

}  // namespace slrep

#endif
