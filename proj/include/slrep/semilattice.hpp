// Finite join-semilattices, homomorphisms, congruences and quotients,
// distributivity and the constraint-solving machinery behind homomorphism
// extension.
#ifndef SLREP_SEMILATTICE_HPP
#define SLREP_SEMILATTICE_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace slrep {

struct AxiomDefect {
  std::string axiom;            // "shape", "commutativity", "associativity",
                                // "idempotence", "neutrality"
  std::array<int, 3> witness{-1, -1, -1};
};

// Checks that `table` (row-major, n*n) is a commutative, associative,
// idempotent join table with entries in range.
std::optional<AxiomDefect> validate_join_table(const std::vector<int>& table,
                                               int n);

class FiniteSemilattice {
public:
  FiniteSemilattice() = default;

  // Throws std::invalid_argument when the table fails an axiom; use
  // validate_join_table first for a structured report.
  FiniteSemilattice(std::vector<std::string> labels, std::vector<int> table);

  int size() const { return n_; }
  const std::string& label(int x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& table() const { return table_; }

  int join(int x, int y) const { return table_[x * n_ + y]; }
  bool leq(int x, int y) const { return join(x, y) == y; }

  // 0/1 are derived from the table, never stored.
  std::optional<int> least() const;
  std::optional<int> greatest() const;
  bool is_lattice() const { return least().has_value(); }

  // Binary meet; requires a lattice. In a finite join-semilattice with a
  // least element the common lower bounds of x, y are join-closed, so
  // their join is the meet.
  int meet(int x, int y) const;

  std::vector<int> upper_covers(int x) const;
  std::vector<int> lower_covers(int x) const;

private:
  int n_ = 0;
  std::vector<std::string> labels_;
  std::vector<int> table_;  // row-major join table
};

struct SemilatticeHom {
  FiniteSemilattice source;
  FiniteSemilattice target;
  std::vector<int> map;  // map[x] = target index

  int operator()(int x) const { return map.at(x); }
  bool is_homomorphism() const;
  bool preserves_zero() const;
  bool preserves_one() const;
  bool is_injective() const;
  bool is_surjective() const;
};

SemilatticeHom compose(const SemilatticeHom& g, const SemilatticeHom& f);
SemilatticeHom identity_hom(const FiniteSemilattice& S);

// A congruence stored as a canonical partition: block_of[x] is the block
// id, blocks numbered in order of their least member.
struct Congruence {
  std::vector<int> block_of;
  int block_count = 0;

  bool same(int x, int y) const { return block_of[x] == block_of[y]; }
  bool operator==(const Congruence&) const = default;
};

Congruence kernel(const SemilatticeHom& f);

struct DistributivityWitness {
  int a, b0, b1;  // a <= b0 v b1 with no decomposition a = a0 v a1, ai <= bi
};

// True, or a counterexample triple.
std::optional<DistributivityWitness> distributivity_defect(
    const FiniteSemilattice& S);
bool is_distributive(const FiniteSemilattice& S);

// Least x with a_i <= b_i v x for all pairs and x <= c_j for all uppers.
// Returns std::nullopt when no element satisfies the constraints. S must
// be distributive; when lower_pairs is empty S must have a least element.
// The scan collects every solution and returns the order-minimum; a
// std::logic_error is raised if the solution set has no minimum (which
// the distributivity hypothesis rules out for satisfiable systems arising
// from the extension algorithm).
std::optional<int> solve_constraints(
    const FiniteSemilattice& S,
    const std::vector<std::pair<int, int>>& lower_pairs,
    const std::vector<int>& uppers);

struct FactoredHom {
  FiniteSemilattice quotient;
  SemilatticeHom projection;  // source ->> quotient
  SemilatticeHom embedding;   // quotient >-> target, f = embedding o projection
  Congruence ker;
};

FactoredHom factor_hom(const SemilatticeHom& f);

// Least subset containing `seed` (as element indices) and closed under v.
std::vector<int> subsemilattice_closure(const FiniteSemilattice& S,
                                        const std::vector<int>& seed);

// Join-preserving bijection S -> T found by backtracking, or absence.
std::optional<std::vector<int>> is_isomorphic(const FiniteSemilattice& S,
                                              const FiniteSemilattice& T);

struct BooleanStructure {
  int rank = 0;
  std::vector<int> atoms;  // atom i of 2^rank corresponds to atoms[i]
  std::vector<int> iso;    // iso[mask] = element of S, an isomorphism 2^rank -> S
};

// Atom labeling realizing S ~ 2^n, or absence.
std::optional<BooleanStructure> boolean_structure(const FiniteSemilattice& S);

// The powerset semilattice 2^n under union; element index == subset mask,
// atoms at indices 1<<i. Labels are brace lists of the atom labels.
FiniteSemilattice boolean_semilattice(int n,
                                      const std::vector<std::string>& atom_labels = {});

}  // namespace slrep

#endif
