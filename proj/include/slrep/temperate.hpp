// Exact-rational temperate powers of Q over a set-lattice D: the ratio
// operation, positivity cone, refinement witnesses, support map, and
// lifting of semilattice homomorphisms to positive linear maps.
#ifndef SLREP_TEMPERATE_HPP
#define SLREP_TEMPERATE_HPP

#include <boost/multiprecision/cpp_int.hpp>
#include <optional>
#include <string>
#include <vector>

#include "slrep/order.hpp"
#include "slrep/semilattice.hpp"

namespace slrep {

using Rational = boost::multiprecision::cpp_rational;

struct RationalVector {
  std::vector<Rational> entries;

  int size() const { return static_cast<int>(entries.size()); }
  Mask support() const;
  bool is_zero() const { return support() == 0; }

  RationalVector operator+(const RationalVector& o) const;
  RationalVector operator-(const RationalVector& o) const;
  RationalVector operator*(const RationalVector& o) const;  // componentwise
  RationalVector scaled(const Rational& r) const;
  bool operator==(const RationalVector&) const = default;
};

RationalVector characteristic_vector(int n, Mask m);

// A sublattice of the powerset of a finite ground set, containing the
// empty set; members stored as sorted masks.
class SetLattice {
public:
  SetLattice() = default;
  // Throws std::invalid_argument when the collection is not closed under
  // union and intersection or omits the empty set.
  SetLattice(int ground_size, std::vector<Mask> members,
             std::vector<std::string> ground_labels = {});

  static SetLattice from_lower_sets(const FinitePoset& P);

  int ground_size() const { return ground_size_; }
  const std::vector<Mask>& members() const { return members_; }
  const std::vector<std::string>& ground_labels() const { return ground_labels_; }
  bool contains(Mask m) const;

  // The semilattice of members under union (join = union, order = inclusion).
  FiniteSemilattice union_semilattice() const;

private:
  int ground_size_ = 0;
  std::vector<Mask> members_;
  std::vector<std::string> ground_labels_;
};

// Smallest collection containing D and closed under relative complement
// and union (the generalized Boolean algebra generated by D), as sorted masks.
std::vector<Mask> bd_closure(const SetLattice& D);

// (f:g): componentwise quotient, 0 where g vanishes.
RationalVector ratio(const RationalVector& f, const RationalVector& g);

// Membership in the positive cone E+(D).
bool is_positive(const RationalVector& f, const SetLattice& D);

// When supp(f) ⊆ supp(g): n+1 for n the least integer bounding (f:g),
// so that f <=+ (n+1) g. Absence otherwise. Inputs must be positive.
std::optional<long long> propto_witness(const RationalVector& f,
                                        const RationalVector& g,
                                        const SetLattice& D);

struct RefinementVectors {
  RationalVector h00, h01, h10, h11;
};

// For positive f0+f1 = g0+g1: h_ij = (f_i g_j : f0+f1); exact row and
// column sums, supp(h_ij) = supp(f_i) ∩ supp(g_j) ∈ D.
RefinementVectors refinement_witness(const RationalVector& f0,
                                     const RationalVector& f1,
                                     const RationalVector& g0,
                                     const RationalVector& g1,
                                     const SetLattice& D);

// supp(f), for positive f; well defined on ≍-classes.
Mask iota(const RationalVector& f, const SetLattice& D);

// Indicator matrix of p -> f(↓p); the induced positive linear map g
// satisfies supp(g(x)) = f(supp(x)) for every positive x. f maps element
// indices of HP.lattice to element indices of HQ.lattice and must be a
// 0-semilattice homomorphism.
std::vector<std::vector<int>> lift_hom(const LowerSetLattice& HP,
                                       const LowerSetLattice& HQ,
                                       const std::vector<int>& f);

// Applies the lifted matrix to a vector over P.
RationalVector apply_lift(const std::vector<std::vector<int>>& matrix,
                          const RationalVector& x);

struct LiftDLatReport {
  bool ok = false;
  std::string defect;
  FiniteSemilattice image;  // D as a semilattice under union
};

// Verifies at finite scale that the support map is a semilattice
// isomorphism from ∇(E+(D)) onto D: characteristic vectors realize every
// support, supports add under union, and ∝ matches support inclusion.
LiftDLatReport verify_lift_dlat(const SetLattice& D);

struct LiftTowerResult {
  std::vector<BirkhoffResult> duals;               // per stage
  std::vector<SemilatticeHom> lattice_maps;        // f_n : H(P_n) -> H(P_{n+1})
  std::vector<std::vector<std::vector<int>>> matrices;
  bool squares_ok = false;
  std::string defect;
};

// Lifts an increasing chain of finite distributive 0-lattices (given by
// 0-lattice embeddings) to a system of posets and lifting matrices, and
// verifies each square supp(g(x)) = f_n(supp(x)) on all lower sets.
// Throws std::invalid_argument when a stage is not a distributive lattice
// or an inclusion is not a 0-lattice embedding.
LiftTowerResult lift_tower(const std::vector<FiniteSemilattice>& stages,
                           const std::vector<SemilatticeHom>& inclusions);

Rational parse_rational(const std::string& text);
std::string rational_to_string(const Rational& r);

}  // namespace slrep

#endif
