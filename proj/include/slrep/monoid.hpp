// Finite commutative monoids: algebraic preorder, maximal semilattice
// quotient, refinement/Riesz/conicality/cancellativity checks, ideal
// semilattices, and the simplicial strong-interpolation witness.
#ifndef SLREP_MONOID_HPP
#define SLREP_MONOID_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "slrep/semilattice.hpp"

namespace slrep {

using Mask = std::uint32_t;

std::optional<AxiomDefect> validate_monoid_table(const std::vector<int>& table,
                                                 int n, int zero);

class FiniteCommutativeMonoid {
public:
  FiniteCommutativeMonoid() = default;
  FiniteCommutativeMonoid(std::vector<std::string> labels,
                          std::vector<int> table, int zero);

  int size() const { return n_; }
  int zero() const { return zero_; }
  const std::string& label(int x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::vector<int>& table() const { return table_; }

  int add(int x, int y) const { return table_[x * n_ + y]; }
  int times(int k, int x) const;  // k-fold sum, k >= 0

  // Algebraic preorder: x <= y iff x + z = y for some z.
  bool alg_leq(int x, int y) const;

private:
  int n_ = 0;
  int zero_ = 0;
  std::vector<std::string> labels_;
  std::vector<int> table_;
};

// x ∝ y iff x <= n y for some n; searching n <= |M| suffices since the
// multiples of y take at most |M| values.
bool propto(const FiniteCommutativeMonoid& M, int x, int y);

struct NablaResult {
  FiniteSemilattice quotient;
  std::vector<int> projection;  // element -> class index
};

// Maximal semilattice quotient M / ≍, classes ordered by least member.
NablaResult nabla(const FiniteCommutativeMonoid& M);

struct PropertyFlag {
  bool holds = true;
  std::vector<int> witness;  // element indices of the failing instance
};

struct PropertyReport {
  PropertyFlag refinement;   // checked at m = n = 2
  PropertyFlag riesz;
  PropertyFlag conical;
  PropertyFlag cancellative;
};

PropertyReport property_report(const FiniteCommutativeMonoid& M);

struct IdcResult {
  FiniteSemilattice semilattice;  // ideals under inclusion, join = ideal join
  std::vector<Mask> ideals;       // member sets, aligned with elements
  NablaResult nabla;              // of the input monoid
  std::vector<int> theta;         // class -> ideal index, [x] -> {z : z ∝ x}
  bool theta_is_isomorphism = false;
};

// All ideals of M (finite, so every ideal has an order-unit), ordered by
// inclusion, together with theta : ∇(M) -> Idc M.
IdcResult idc(const FiniteCommutativeMonoid& M);

struct SimplicialElement {
  std::vector<long long> coords;  // all >= 0
};

struct StrongRipWitness {
  SimplicialElement u, v, w, z;
};

// For na + b = nc + d in (Z^+)^k, produces u, v, w, z >= 0 with a = u+v,
// b = nw+z, c = u+w, d = nv+z. Throws std::invalid_argument when the
// input equation fails.
StrongRipWitness strong_rip_witness(long long n, const SimplicialElement& a,
                                    const SimplicialElement& b,
                                    const SimplicialElement& c,
                                    const SimplicialElement& d);

// The semilattice map 2^k -> 2^l induced under ∇ by the positive
// homomorphism with the given nonnegative integer matrix: a subset T maps
// to the union of the supports of the rows indexed by T.
SemilatticeHom simplicial_nabla_map(
    const std::vector<std::vector<long long>>& matrix);

}  // namespace slrep

#endif
