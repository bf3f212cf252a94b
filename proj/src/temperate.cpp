#include "slrep/temperate.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace slrep {

Mask RationalVector::support() const {
  Mask m = 0;
  for (int i = 0; i < size(); ++i)
    if (entries[i] != 0) m |= Mask(1) << i;
  return m;
}

namespace {

void check_same_size(const RationalVector& a, const RationalVector& b) {
  if (a.size() != b.size())
    throw std::invalid_argument("rational vectors over different index sets");
}

}  // namespace

RationalVector RationalVector::operator+(const RationalVector& o) const {
  check_same_size(*this, o);
  RationalVector out;
  out.entries.resize(entries.size());
  for (int i = 0; i < size(); ++i) out.entries[i] = entries[i] + o.entries[i];
  return out;
}

RationalVector RationalVector::operator-(const RationalVector& o) const {
  check_same_size(*this, o);
  RationalVector out;
  out.entries.resize(entries.size());
  for (int i = 0; i < size(); ++i) out.entries[i] = entries[i] - o.entries[i];
  return out;
}

RationalVector RationalVector::operator*(const RationalVector& o) const {
  check_same_size(*this, o);
  RationalVector out;
  out.entries.resize(entries.size());
  for (int i = 0; i < size(); ++i) out.entries[i] = entries[i] * o.entries[i];
  return out;
}

RationalVector RationalVector::scaled(const Rational& r) const {
  RationalVector out;
  out.entries.resize(entries.size());
  for (int i = 0; i < size(); ++i) out.entries[i] = entries[i] * r;
  return out;
}

RationalVector characteristic_vector(int n, Mask m) {
  RationalVector out;
  out.entries.assign(n, Rational(0));
  for (int i = 0; i < n; ++i)
    if ((m >> i) & 1u) out.entries[i] = 1;
  return out;
}

SetLattice::SetLattice(int ground_size, std::vector<Mask> members,
                       std::vector<std::string> ground_labels)
    : ground_size_(ground_size),
      members_(std::move(members)),
      ground_labels_(std::move(ground_labels)) {
  if (ground_size_ < 0 || ground_size_ > 31)
    throw std::invalid_argument("ground set size out of range");
  if (ground_labels_.empty())
    for (int i = 0; i < ground_size_; ++i)
      ground_labels_.push_back("x" + std::to_string(i));
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  const Mask full = ground_size_ == 0 ? 0 : (Mask(1) << ground_size_) - 1;
  for (Mask m : members_)
    if ((m & ~full) != 0)
      throw std::invalid_argument("member set outside ground set");
  if (!contains(0)) throw std::invalid_argument("empty set missing from D");
  for (Mask a : members_)
    for (Mask b : members_) {
      if (!contains(a | b))
        throw std::invalid_argument("D not closed under union");
      if (!contains(a & b))
        throw std::invalid_argument("D not closed under intersection");
    }
}

SetLattice SetLattice::from_lower_sets(const FinitePoset& P) {
  std::vector<Mask> members;
  for (Mask m = 0; m < (Mask(1) << P.size()); ++m)
    if (P.is_lower_set(m)) members.push_back(m);
  return SetLattice(P.size(), std::move(members), P.labels());
}

bool SetLattice::contains(Mask m) const {
  return std::binary_search(members_.begin(), members_.end(), m);
}

FiniteSemilattice SetLattice::union_semilattice() const {
  const int k = static_cast<int>(members_.size());
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) {
    std::string lab = "{";
    for (int p = 0; p < ground_size_; ++p)
      if ((members_[i] >> p) & 1u) {
        if (lab.size() > 1) lab += ",";
        lab += ground_labels_[p];
      }
    labels[i] = lab + "}";
  }
  std::vector<int> table(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Mask u = members_[i] | members_[j];
      table[i * k + j] = static_cast<int>(
          std::lower_bound(members_.begin(), members_.end(), u) -
          members_.begin());
    }
  return FiniteSemilattice(std::move(labels), std::move(table));
}

std::vector<Mask> bd_closure(const SetLattice& D) {
  std::set<Mask> closed(D.members().begin(), D.members().end());
  bool changed = true;
  while (changed) {
    changed = false;
    std::vector<Mask> current(closed.begin(), closed.end());
    for (Mask a : current)
      for (Mask b : current) {
        for (Mask c : {Mask(a & ~b), Mask(a | b)})
          if (!closed.count(c)) {
            closed.insert(c);
            changed = true;
          }
      }
  }
  return std::vector<Mask>(closed.begin(), closed.end());
}

RationalVector ratio(const RationalVector& f, const RationalVector& g) {
  check_same_size(f, g);
  RationalVector out;
  out.entries.resize(f.entries.size());
  for (int i = 0; i < f.size(); ++i)
    out.entries[i] = g.entries[i] == 0 ? Rational(0)
                                       : Rational(f.entries[i] / g.entries[i]);
  return out;
}

bool is_positive(const RationalVector& f, const SetLattice& D) {
  if (f.size() != D.ground_size())
    throw std::invalid_argument("vector and ground set sizes differ");
  for (const auto& e : f.entries)
    if (e < 0) return false;
  return D.contains(f.support());
}

std::optional<long long> propto_witness(const RationalVector& f,
                                        const RationalVector& g,
                                        const SetLattice& D) {
  if (!is_positive(f, D) || !is_positive(g, D))
    throw std::invalid_argument("propto_witness: inputs must be positive");
  Mask sf = f.support(), sg = g.support();
  if ((sf & ~sg) != 0) return std::nullopt;
  // n+1 where n bounds (f:g); then supp((n+1)g - f) = supp(g).
  RationalVector q = ratio(f, g);
  long long n = 0;
  for (const auto& e : q.entries) {
    boost::multiprecision::cpp_int floor_val =
        boost::multiprecision::numerator(e) /
        boost::multiprecision::denominator(e);
    long long v = floor_val.convert_to<long long>();
    if (Rational(v) < e) ++v;
    n = std::max(n, v);
  }
  return n + 1;
}

RefinementVectors refinement_witness(const RationalVector& f0,
                                     const RationalVector& f1,
                                     const RationalVector& g0,
                                     const RationalVector& g1,
                                     const SetLattice& D) {
  if (!is_positive(f0, D) || !is_positive(f1, D) || !is_positive(g0, D) ||
      !is_positive(g1, D))
    throw std::invalid_argument("refinement_witness: inputs must be positive");
  RationalVector h = f0 + f1;
  if (!(h == g0 + g1))
    throw std::invalid_argument("refinement_witness: f0+f1 != g0+g1");
  RefinementVectors out{ratio(f0 * g0, h), ratio(f0 * g1, h), ratio(f1 * g0, h),
                        ratio(f1 * g1, h)};
  return out;
}

Mask iota(const RationalVector& f, const SetLattice& D) {
  if (!is_positive(f, D)) throw std::invalid_argument("iota: f not positive");
  return f.support();
}

std::vector<std::vector<int>> lift_hom(const LowerSetLattice& HP,
                                       const LowerSetLattice& HQ,
                                       const std::vector<int>& f) {
  SemilatticeHom hom{HP.lattice, HQ.lattice, f};
  if (!hom.is_homomorphism() || !hom.preserves_zero())
    throw std::invalid_argument("lift_hom: not a 0-semilattice homomorphism");
  const int p_count = HP.poset.size();
  const int q_count = HQ.poset.size();
  std::vector<std::vector<int>> matrix(p_count, std::vector<int>(q_count, 0));
  for (int p = 0; p < p_count; ++p) {
    int idx = HP.index_of(HP.poset.down_mask(p));
    Mask image = HQ.sets[f.at(idx)];
    for (int q = 0; q < q_count; ++q)
      if ((image >> q) & 1u) matrix[p][q] = 1;
  }
  // supp(g(x)) = f(supp(x)) on all basis vectors.
  for (int p = 0; p < p_count; ++p) {
    RationalVector basis = characteristic_vector(p_count, Mask(1) << p);
    // The basis vector itself need not be positive; ↓p is the least
    // positive majorant's support, so check against f(↓p) directly.
    RationalVector image = apply_lift(matrix, basis);
    if (image.support() != HQ.sets[f[HP.index_of(HP.poset.down_mask(p))]])
      throw std::logic_error("lift_hom: support condition failed on a basis row");
  }
  return matrix;
}

RationalVector apply_lift(const std::vector<std::vector<int>>& matrix,
                          const RationalVector& x) {
  const int p_count = static_cast<int>(matrix.size());
  if (x.size() != p_count)
    throw std::invalid_argument("apply_lift: size mismatch");
  const int q_count = p_count == 0 ? 0 : static_cast<int>(matrix[0].size());
  RationalVector out;
  out.entries.assign(q_count, Rational(0));
  for (int p = 0; p < p_count; ++p)
    for (int q = 0; q < q_count; ++q)
      if (matrix[p][q]) out.entries[q] += x.entries[p];
  return out;
}

LiftDLatReport verify_lift_dlat(const SetLattice& D) {
  LiftDLatReport report;
  report.image = D.union_semilattice();
  const int n = D.ground_size();
  for (Mask d : D.members()) {
    RationalVector chi = characteristic_vector(n, d);
    if (!is_positive(chi, D) || chi.support() != d) {
      report.defect = "characteristic vector fails to realize a support";
      return report;
    }
  }
  for (Mask a : D.members())
    for (Mask b : D.members()) {
      RationalVector sum =
          characteristic_vector(n, a) + characteristic_vector(n, b);
      if (sum.support() != (a | b)) {
        report.defect = "support of a sum is not the union";
        return report;
      }
      auto witness = propto_witness(characteristic_vector(n, a),
                                    characteristic_vector(n, b), D);
      bool included = (a & ~b) == 0;
      if (witness.has_value() != included) {
        report.defect = "propto criterion disagrees with support inclusion";
        return report;
      }
    }
  report.ok = true;
  return report;
}

LiftTowerResult lift_tower(const std::vector<FiniteSemilattice>& stages,
                           const std::vector<SemilatticeHom>& inclusions) {
  if (stages.empty()) throw std::invalid_argument("lift_tower: empty chain");
  if (inclusions.size() + 1 != stages.size())
    throw std::invalid_argument("lift_tower: chain/inclusion size mismatch");
  LiftTowerResult result;
  for (const auto& S : stages) {
    BirkhoffDefect defect;
    auto dual = birkhoff(S, &defect);
    if (!dual)
      throw std::invalid_argument("lift_tower: stage is " + defect.reason);
    result.duals.push_back(std::move(*dual));
  }
  for (std::size_t i = 0; i < inclusions.size(); ++i) {
    const auto& inc = inclusions[i];
    if (!inc.is_homomorphism() || !inc.is_injective() || !inc.preserves_zero())
      throw std::invalid_argument("lift_tower: inclusion is not a 0-embedding");
    const auto& dn = result.duals[i];
    const auto& dn1 = result.duals[i + 1];
    // f_n = tau_{n+1}^{-1} o inclusion o tau_n on H(P_n).
    std::vector<int> inv(stages[i + 1].size(), -1);
    for (std::size_t k = 0; k < dn1.iso.size(); ++k) inv[dn1.iso[k]] = static_cast<int>(k);
    std::vector<int> f(dn.iso.size());
    for (std::size_t k = 0; k < dn.iso.size(); ++k) {
      int image = inc.map[dn.iso[k]];
      if (inv[image] < 0)
        throw std::logic_error("lift_tower: image misses the dual lattice");
      f[k] = inv[image];
    }
    result.lattice_maps.push_back(
        SemilatticeHom{dn.dual.lattice, dn1.dual.lattice, f});
    result.matrices.push_back(lift_hom(dn.dual, dn1.dual, f));
  }

  // Verify each square on every lower set of P_n, not just the basis.
  for (std::size_t i = 0; i < result.matrices.size(); ++i) {
    const auto& dn = result.duals[i];
    const auto& dn1 = result.duals[i + 1];
    const auto& f = result.lattice_maps[i].map;
    for (std::size_t k = 0; k < dn.dual.sets.size(); ++k) {
      RationalVector x =
          characteristic_vector(dn.poset.size(), dn.dual.sets[k]);
      RationalVector gx = apply_lift(result.matrices[i], x);
      if (gx.support() != dn1.dual.sets[f[k]]) {
        result.defect = "square fails at stage " + std::to_string(i);
        return result;
      }
    }
  }
  result.squares_ok = true;
  return result;
}

Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  try {
    if (slash == std::string::npos)
      return Rational(boost::multiprecision::cpp_int(text));
    boost::multiprecision::cpp_int num(text.substr(0, slash));
    boost::multiprecision::cpp_int den(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator");
    return Rational(num, den);
  } catch (const std::runtime_error&) {
    throw std::invalid_argument("bad rational literal: " + text);
  }
}

std::string rational_to_string(const Rational& r) {
  return r.str();
}

}  // namespace slrep
