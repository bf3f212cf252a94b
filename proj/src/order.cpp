#include "slrep/order.hpp"

#include <algorithm>
#include <stdexcept>

namespace slrep {

FinitePoset::FinitePoset(std::vector<std::string> labels,
                         const std::vector<std::pair<int, int>>& relation,
                         RelationInput)
    : labels_(std::move(labels)) {
  const int n = static_cast<int>(labels_.size());
  if (n > 31) throw std::invalid_argument("poset too large for bitset masks");
  below_.assign(n, 0);
  for (int p = 0; p < n; ++p) below_[p] |= Mask(1) << p;
  for (auto& [p, q] : relation) {
    if (p < 0 || p >= n || q < 0 || q >= n)
      throw std::invalid_argument("relation index out of range");
    below_[q] |= Mask(1) << p;
  }
  // Transitive closure; cover input and full input converge to the same fixpoint.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int q = 0; q < n; ++q) {
      Mask acc = below_[q];
      for (int p = 0; p < n; ++p)
        if ((below_[q] >> p) & 1u) acc |= below_[p];
      if (acc != below_[q]) {
        below_[q] = acc;
        changed = true;
      }
    }
  }
  for (int p = 0; p < n; ++p)
    for (int q = p + 1; q < n; ++q)
      if (leq(p, q) && leq(q, p))
        throw std::invalid_argument("relation is not antisymmetric: " +
                                    labels_[p] + " and " + labels_[q]);
}

Mask FinitePoset::down_mask(int p) const {
  if (p < 0 || p >= size()) throw std::out_of_range("poset index");
  return below_[p];
}

bool FinitePoset::is_lower_set(Mask m) const {
  for (int q = 0; q < size(); ++q)
    if ((m >> q) & 1u)
      if ((below_[q] & m) != below_[q]) return false;
  return true;
}

Mask FinitePoset::lower_closure(Mask m) const {
  Mask out = 0;
  for (int q = 0; q < size(); ++q)
    if ((m >> q) & 1u) out |= below_[q];
  return out;
}

std::vector<std::pair<int, int>> FinitePoset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < size(); ++p)
    for (int q = 0; q < size(); ++q) {
      if (p == q || !leq(p, q)) continue;
      bool cover = true;
      for (int z = 0; z < size() && cover; ++z)
        if (z != p && z != q && leq(p, z) && leq(z, q)) cover = false;
      if (cover) out.emplace_back(p, q);
    }
  return out;
}

LowerSet down_set(const FinitePoset& P, int p) { return LowerSet{P.down_mask(p)}; }

namespace {

std::string set_label(const FinitePoset& P, Mask m) {
  std::string lab = "{";
  for (int p = 0; p < P.size(); ++p)
    if ((m >> p) & 1u) {
      if (lab.size() > 1) lab += ",";
      lab += P.label(p);
    }
  return lab + "}";
}

}  // namespace

int LowerSetLattice::index_of(Mask m) const {
  auto it = std::lower_bound(sets.begin(), sets.end(), m);
  if (it == sets.end() || *it != m) return -1;
  return static_cast<int>(it - sets.begin());
}

LowerSetLattice lower_sets(const FinitePoset& P) {
  LowerSetLattice out;
  out.poset = P;
  for (Mask m = 0; m < (Mask(1) << P.size()); ++m)
    if (P.is_lower_set(m)) out.sets.push_back(m);
  const int k = static_cast<int>(out.sets.size());
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) labels[i] = set_label(P, out.sets[i]);
  std::vector<int> table(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      table[i * k + j] = out.index_of(out.sets[i] | out.sets[j]);
  out.lattice = FiniteSemilattice(std::move(labels), std::move(table));
  return out;
}

std::optional<BirkhoffResult> birkhoff(const FiniteSemilattice& L,
                                       BirkhoffDefect* defect) {
  auto bottom = L.least();
  if (!bottom) {
    // A finite join-semilattice is a lattice iff it has a least element;
    // witness: a pair with no common lower bound does not exist here, so
    // report the two minimal elements.
    if (defect) {
      std::vector<int> minimal;
      for (int x = 0; x < L.size(); ++x)
        if (L.lower_covers(x).empty()) minimal.push_back(x);
      *defect = BirkhoffDefect{"not-a-lattice", std::move(minimal)};
    }
    return std::nullopt;
  }
  if (auto w = distributivity_defect(L)) {
    if (defect) *defect = BirkhoffDefect{"not-distributive", {w->a, w->b0, w->b1}};
    return std::nullopt;
  }

  // x is join-irreducible iff x differs from the join of all strictly
  // smaller elements.
  std::vector<int> irr;
  for (int x = 0; x < L.size(); ++x) {
    if (x == *bottom) continue;
    int j = *bottom;
    for (int y = 0; y < L.size(); ++y)
      if (y != x && L.leq(y, x)) j = L.join(j, y);
    if (j != x) irr.push_back(x);
  }

  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> rel;
  for (std::size_t i = 0; i < irr.size(); ++i) labels.push_back(L.label(irr[i]));
  for (std::size_t i = 0; i < irr.size(); ++i)
    for (std::size_t j = 0; j < irr.size(); ++j)
      if (L.leq(irr[i], irr[j])) rel.emplace_back(static_cast<int>(i),
                                                  static_cast<int>(j));
  BirkhoffResult res;
  res.poset = FinitePoset(std::move(labels), rel, RelationInput::full);
  res.join_irreducibles = irr;
  res.dual = lower_sets(res.poset);
  res.iso.resize(res.dual.sets.size());
  for (std::size_t k = 0; k < res.dual.sets.size(); ++k) {
    int v = *bottom;
    for (std::size_t i = 0; i < irr.size(); ++i)
      if ((res.dual.sets[k] >> i) & 1u) v = L.join(v, irr[i]);
    res.iso[k] = v;
  }
  return res;
}

std::vector<int> meet_irreducibles(const FiniteSemilattice& L) {
  if (!L.is_lattice()) throw std::invalid_argument("not a lattice");
  std::vector<int> out;
  auto top = L.greatest();
  for (int x = 0; x < L.size(); ++x)
    if (x != *top && L.upper_covers(x).size() == 1) out.push_back(x);
  return out;
}

FinitePoset chain_poset(int n) {
  std::vector<std::string> labels(n);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
  for (int i = 0; i + 1 < n; ++i) covers.emplace_back(i, i + 1);
  return FinitePoset(std::move(labels), covers);
}

FinitePoset antichain_poset(int n) {
  std::vector<std::string> labels(n);
  for (int i = 0; i < n; ++i) labels[i] = "p" + std::to_string(i);
  return FinitePoset(std::move(labels), {});
}

}  // namespace slrep
