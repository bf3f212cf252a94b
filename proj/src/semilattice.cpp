#include "slrep/semilattice.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace slrep {

std::optional<AxiomDefect> validate_join_table(const std::vector<int>& table,
                                               int n) {
  if (n < 0 || static_cast<int>(table.size()) != n * n)
    return AxiomDefect{"shape", {n, static_cast<int>(table.size()), -1}};
  for (int i = 0; i < n * n; ++i)
    if (table[i] < 0 || table[i] >= n)
      return AxiomDefect{"shape", {i / n, i % n, table[i]}};
  auto at = [&](int x, int y) { return table[x * n + y]; };
  for (int x = 0; x < n; ++x)
    if (at(x, x) != x) return AxiomDefect{"idempotence", {x, -1, -1}};
  for (int x = 0; x < n; ++x)
    for (int y = x + 1; y < n; ++y)
      if (at(x, y) != at(y, x)) return AxiomDefect{"commutativity", {x, y, -1}};
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y)
      for (int z = 0; z < n; ++z)
        if (at(at(x, y), z) != at(x, at(y, z)))
          return AxiomDefect{"associativity", {x, y, z}};
  return std::nullopt;
}

FiniteSemilattice::FiniteSemilattice(std::vector<std::string> labels,
                                     std::vector<int> table)
    : n_(static_cast<int>(labels.size())),
      labels_(std::move(labels)),
      table_(std::move(table)) {
  if (auto defect = validate_join_table(table_, n_))
    throw std::invalid_argument("join table fails " + defect->axiom);
}

std::optional<int> FiniteSemilattice::least() const {
  for (int x = 0; x < n_; ++x) {
    bool below_all = true;
    for (int y = 0; y < n_ && below_all; ++y) below_all = leq(x, y);
    if (below_all) return x;
  }
  return std::nullopt;
}

std::optional<int> FiniteSemilattice::greatest() const {
  if (n_ == 0) return std::nullopt;
  int top = 0;
  for (int x = 1; x < n_; ++x) top = join(top, x);
  return top;
}

int FiniteSemilattice::meet(int x, int y) const {
  auto bottom = least();
  if (!bottom) throw std::invalid_argument("meet requires a lattice");
  int m = *bottom;
  for (int z = 0; z < n_; ++z)
    if (leq(z, x) && leq(z, y)) m = join(m, z);
  return m;
}

std::vector<int> FiniteSemilattice::upper_covers(int x) const {
  std::vector<int> covers;
  for (int y = 0; y < n_; ++y) {
    if (y == x || !leq(x, y)) continue;
    bool cover = true;
    for (int z = 0; z < n_ && cover; ++z)
      if (z != x && z != y && leq(x, z) && leq(z, y)) cover = false;
    if (cover) covers.push_back(y);
  }
  return covers;
}

std::vector<int> FiniteSemilattice::lower_covers(int x) const {
  std::vector<int> covers;
  for (int y = 0; y < n_; ++y) {
    if (y == x || !leq(y, x)) continue;
    bool cover = true;
    for (int z = 0; z < n_ && cover; ++z)
      if (z != x && z != y && leq(y, z) && leq(z, x)) cover = false;
    if (cover) covers.push_back(y);
  }
  return covers;
}

bool SemilatticeHom::is_homomorphism() const {
  if (static_cast<int>(map.size()) != source.size()) return false;
  for (int v : map)
    if (v < 0 || v >= target.size()) return false;
  for (int x = 0; x < source.size(); ++x)
    for (int y = 0; y < source.size(); ++y)
      if (map[source.join(x, y)] != target.join(map[x], map[y])) return false;
  return true;
}

bool SemilatticeHom::preserves_zero() const {
  auto s0 = source.least();
  auto t0 = target.least();
  return s0 && t0 && map[*s0] == *t0;
}

bool SemilatticeHom::preserves_one() const {
  auto s1 = source.greatest();
  auto t1 = target.greatest();
  return s1 && t1 && map[*s1] == *t1;
}

bool SemilatticeHom::is_injective() const {
  std::vector<char> seen(target.size(), 0);
  for (int v : map) {
    if (seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

bool SemilatticeHom::is_surjective() const {
  std::vector<char> seen(target.size(), 0);
  for (int v : map) seen[v] = 1;
  return std::all_of(seen.begin(), seen.end(), [](char c) { return c != 0; });
}

SemilatticeHom compose(const SemilatticeHom& g, const SemilatticeHom& f) {
  std::vector<int> map(f.map.size());
  for (std::size_t i = 0; i < f.map.size(); ++i) map[i] = g.map[f.map[i]];
  return SemilatticeHom{f.source, g.target, std::move(map)};
}

SemilatticeHom identity_hom(const FiniteSemilattice& S) {
  std::vector<int> map(S.size());
  std::iota(map.begin(), map.end(), 0);
  return SemilatticeHom{S, S, std::move(map)};
}

namespace {

Congruence canonical_partition(const std::vector<int>& raw, int n) {
  Congruence c;
  c.block_of.assign(n, -1);
  std::vector<int> rename;
  for (int x = 0; x < n; ++x) {
    int found = -1;
    for (std::size_t b = 0; b < rename.size(); ++b)
      if (raw[rename[b]] == raw[x]) {
        found = static_cast<int>(b);
        break;
      }
    if (found < 0) {
      found = static_cast<int>(rename.size());
      rename.push_back(x);
    }
    c.block_of[x] = found;
  }
  c.block_count = static_cast<int>(rename.size());
  return c;
}

}  // namespace

Congruence kernel(const SemilatticeHom& f) {
  return canonical_partition(f.map, f.source.size());
}

std::optional<DistributivityWitness> distributivity_defect(
    const FiniteSemilattice& S) {
  const int n = S.size();
  for (int a = 0; a < n; ++a)
    for (int b0 = 0; b0 < n; ++b0)
      for (int b1 = b0; b1 < n; ++b1) {
        if (!S.leq(a, S.join(b0, b1))) continue;
        bool split = false;
        for (int a0 = 0; a0 < n && !split; ++a0) {
          if (!S.leq(a0, b0)) continue;
          for (int a1 = 0; a1 < n && !split; ++a1)
            if (S.leq(a1, b1) && S.join(a0, a1) == a) split = true;
        }
        if (!split) return DistributivityWitness{a, b0, b1};
      }
  return std::nullopt;
}

bool is_distributive(const FiniteSemilattice& S) {
  return !distributivity_defect(S).has_value();
}

std::optional<int> solve_constraints(
    const FiniteSemilattice& S,
    const std::vector<std::pair<int, int>>& lower_pairs,
    const std::vector<int>& uppers) {
  if (lower_pairs.empty() && !S.least())
    throw std::invalid_argument(
        "solve_constraints with no lower pairs needs a least element");
  std::vector<int> solutions;
  for (int x = 0; x < S.size(); ++x) {
    bool ok = true;
    for (auto& [a, b] : lower_pairs)
      if (!S.leq(a, S.join(b, x))) {
        ok = false;
        break;
      }
    for (int c : uppers)
      if (ok && !S.leq(x, c)) ok = false;
    if (ok) solutions.push_back(x);
  }
  if (solutions.empty()) return std::nullopt;
  int best = solutions.front();
  for (int x : solutions)
    if (S.leq(x, best)) best = x;
  for (int x : solutions)
    if (!S.leq(best, x))
      throw std::logic_error("constraint solutions have no minimum");
  return best;
}

FactoredHom factor_hom(const SemilatticeHom& f) {
  if (!f.is_homomorphism())
    throw std::invalid_argument("factor_hom: not a homomorphism");
  Congruence ker = kernel(f);
  const int n = f.source.size();
  const int k = ker.block_count;

  std::vector<int> representative(k, -1);
  for (int x = 0; x < n; ++x)
    if (representative[ker.block_of[x]] < 0) representative[ker.block_of[x]] = x;

  std::vector<std::string> labels(k);
  for (int b = 0; b < k; ++b) {
    std::string lab;
    for (int x = 0; x < n; ++x)
      if (ker.block_of[x] == b) {
        if (!lab.empty()) lab += "=";
        lab += f.source.label(x);
      }
    labels[b] = "[" + lab + "]";
  }
  std::vector<int> table(k * k);
  for (int b = 0; b < k; ++b)
    for (int c = 0; c < k; ++c)
      table[b * k + c] =
          ker.block_of[f.source.join(representative[b], representative[c])];
  FiniteSemilattice quotient(std::move(labels), std::move(table));

  SemilatticeHom projection{f.source, quotient, ker.block_of};
  std::vector<int> emb(k);
  for (int b = 0; b < k; ++b) emb[b] = f.map[representative[b]];
  SemilatticeHom embedding{quotient, f.target, std::move(emb)};
  return FactoredHom{std::move(quotient), std::move(projection),
                     std::move(embedding), std::move(ker)};
}

std::vector<int> subsemilattice_closure(const FiniteSemilattice& S,
                                        const std::vector<int>& seed) {
  if (seed.empty()) throw std::invalid_argument("empty seed");
  std::vector<char> in(S.size(), 0);
  for (int x : seed) in.at(x) = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < S.size(); ++x)
      for (int y = 0; y < S.size(); ++y)
        if (in[x] && in[y] && !in[S.join(x, y)]) {
          in[S.join(x, y)] = 1;
          changed = true;
        }
  }
  std::vector<int> out;
  for (int x = 0; x < S.size(); ++x)
    if (in[x]) out.push_back(x);
  return out;
}

namespace {

// Degree-style invariant used to prune the isomorphism search.
std::vector<int> element_signature(const FiniteSemilattice& S, int x) {
  int below = 0, above = 0;
  for (int y = 0; y < S.size(); ++y) {
    if (S.leq(y, x)) ++below;
    if (S.leq(x, y)) ++above;
  }
  return {below, above, static_cast<int>(S.upper_covers(x).size()),
          static_cast<int>(S.lower_covers(x).size())};
}

bool extend_iso(const FiniteSemilattice& S, const FiniteSemilattice& T,
                std::vector<int>& map, std::vector<char>& used, int x,
                const std::vector<std::vector<int>>& sig_s,
                const std::vector<std::vector<int>>& sig_t) {
  if (x == S.size()) return true;
  for (int y = 0; y < T.size(); ++y) {
    if (used[y] || sig_s[x] != sig_t[y]) continue;
    // An order isomorphism between finite join-semilattices preserves
    // joins (least upper bounds), so order compatibility on all placed
    // pairs is the whole constraint.
    bool ok = true;
    for (int z = 0; z < x && ok; ++z) {
      if (S.leq(x, z) != T.leq(y, map[z])) ok = false;
      if (S.leq(z, x) != T.leq(map[z], y)) ok = false;
    }
    if (!ok) continue;
    map[x] = y;
    used[y] = 1;
    if (extend_iso(S, T, map, used, x + 1, sig_s, sig_t)) return true;
    used[y] = 0;
  }
  return false;
}

}  // namespace

std::optional<std::vector<int>> is_isomorphic(const FiniteSemilattice& S,
                                              const FiniteSemilattice& T) {
  if (S.size() != T.size()) return std::nullopt;
  std::vector<std::vector<int>> sig_s(S.size()), sig_t(T.size());
  for (int x = 0; x < S.size(); ++x) sig_s[x] = element_signature(S, x);
  for (int y = 0; y < T.size(); ++y) sig_t[y] = element_signature(T, y);
  {
    auto a = sig_s;
    auto b = sig_t;
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    if (a != b) return std::nullopt;
  }
  std::vector<int> map(S.size(), -1);
  std::vector<char> used(T.size(), 0);
  if (!extend_iso(S, T, map, used, 0, sig_s, sig_t)) return std::nullopt;
  // Full verification: join-preserving bijection.
  for (int x = 0; x < S.size(); ++x)
    for (int y = 0; y < S.size(); ++y)
      if (map[S.join(x, y)] != T.join(map[x], map[y]))
        throw std::logic_error("isomorphism search returned a non-hom");
  return map;
}

std::optional<BooleanStructure> boolean_structure(const FiniteSemilattice& S) {
  const int n = S.size();
  if (n == 0 || (n & (n - 1)) != 0) return std::nullopt;
  int rank = 0;
  while ((1 << rank) < n) ++rank;
  if (rank == 0) return BooleanStructure{0, {}, {0}};
  auto bottom = S.least();
  if (!bottom) return std::nullopt;
  std::vector<int> atoms;
  for (int x = 0; x < n; ++x)
    if (x != *bottom && S.lower_covers(x) == std::vector<int>{*bottom})
      atoms.push_back(x);
  if (static_cast<int>(atoms.size()) != rank) return std::nullopt;
  std::vector<int> iso(n, -1);
  std::vector<char> hit(n, 0);
  for (int mask = 0; mask < n; ++mask) {
    int v = *bottom;
    for (int i = 0; i < rank; ++i)
      if ((mask >> i) & 1) v = S.join(v, atoms[i]);
    iso[mask] = v;
    if (hit[v]) return std::nullopt;
    hit[v] = 1;
  }
  return BooleanStructure{rank, std::move(atoms), std::move(iso)};
}

FiniteSemilattice boolean_semilattice(int n,
                                      const std::vector<std::string>& atom_labels) {
  if (n < 0 || n > 20) throw std::invalid_argument("boolean rank out of range");
  std::vector<std::string> names(n);
  for (int i = 0; i < n; ++i)
    names[i] = i < static_cast<int>(atom_labels.size())
                   ? atom_labels[i]
                   : std::string(1, static_cast<char>('a' + i));
  const int size = 1 << n;
  std::vector<std::string> labels(size);
  for (int mask = 0; mask < size; ++mask) {
    std::string lab = "{";
    for (int i = 0; i < n; ++i)
      if ((mask >> i) & 1) {
        if (lab.size() > 1) lab += ",";
        lab += names[i];
      }
    labels[mask] = lab + "}";
  }
  std::vector<int> table(size * size);
  for (int x = 0; x < size; ++x)
    for (int y = 0; y < size; ++y) table[x * size + y] = x | y;
  return FiniteSemilattice(std::move(labels), std::move(table));
}

}  // namespace slrep
