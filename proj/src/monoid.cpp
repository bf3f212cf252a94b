#include "slrep/monoid.hpp"

#include <algorithm>
#include <stdexcept>

namespace slrep {

std::optional<AxiomDefect> validate_monoid_table(const std::vector<int>& table,
                                                 int n, int zero) {
  if (n < 0 || static_cast<int>(table.size()) != n * n || zero < 0 || zero >= n)
    return AxiomDefect{"shape", {n, static_cast<int>(table.size()), zero}};
  for (int i = 0; i < n * n; ++i)
    if (table[i] < 0 || table[i] >= n)
      return AxiomDefect{"shape", {i / n, i % n, table[i]}};
  auto at = [&](int x, int y) { return table[x * n + y]; };
  for (int x = 0; x < n; ++x)
    if (at(zero, x) != x || at(x, zero) != x)
      return AxiomDefect{"neutrality", {x, -1, -1}};
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

FiniteCommutativeMonoid::FiniteCommutativeMonoid(std::vector<std::string> labels,
                                                 std::vector<int> table, int zero)
    : n_(static_cast<int>(labels.size())),
      zero_(zero),
      labels_(std::move(labels)),
      table_(std::move(table)) {
  if (auto defect = validate_monoid_table(table_, n_, zero_))
    throw std::invalid_argument("Cayley table fails " + defect->axiom);
}

int FiniteCommutativeMonoid::times(int k, int x) const {
  int v = zero_;
  for (int i = 0; i < k; ++i) v = add(v, x);
  return v;
}

bool FiniteCommutativeMonoid::alg_leq(int x, int y) const {
  for (int z = 0; z < n_; ++z)
    if (add(x, z) == y) return true;
  return false;
}

bool propto(const FiniteCommutativeMonoid& M, int x, int y) {
  // The multiples of y take at most |M| distinct values.
  int ny = M.zero();
  for (int n = 1; n <= M.size(); ++n) {
    ny = M.add(ny, y);
    if (M.alg_leq(x, ny)) return true;
  }
  return false;
}

NablaResult nabla(const FiniteCommutativeMonoid& M) {
  const int n = M.size();
  std::vector<std::vector<bool>> prop(n, std::vector<bool>(n));
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) prop[x][y] = propto(M, x, y);

  std::vector<int> cls(n, -1);
  std::vector<int> reps;
  for (int x = 0; x < n; ++x) {
    for (std::size_t b = 0; b < reps.size(); ++b)
      if (prop[x][reps[b]] && prop[reps[b]][x]) {
        cls[x] = static_cast<int>(b);
        break;
      }
    if (cls[x] < 0) {
      cls[x] = static_cast<int>(reps.size());
      reps.push_back(x);
    }
  }
  const int k = static_cast<int>(reps.size());
  std::vector<std::string> labels(k);
  for (int b = 0; b < k; ++b) {
    std::string lab;
    for (int x = 0; x < n; ++x)
      if (cls[x] == b) {
        if (!lab.empty()) lab += "=";
        lab += M.label(x);
      }
    labels[b] = "[" + lab + "]";
  }
  std::vector<int> table(k * k);
  for (int b = 0; b < k; ++b)
    for (int c = 0; c < k; ++c) table[b * k + c] = cls[M.add(reps[b], reps[c])];
  return NablaResult{FiniteSemilattice(std::move(labels), std::move(table)),
                     std::move(cls)};
}

PropertyReport property_report(const FiniteCommutativeMonoid& M) {
  PropertyReport report;
  const int n = M.size();

  for (int a0 = 0; a0 < n && report.refinement.holds; ++a0)
    for (int a1 = 0; a1 < n && report.refinement.holds; ++a1)
      for (int b0 = 0; b0 < n && report.refinement.holds; ++b0)
        for (int b1 = 0; b1 < n && report.refinement.holds; ++b1) {
          if (M.add(a0, a1) != M.add(b0, b1)) continue;
          bool found = false;
          for (int c00 = 0; c00 < n && !found; ++c00)
            for (int c01 = 0; c01 < n && !found; ++c01) {
              if (M.add(c00, c01) != a0) continue;
              for (int c10 = 0; c10 < n && !found; ++c10)
                for (int c11 = 0; c11 < n && !found; ++c11)
                  if (M.add(c10, c11) == a1 && M.add(c00, c10) == b0 &&
                      M.add(c01, c11) == b1)
                    found = true;
            }
          if (!found) report.refinement = PropertyFlag{false, {a0, a1, b0, b1}};
        }

  for (int a = 0; a < n && report.riesz.holds; ++a)
    for (int b0 = 0; b0 < n && report.riesz.holds; ++b0)
      for (int b1 = 0; b1 < n && report.riesz.holds; ++b1) {
        if (!M.alg_leq(a, M.add(b0, b1))) continue;
        bool found = false;
        for (int a0 = 0; a0 < n && !found; ++a0) {
          if (!M.alg_leq(a0, b0)) continue;
          for (int a1 = 0; a1 < n && !found; ++a1)
            if (M.alg_leq(a1, b1) && M.add(a0, a1) == a) found = true;
        }
        if (!found) report.riesz = PropertyFlag{false, {a, b0, b1}};
      }

  for (int x = 0; x < n && report.conical.holds; ++x)
    for (int y = 0; y < n && report.conical.holds; ++y)
      if (M.add(x, y) == M.zero() && (x != M.zero() || y != M.zero()))
        report.conical = PropertyFlag{false, {x, y}};

  for (int x = 0; x < n && report.cancellative.holds; ++x)
    for (int a = 0; a < n && report.cancellative.holds; ++a)
      for (int b = 0; b < n && report.cancellative.holds; ++b)
        if (M.add(x, a) == M.add(x, b) && a != b)
          report.cancellative = PropertyFlag{false, {x, a, b}};

  return report;
}

IdcResult idc(const FiniteCommutativeMonoid& M) {
  const int n = M.size();
  if (n > 20) throw std::invalid_argument("idc: monoid too large");
  IdcResult result;

  for (Mask m = 1; m < (Mask(1) << n); ++m) {
    bool ideal = true;
    for (int x = 0; x < n && ideal; ++x)
      for (int y = 0; y < n && ideal; ++y) {
        bool sum_in = (m >> M.add(x, y)) & 1u;
        bool both_in = ((m >> x) & 1u) && ((m >> y) & 1u);
        if (sum_in != both_in) ideal = false;
      }
    if (ideal) result.ideals.push_back(m);
  }

  const int k = static_cast<int>(result.ideals.size());
  auto index_of = [&](Mask m) {
    auto it = std::lower_bound(result.ideals.begin(), result.ideals.end(), m);
    return static_cast<int>(it - result.ideals.begin());
  };
  // Join of two ideals: intersection of all ideals containing both (the
  // collection is closed under intersection and contains M itself).
  std::vector<int> table(k * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) {
      Mask target = result.ideals[i] | result.ideals[j];
      Mask acc = (Mask(1) << n) - 1;
      for (Mask c : result.ideals)
        if ((c & target) == target) acc &= c;
      table[i * k + j] = index_of(acc);
    }
  std::vector<std::string> labels(k);
  for (int i = 0; i < k; ++i) {
    std::string lab = "{";
    for (int x = 0; x < n; ++x)
      if ((result.ideals[i] >> x) & 1u) {
        if (lab.size() > 1) lab += ",";
        lab += M.label(x);
      }
    labels[i] = lab + "}";
  }
  result.semilattice = FiniteSemilattice(std::move(labels), std::move(table));

  result.nabla = nabla(M);
  const int classes = result.nabla.quotient.size();
  result.theta.assign(classes, -1);
  for (int x = 0; x < n; ++x) {
    int c = result.nabla.projection[x];
    if (result.theta[c] >= 0) continue;
    Mask principal = 0;
    for (int z = 0; z < n; ++z)
      if (propto(M, z, x)) principal |= Mask(1) << z;
    result.theta[c] = index_of(principal);
  }

  result.theta_is_isomorphism = classes == k;
  if (result.theta_is_isomorphism) {
    std::vector<char> seen(k, 0);
    for (int c = 0; c < classes; ++c) {
      if (seen[result.theta[c]]) result.theta_is_isomorphism = false;
      seen[result.theta[c]] = 1;
    }
    const auto& Q = result.nabla.quotient;
    for (int c1 = 0; c1 < classes && result.theta_is_isomorphism; ++c1)
      for (int c2 = 0; c2 < classes; ++c2)
        if (result.theta[Q.join(c1, c2)] !=
            result.semilattice.join(result.theta[c1], result.theta[c2])) {
          result.theta_is_isomorphism = false;
          break;
        }
  }
  return result;
}

StrongRipWitness strong_rip_witness(long long n, const SimplicialElement& a,
                                    const SimplicialElement& b,
                                    const SimplicialElement& c,
                                    const SimplicialElement& d) {
  const std::size_t k = a.coords.size();
  if (n < 1 || b.coords.size() != k || c.coords.size() != k ||
      d.coords.size() != k)
    throw std::invalid_argument("strong_rip_witness: shape mismatch");
  for (std::size_t t = 0; t < k; ++t) {
    if (a.coords[t] < 0 || b.coords[t] < 0 || c.coords[t] < 0 || d.coords[t] < 0)
      throw std::invalid_argument("strong_rip_witness: negative coordinate");
    if (n * a.coords[t] + b.coords[t] != n * c.coords[t] + d.coords[t])
      throw std::invalid_argument("strong_rip_witness: na+b != nc+d");
  }
  StrongRipWitness w;
  w.u.coords.resize(k);
  w.v.coords.resize(k);
  w.w.coords.resize(k);
  w.z.coords.resize(k);
  for (std::size_t t = 0; t < k; ++t) {
    long long e = n * a.coords[t] - d.coords[t];  // = n*c - b
    long long u = e <= 0 ? 0 : (e + n - 1) / n;
    w.u.coords[t] = u;
    w.v.coords[t] = a.coords[t] - u;
    w.w.coords[t] = c.coords[t] - u;
    w.z.coords[t] = d.coords[t] - n * w.v.coords[t];
  }
  return w;
}

SemilatticeHom simplicial_nabla_map(
    const std::vector<std::vector<long long>>& matrix) {
  const int k = static_cast<int>(matrix.size());
  const int l = k == 0 ? 0 : static_cast<int>(matrix[0].size());
  std::vector<int> row_support(k, 0);
  for (int i = 0; i < k; ++i) {
    if (static_cast<int>(matrix[i].size()) != l)
      throw std::invalid_argument("ragged matrix");
    for (int j = 0; j < l; ++j) {
      if (matrix[i][j] < 0)
        throw std::invalid_argument("negative multiplicity");
      if (matrix[i][j] >= 1) row_support[i] |= 1 << j;
    }
  }
  FiniteSemilattice source = boolean_semilattice(k);
  FiniteSemilattice target = boolean_semilattice(l);
  std::vector<int> map(source.size(), 0);
  for (int mask = 0; mask < source.size(); ++mask)
    for (int i = 0; i < k; ++i)
      if ((mask >> i) & 1) map[mask] |= row_support[i];
  return SemilatticeHom{std::move(source), std::move(target), std::move(map)};
}

}  // namespace slrep
