#include "ybdeform/groups.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>

namespace ybdeform {

namespace {

std::string int_label(long v) {
  std::ostringstream out;
  out << v;
  return out.str();
}

void require(bool ok, const std::string& message) {
  if (!ok) throw InputError(message);
}

}  // namespace

BuiltTable cyclic_table(int n) {
  require(n >= 1, "cyclic order must be >= 1");
  std::vector<Elem> entries(static_cast<size_t>(n) * n);
  std::vector<std::string> labels(n);
  for (Elem a = 0; a < n; ++a) {
    labels[a] = int_label(a);
    for (Elem b = 0; b < n; ++b)
      entries[static_cast<size_t>(a) * n + b] = (a + b) % n;
  }
  return {CayleyTable(n, std::move(entries)), std::move(labels)};
}

BuiltTable symmetric_table(int n) {
  require(n >= 1 && n <= 4, "symmetric groups are built only for n <= 4");
  std::vector<std::vector<Elem>> perms;
  std::vector<Elem> p(n);
  std::iota(p.begin(), p.end(), 0);
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<Elem>, Elem> index;
  std::vector<std::string> labels;
  for (size_t i = 0; i < perms.size(); ++i) {
    index[perms[i]] = static_cast<Elem>(i);
    std::string one_line;
    for (Elem v : perms[i]) one_line += static_cast<char>('0' + v);
    labels.push_back(one_line);
  }

  const int order = static_cast<int>(perms.size());
  std::vector<Elem> entries(static_cast<size_t>(order) * order);
  std::vector<Elem> composed(n);
  for (Elem a = 0; a < order; ++a)
    for (Elem b = 0; b < order; ++b) {
      for (int i = 0; i < n; ++i) composed[i] = perms[a][perms[b][i]];
      entries[static_cast<size_t>(a) * order + b] = index.at(composed);
    }
  return {CayleyTable(order, std::move(entries)), std::move(labels)};
}

BuiltTable dihedral_table(int n) {
  require(n >= 1, "dihedral parameter must be >= 1");
  const int order = 2 * n;
  std::vector<Elem> entries(static_cast<size_t>(order) * order);
  std::vector<std::string> labels(order);
  for (int k = 0; k < n; ++k) {
    labels[k] = "r" + int_label(k);
    labels[n + k] = "s" + int_label(k);
  }
  // Indices 0..n-1 are the rotations r^k, n..2n-1 the reflections r^k s:
  //   r^x * r^y   = r^{x+y}       r^x * (r^y s) = r^{x+y} s
  //   (r^x s) r^y = r^{x-y} s     (r^x s)(r^y s) = r^{x-y}
  for (Elem x = 0; x < order; ++x)
    for (Elem y = 0; y < order; ++y) {
      Elem result;
      if (x < n && y < n) result = (x + y) % n;
      else if (x < n && y >= n) result = (x + y) % n + n;
      else if (x >= n && y < n) result = (x - y + n) % n + n;
      else result = (x - y + n) % n;
      entries[static_cast<size_t>(x) * order + y] = result;
    }
  return {CayleyTable(order, std::move(entries)), std::move(labels)};
}

BuiltTable units_mod_table(int m) {
  require(m >= 2, "modulus must be >= 2");
  std::vector<int> units;
  for (int u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) units.push_back(u);
  std::map<int, Elem> index;
  std::vector<std::string> labels;
  for (size_t i = 0; i < units.size(); ++i) {
    index[units[i]] = static_cast<Elem>(i);
    labels.push_back(int_label(units[i]));
  }
  const int n = static_cast<int>(units.size());
  std::vector<Elem> entries(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      entries[static_cast<size_t>(a) * n + b] =
          index.at(units[a] * units[b] % m);
  return {CayleyTable(n, std::move(entries)), std::move(labels)};
}

CayleyTable product_table(const CayleyTable& s, const CayleyTable& t) {
  const int ns = s.size(), nt = t.size();
  const int n = ns * nt;
  std::vector<Elem> entries(static_cast<size_t>(n) * n);
  for (Elem a1 = 0; a1 < ns; ++a1)
    for (Elem a2 = 0; a2 < nt; ++a2)
      for (Elem b1 = 0; b1 < ns; ++b1)
        for (Elem b2 = 0; b2 < nt; ++b2) {
          const Elem a = a1 * nt + a2, b = b1 * nt + b2;
          entries[static_cast<size_t>(a) * n + b] =
              s.at(a1, b1) * nt + t.at(a2, b2);
        }
  return CayleyTable(n, std::move(entries));
}

BuiltTable product_table(const BuiltTable& s, const BuiltTable& t) {
  std::vector<std::string> labels;
  labels.reserve(s.labels.size() * t.labels.size());
  for (const auto& ls : s.labels)
    for (const auto& lt : t.labels) labels.push_back("(" + ls + "," + lt + ")");
  return {product_table(s.table, t.table), std::move(labels)};
}

BuiltTable clifford3_table() {
  // e = 0, x = 1, y = 2.
  CayleyTable t = CayleyTable::from_rows({{0, 1, 2}, {1, 1, 2}, {2, 2, 1}});
  return {std::move(t), {"e", "x", "y"}};
}

std::vector<int> semilattice_offsets(const std::vector<CayleyTable>& groups) {
  std::vector<int> offsets(groups.size() + 1, 0);
  for (size_t i = 0; i < groups.size(); ++i)
    offsets[i + 1] = offsets[i] + groups[i].size();
  return offsets;
}

CayleyTable build_strong_semilattice(const CayleyTable& meet,
                                     const std::vector<CayleyTable>& groups,
                                     const ComponentHoms& homs) {
  const int k = meet.size();
  require(static_cast<int>(groups.size()) == k,
          "one group per semilattice component required");

  const SemigroupProfile mp = classify(meet);
  require(mp.associative && mp.commutative &&
              static_cast<int>(mp.idempotents.size()) == k,
          "component order must be a meet-semilattice table");

  for (const auto& g : groups)
    require(classify(g).group, "every component must be a group table");

  // alpha >= beta in the component order iff meet(alpha, beta) = beta.
  const auto leq = [&](int beta, int alpha) {
    return meet.at(alpha, beta) == beta;
  };

  // Resolve the connecting map alpha -> beta, defaulting to the identity on
  // the diagonal.
  const auto hom = [&](int alpha, int beta) -> std::vector<Elem> {
    if (alpha == beta) {
      std::vector<Elem> id(groups[alpha].size());
      std::iota(id.begin(), id.end(), 0);
      return id;
    }
    const auto it = homs.find({alpha, beta});
    if (it == homs.end()) {
      std::ostringstream out;
      out << "missing connecting map " << alpha << " -> " << beta;
      throw InputError(out.str());
    }
    return it->second;
  };

  // Validate every declared and required map: right shape, a homomorphism,
  // and coherent along chains.
  for (int alpha = 0; alpha < k; ++alpha)
    for (int beta = 0; beta < k; ++beta) {
      if (alpha == beta || !leq(beta, alpha)) continue;
      const std::vector<Elem> f = hom(alpha, beta);
      require(f.size() == static_cast<size_t>(groups[alpha].size()),
              "connecting map has wrong domain size");
      for (Elem v : f)
        require(v >= 0 && v < groups[beta].size(),
                "connecting map image out of range");
      for (Elem a = 0; a < groups[alpha].size(); ++a)
        for (Elem b = 0; b < groups[alpha].size(); ++b)
          if (f[groups[alpha].at(a, b)] != groups[beta].at(f[a], f[b])) {
            std::ostringstream out;
            out << "connecting map " << alpha << " -> " << beta
                << " is not a homomorphism at (" << a << ", " << b << ")";
            throw InputError(out.str());
          }
      for (int gamma = 0; gamma < k; ++gamma) {
        if (gamma == beta || !leq(gamma, beta)) continue;
        const std::vector<Elem> g = hom(beta, gamma);
        const std::vector<Elem> direct = hom(alpha, gamma);
        for (Elem a = 0; a < groups[alpha].size(); ++a)
          if (g[f[a]] != direct[a]) {
            std::ostringstream out;
            out << "connecting maps do not compose along " << alpha << " -> "
                << beta << " -> " << gamma;
            throw InputError(out.str());
          }
      }
    }

  const std::vector<int> offsets = semilattice_offsets(groups);
  const int n = offsets.back();
  require(n <= kMaxCarrier, "semilattice carrier exceeds the supported cap");

  std::vector<Elem> entries(static_cast<size_t>(n) * n);
  for (int alpha = 0; alpha < k; ++alpha)
    for (int beta = 0; beta < k; ++beta) {
      const int delta = meet.at(alpha, beta);
      const std::vector<Elem> fa = hom(alpha, delta);
      const std::vector<Elem> fb = hom(beta, delta);
      for (Elem a = 0; a < groups[alpha].size(); ++a)
        for (Elem b = 0; b < groups[beta].size(); ++b) {
          const Elem lhs = offsets[alpha] + a;
          const Elem rhs = offsets[beta] + b;
          entries[static_cast<size_t>(lhs) * n + rhs] =
              offsets[delta] + groups[delta].at(fa[a], fb[b]);
        }
    }
  return CayleyTable(n, std::move(entries));
}

}  // namespace ybdeform
