#include "ybdeform/solution.hpp"

#include <algorithm>
#include <numeric>

namespace ybdeform {

namespace {

void check_map_table(int n, const std::vector<Elem>& entries,
                     const char* which) {
  if (entries.size() != static_cast<size_t>(n) * n)
    throw InputError(std::string(which) + " table has the wrong size");
  for (Elem v : entries)
    if (v < 0 || v >= n)
      throw InputError(std::string(which) + " table entry out of range");
}

}  // namespace

PairMap::PairMap(int n, std::vector<Elem> sigma, std::vector<Elem> tau)
    : n_(n), sigma_(std::move(sigma)), tau_(std::move(tau)) {
  if (n_ <= 0 || n_ > kMaxCarrier) throw InputError("carrier size out of range");
  check_map_table(n_, sigma_, "sigma");
  check_map_table(n_, tau_, "tau");
}

PairMap PairMap::from_tables(const std::vector<std::vector<Elem>>& sigma,
                             const std::vector<std::vector<Elem>>& tau) {
  const CayleyTable s = CayleyTable::from_rows(sigma);
  const CayleyTable t = CayleyTable::from_rows(tau);
  if (s.size() != t.size())
    throw InputError("sigma and tau tables differ in size");
  return PairMap(s.size(), s.entries(), t.entries());
}

BraidCheck check_braid(const PairMap& r) {
  const int n = r.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        // Left side: r12, then r23, then r12.
        Elem l1 = r.sigma(a, b), l2 = r.tau(b, a), l3 = c;
        { const Elem u = r.sigma(l2, l3), v = r.tau(l3, l2); l2 = u; l3 = v; }
        { const Elem u = r.sigma(l1, l2), v = r.tau(l2, l1); l1 = u; l2 = v; }
        // Right side: r23, then r12, then r23.
        Elem m1 = a, m2 = r.sigma(b, c), m3 = r.tau(c, b);
        { const Elem u = r.sigma(m1, m2), v = r.tau(m2, m1); m1 = u; m2 = v; }
        { const Elem u = r.sigma(m2, m3), v = r.tau(m3, m2); m2 = u; m3 = v; }
        if (l1 != m1 || l2 != m2 || l3 != m3) return {false, {a, b, c}};
      }
  return {true, {0, 0, 0}};
}

ComponentChecks check_y1y2y3(const PairMap& r) {
  const int n = r.size();
  ComponentChecks out{true, true, true};
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        if (r.sigma(a, r.sigma(b, c)) !=
            r.sigma(r.sigma(a, b), r.sigma(r.tau(b, a), c)))
          out.y1 = false;
        if (r.sigma(r.tau(r.sigma(b, c), a), r.tau(c, b)) !=
            r.tau(r.sigma(r.tau(b, a), c), r.sigma(a, b)))
          out.y2 = false;
        if (r.tau(c, r.tau(b, a)) !=
            r.tau(r.tau(c, b), r.tau(r.sigma(b, c), a)))
          out.y3 = false;
      }
  return out;
}

SolutionProperties properties(const PairMap& r) {
  const int n = r.size();
  SolutionProperties p;

  std::vector<char> seen(static_cast<size_t>(n) * n, 0);
  p.bijective = true;
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const auto [u, v] = r.apply(a, b);
      char& slot = seen[static_cast<size_t>(u) * n + v];
      if (slot) p.bijective = false;
      slot = 1;
    }

  const auto row_is_permutation = [n](auto&& row) {
    std::vector<char> hit(n, 0);
    for (Elem x = 0; x < n; ++x) {
      const Elem y = row(x);
      if (hit[y]) return false;
      hit[y] = 1;
    }
    return true;
  };
  p.left_nondegenerate = true;
  p.right_nondegenerate = true;
  for (Elem a = 0; a < n; ++a) {
    if (!row_is_permutation([&](Elem b) { return r.sigma(a, b); }))
      p.left_nondegenerate = false;
    if (!row_is_permutation([&](Elem x) { return r.tau(a, x); }))
      p.right_nondegenerate = false;
  }

  p.involutive = true;
  for (Elem a = 0; a < n && p.involutive; ++a)
    for (Elem b = 0; b < n; ++b) {
      const auto [u, v] = r.apply(a, b);
      if (r.apply(u, v) != std::pair<Elem, Elem>{a, b}) {
        p.involutive = false;
        break;
      }
    }
  return p;
}

PairMap canonical_solution(const WeakBrace& w) {
  const int n = w.size();
  std::vector<Elem> sigma(static_cast<size_t>(n) * n);
  std::vector<Elem> tau(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      sigma[static_cast<size_t>(a) * n + b] = w.lambda(a, b);
      tau[static_cast<size_t>(b) * n + a] = w.rho(b, a);
    }
  return PairMap(n, std::move(sigma), std::move(tau));
}

PairMap opposite_solution(const WeakBrace& w) {
  const int n = w.size();
  std::vector<Elem> sigma(static_cast<size_t>(n) * n);
  std::vector<Elem> tau(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      sigma[static_cast<size_t>(a) * n + b] = w.lambda_op(a, b);
      tau[static_cast<size_t>(b) * n + a] = w.rho_op(b, a);
    }
  return PairMap(n, std::move(sigma), std::move(tau));
}

PairMap twist_map(int n) {
  std::vector<Elem> sigma(static_cast<size_t>(n) * n);
  std::vector<Elem> tau(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      sigma[static_cast<size_t>(a) * n + b] = b;
      tau[static_cast<size_t>(a) * n + b] = b;
    }
  return PairMap(n, std::move(sigma), std::move(tau));
}

bool completely_regular_pair(const PairMap& r, const PairMap& s) {
  if (r.size() != s.size()) throw InputError("maps live on different carriers");
  const int n = r.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const auto rs = [&](std::pair<Elem, Elem> p) { return r.apply(p.first, p.second); };
      const auto ss = [&](std::pair<Elem, Elem> p) { return s.apply(p.first, p.second); };
      const std::pair<Elem, Elem> p{a, b};
      if (rs(ss(rs(p))) != rs(p)) return false;
      if (ss(rs(ss(p))) != ss(p)) return false;
      if (rs(ss(p)) != ss(rs(p))) return false;
    }
  return true;
}

std::optional<std::vector<Elem>> find_equivalence(const PairMap& r,
                                                  const PairMap& s,
                                                  std::uint64_t budget) {
  if (r.size() != s.size())
    throw InputError("equivalence search needs carriers of equal size");
  const int n = r.size();

  std::uint64_t permutations = 1;
  for (int i = 2; i <= n; ++i) {
    permutations *= static_cast<std::uint64_t>(i);
    if (permutations > budget) {
      throw BudgetError(
          "equivalence search refused: permutation count exceeds budget");
    }
  }

  std::vector<Elem> phi(n, -1);
  std::vector<char> used(n, 0);

  // After extending phi to 0..k, every instance of the intertwining
  // condition whose four participants are all assigned must already hold.
  // Checking only instances that involve the newest point keeps the scan
  // incremental.
  const auto consistent_with = [&](Elem k) {
    for (Elem a = 0; a <= k; ++a)
      for (Elem b = 0; b <= k; ++b) {
        if (a != k && b != k && r.sigma(a, b) != k && r.tau(b, a) != k)
          continue;
        const Elem sr = r.sigma(a, b);
        if (phi[sr] != -1 && phi[sr] != s.sigma(phi[a], phi[b])) return false;
        const Elem tr = r.tau(b, a);
        if (phi[tr] != -1 && phi[tr] != s.tau(phi[b], phi[a])) return false;
      }
    return true;
  };

  // Lexicographic backtracking: images are tried in ascending order, so the
  // first complete assignment is the lexicographically least witness.
  const auto search = [&](auto&& self, Elem k) -> bool {
    if (k == n) return true;
    for (Elem v = 0; v < n; ++v) {
      if (used[v]) continue;
      phi[k] = v;
      used[v] = 1;
      if (consistent_with(k) && self(self, k + 1)) return true;
      phi[k] = -1;
      used[v] = 0;
    }
    return false;
  };

  if (search(search, 0)) return phi;
  return std::nullopt;
}

}  // namespace ybdeform
