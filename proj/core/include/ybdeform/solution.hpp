#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "ybdeform/brace.hpp"

namespace ybdeform {

// A candidate set-theoretic solution r(a, b) = (sigma_a(b), tau_b(a)) on
// {0..n-1}, stored as two n x n tables.  The row index is the map's
// subscript: sigma row a tabulates sigma_a, tau row b tabulates tau_b.
class PairMap {
 public:
  PairMap(int n, std::vector<Elem> sigma, std::vector<Elem> tau);
  static PairMap from_tables(const std::vector<std::vector<Elem>>& sigma,
                             const std::vector<std::vector<Elem>>& tau);

  int size() const { return n_; }
  Elem sigma(Elem a, Elem b) const { return sigma_[static_cast<size_t>(a) * n_ + b]; }
  Elem tau(Elem b, Elem a) const { return tau_[static_cast<size_t>(b) * n_ + a]; }
  std::pair<Elem, Elem> apply(Elem a, Elem b) const {
    return {sigma(a, b), tau(b, a)};
  }

  const std::vector<Elem>& sigma_entries() const { return sigma_; }
  const std::vector<Elem>& tau_entries() const { return tau_; }

  bool operator==(const PairMap&) const = default;

 private:
  int n_;
  std::vector<Elem> sigma_;
  std::vector<Elem> tau_;
};

// Exhaustive braid check over all n^3 triples:
//   (r x id)(id x r)(r x id) = (id x r)(r x id)(id x r).
// On failure, witness is the lexicographically least failing triple.
struct BraidCheck {
  bool holds = false;
  std::array<Elem, 3> witness{};
};
BraidCheck check_braid(const PairMap& r);

// The three component identities whose conjunction is equivalent to the
// braid identity, each scanned independently over all triples.
struct ComponentChecks {
  bool y1 = false;
  bool y2 = false;
  bool y3 = false;
  bool all() const { return y1 && y2 && y3; }
};
ComponentChecks check_y1y2y3(const PairMap& r);

struct SolutionProperties {
  bool bijective = false;           // r injective on the n^2 pair domain
  bool left_nondegenerate = false;  // every sigma_a is a permutation
  bool right_nondegenerate = false; // every tau_b is a permutation
  bool involutive = false;          // r(r(a,b)) = (a,b) everywhere
};
SolutionProperties properties(const PairMap& r);

// The canonical pair (lambda, rho) of a verified weak brace, and the pair
// (lambda_op, rho_op) coming from the opposite addition.
PairMap canonical_solution(const WeakBrace& w);
PairMap opposite_solution(const WeakBrace& w);

// The flip r(a, b) = (b, a).
PairMap twist_map(int n);

// Whether r and s are mutual quasi-inverses that commute:
// r s r = r, s r s = s, r s = s r as maps on pairs.
bool completely_regular_pair(const PairMap& r, const PairMap& s);

// find_equivalence searches for a bijection phi of the common carrier with
// (phi x phi) r = s (phi x phi), i.e. phi(sigma_a(b)) = sigma'_{phi a}(phi b)
// and phi(tau_b(a)) = tau'_{phi b}(phi a) for all a, b.  The search is a
// lexicographic backtrack over images with early pruning, so the returned
// witness is the lexicographically first such bijection.  Orientation-
// reversing notions of equivalence are deliberately not considered.
//
// budget caps the permutation count n!; the default admits n <= 8.  Larger
// carriers raise BudgetError rather than guessing.
inline constexpr std::uint64_t kEquivalenceBudget = 40320;  // 8!

std::optional<std::vector<Elem>> find_equivalence(
    const PairMap& r, const PairMap& s,
    std::uint64_t budget = kEquivalenceBudget);

}  // namespace ybdeform
