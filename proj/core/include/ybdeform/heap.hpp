#pragma once

#include <vector>

#include "ybdeform/cayley.hpp"

namespace ybdeform {

// Heaps get a tighter cap than binary tables: verification scans n^5 triples
// of the dense n^3 ternary table.
inline constexpr int kMaxHeapCarrier = 32;

// A verified heap: a ternary operation [a, b, c] on {0..n-1} satisfying
//   [a, b, [c, d, e]] = [[a, b, c], d, e]   (para-associativity)
//   [a, a, b] = b = [b, a, a]               (Mal'cev identities)
// The equivalent middle-silent form [a, b, [c, d, e]] = [a, [d, c, b], e] is
// checked as well.  Storage is dense row-major: index (a*n + b)*n + c.
class Heap {
 public:
  static Heap verify(int n, std::vector<Elem> tern);
  static Heap from_tables(const std::vector<std::vector<std::vector<Elem>>>& tern);

  int size() const { return n_; }
  Elem tern(Elem a, Elem b, Elem c) const {
    return tern_[(static_cast<size_t>(a) * n_ + b) * n_ + c];
  }
  const std::vector<Elem>& entries() const { return tern_; }

  bool operator==(const Heap&) const = default;

 private:
  Heap(int n, std::vector<Elem> tern) : n_(n), tern_(std::move(tern)) {}

  int n_;
  std::vector<Elem> tern_;
};

// [a, b, c] = a * b^{-1} * c over a group table.
Heap heap_of_group(const CayleyTable& group);

// The retract group at e: a * b := [a, e, b], which is a group with
// identity e.  Retracting heap_of_group(G) at the identity returns G, and
// heap_of_group(retract(h, e)) returns h for every e.
CayleyTable retract(const Heap& h, Elem e);

}  // namespace ybdeform
