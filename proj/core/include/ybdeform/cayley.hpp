#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ybdeform/error.hpp"

namespace ybdeform {

// Carrier elements are always the indices 0..n-1; any semantic labels
// (residues, permutations, pairs) live in a separate label list so that
// equality of structures is plain table equality.
using Elem = int;

// Largest carrier a binary table accepts.  Everything in this library is
// verified by exhaustive scans, so the cap keeps every oracle affordable.
inline constexpr int kMaxCarrier = 64;

// A binary operation on {0,...,n-1} stored as a dense row-major table:
// at(a, b) is the entry in row a, column b.
class CayleyTable {
 public:
  CayleyTable(int n, std::vector<Elem> entries);

  // Builds from a nested row representation, validating shape and range.
  static CayleyTable from_rows(const std::vector<std::vector<Elem>>& rows);

  int size() const { return n_; }
  Elem at(Elem a, Elem b) const { return entries_[static_cast<size_t>(a) * n_ + b]; }
  Elem operator()(Elem a, Elem b) const { return at(a, b); }

  const std::vector<Elem>& entries() const { return entries_; }
  std::vector<std::vector<Elem>> rows() const;

  bool operator==(const CayleyTable&) const = default;

 private:
  int n_;
  std::vector<Elem> entries_;
};

// Everything classify() can say about a finite magma.  All fields are
// computed by exhaustive scans; classify is total and never throws on a
// well-formed table.
//
// inverse_map is present iff the table is associative and every element a
// has a unique quasi-inverse x with a = a*x*a and x = x*a*x.  clifford
// additionally requires a*a' = a'*a for every a; group additionally requires
// a single idempotent.
struct SemigroupProfile {
  bool associative = false;
  std::optional<std::vector<Elem>> inverse_map;
  bool clifford = false;
  bool group = false;
  bool commutative = false;
  std::optional<Elem> monoid_identity;
  std::vector<Elem> idempotents;  // ascending
  std::vector<Elem> center;       // ascending; elements commuting with all
};

SemigroupProfile classify(const CayleyTable& t);

// The unique quasi-inverse of a.  Throws UnsupportedError when the table is
// not an inverse semigroup.  Classifies from scratch; callers that invert in
// a loop should keep the profile's inverse_map instead.
Elem invert(const CayleyTable& t, Elem a);

}  // namespace ybdeform
