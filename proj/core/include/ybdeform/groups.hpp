#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "ybdeform/cayley.hpp"

namespace ybdeform {

// A table together with human-readable names for its elements.  Labels are a
// sidecar: they never participate in comparisons.
struct BuiltTable {
  CayleyTable table;
  std::vector<std::string> labels;
};

// Group builders.  Each returns a verified group table with a documented,
// deterministic indexing:
//   cyclic_table(n)      residues 0..n-1 under addition mod n
//   symmetric_table(n)   permutations of {0..n-1} in lexicographic one-line
//                        order; product p*q acts as (p*q)(x) = p(q(x)); n <= 4
//   dihedral_table(n)    2n elements: 0..n-1 rotations, n..2n-1 reflections
//   units_mod_table(m)   units of Z/mZ ascending, under multiplication mod m
//   product_table(s, t)  row-major pairs: (a, b) has index a*|t| + b
BuiltTable cyclic_table(int n);
BuiltTable symmetric_table(int n);
BuiltTable dihedral_table(int n);
BuiltTable units_mod_table(int m);
BuiltTable product_table(const BuiltTable& s, const BuiltTable& t);
CayleyTable product_table(const CayleyTable& s, const CayleyTable& t);

// The 3-element commutative inverse monoid {e, x, y}: e is the identity,
// x*x = y*y = x and x*y = y.  The smallest Clifford monoid that is neither a
// group nor a semilattice; a recurring fixture for weak-brace examples.
BuiltTable clifford3_table();

// Maps between component groups of a strong semilattice, keyed by the
// (upper, lower) pair of component indices.  The key (a, b) means a >= b in
// the semilattice order, i.e. meet(a, b) = b.
using ComponentHoms = std::map<std::pair<int, int>, std::vector<Elem>>;

// Strong semilattice of groups.  meet must be a meet-semilattice table
// (associative, commutative, idempotent) on the component indices; one group
// table per component; homs must hold a group homomorphism for every strictly
// comparable pair and compose correctly along chains (identities on the
// diagonal are implicit).  Elements are indexed component by component, in
// meet-table order.  The product of a in G_alpha and b in G_beta maps both
// into G_{meet(alpha,beta)} and multiplies there.  The result is always a
// Clifford semigroup; it is a group only when there is one component.
CayleyTable build_strong_semilattice(const CayleyTable& meet,
                                     const std::vector<CayleyTable>& groups,
                                     const ComponentHoms& homs);

// Offset of each component's first element in the semilattice indexing.
std::vector<int> semilattice_offsets(const std::vector<CayleyTable>& groups);

}  // namespace ybdeform
