#pragma once

#include <string>
#include <vector>

#include "ybdeform/cayley.hpp"
#include "ybdeform/groups.hpp"

namespace ybdeform {

// How much structure a verified (S, +, o) carries, ordered by strength:
//   weak       both operations inverse semigroups, left distributivity
//              a o (b + c) = a o b - a + a o c, and a o a^- = -a + a
//   dual_weak  additionally (S, o) is Clifford ((S, +) always is)
//   skew       both operations are groups
//   brace      additionally + is commutative
enum class BraceLevel { weak, dual_weak, skew, brace };

const char* to_string(BraceLevel level);
BraceLevel brace_level_from_string(const std::string& name);

// A verified two-operation structure (S, +, o) on {0..n-1}.  Construction
// goes through verify(), which checks every axiom exhaustively and records
// the maximal level satisfied, so holding a WeakBrace is proof of the
// axioms.  -a denotes the inverse in (S, +), a^- the inverse in (S, o);
// both idempotent sets coincide and are stored once.
class WeakBrace {
 public:
  // Verifies the axioms and classifies the level.  Throws AxiomError (with
  // the axiom name and a witness tuple) if verification fails or the maximal
  // level falls short of required_level; throws InputError on size mismatch.
  static WeakBrace verify(const CayleyTable& add, const CayleyTable& mul,
                          BraceLevel required_level = BraceLevel::weak);

  int size() const { return add_.size(); }
  BraceLevel level() const { return level_; }

  const CayleyTable& add_table() const { return add_; }
  const CayleyTable& mul_table() const { return mul_; }

  Elem add(Elem a, Elem b) const { return add_.at(a, b); }
  Elem mul(Elem a, Elem b) const { return mul_.at(a, b); }
  Elem neg(Elem a) const { return neg_[a]; }       // inverse in (S, +)
  Elem inv(Elem a) const { return inv_[a]; }       // inverse in (S, o)

  // The common idempotents E(S) = E(S,+) = E(S,o), ascending.
  const std::vector<Elem>& idempotents() const { return idempotents_; }

  // The shared identity of both groups.  Requires level >= skew.
  Elem zero() const;

  // lambda_a(b) = -a + a o b        and its opposite-addition variant
  // rho_b(a)   = lambda_a(b)^- o a o b
  Elem lambda(Elem a, Elem b) const;
  Elem rho(Elem b, Elem a) const;
  Elem lambda_op(Elem a, Elem b) const;  // a o b - a
  Elem rho_op(Elem b, Elem a) const;     // (a o b - a)^- o a o b

  bool operator==(const WeakBrace& other) const {
    return add_ == other.add_ && mul_ == other.mul_;
  }

 private:
  WeakBrace(CayleyTable add, CayleyTable mul);

  CayleyTable add_;
  CayleyTable mul_;
  std::vector<Elem> neg_;
  std::vector<Elem> inv_;
  std::vector<Elem> idempotents_;
  BraceLevel level_ = BraceLevel::weak;
};

// Builders.  Levels are recomputed from scratch by verify(), so e.g. the
// trivial brace over a group comes back as skew (or brace when abelian),
// and over a genuine Clifford semigroup as dual_weak.
//
//   trivial_brace(t)        a + b := a o b on a Clifford table t
//   almost_trivial_brace(t) a + b := b o a on a Clifford table t
//   rump_mod_brace(m)       Z/mZ with a + b mod m and a o b = a + (-1)^a b;
//                           m must be even so that parity is well defined
//   sandwich_units_brace(m) units of Z/mZ with a + b := a - 1 + b (mod m) and
//                           a o b = ab mod m; requires the sandwich sums to
//                           stay units (e.g. any power of two)
//   product_brace(x, y)     componentwise on row-major pairs
WeakBrace trivial_brace(const CayleyTable& t);
WeakBrace almost_trivial_brace(const CayleyTable& t);
WeakBrace rump_mod_brace(int m);
WeakBrace sandwich_units_brace(int m);
WeakBrace product_brace(const WeakBrace& x, const WeakBrace& y);

// Strong semilattice of braces: both operations are assembled over the same
// meet table with the same connecting maps, which therefore have to be brace
// homomorphisms (preserve + and o).  With more than one component the result
// is dual_weak and never skew.
WeakBrace semilattice_of_braces(const CayleyTable& meet,
                                const std::vector<WeakBrace>& braces,
                                const ComponentHoms& homs);

// Whether right distributivity (a + b) o c = a o c - c + b o c also holds
// everywhere.
bool is_two_sided(const WeakBrace& w);

}  // namespace ybdeform
