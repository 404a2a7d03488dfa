#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ybdeform/brace.hpp"
#include "ybdeform/heap.hpp"
#include "ybdeform/solution.hpp"

namespace ybdeform {

// A near-truss: a heap with an associative multiplication that distributes
// over the ternary operation from the left,
//   a * [b, c, d] = [a*b, a*c, a*d].
// If a two-sided multiplicative identity exists it is detected and recorded;
// "unital" below means unit() is engaged.
class NearTruss {
 public:
  static NearTruss verify(Heap heap, CayleyTable mul);

  int size() const { return heap_.size(); }
  const Heap& heap() const { return heap_; }
  const CayleyTable& mul_table() const { return mul_; }
  std::optional<Elem> unit() const { return unit_; }

  Elem tern(Elem a, Elem b, Elem c) const { return heap_.tern(a, b, c); }
  Elem mul(Elem a, Elem b) const { return mul_.at(a, b); }

  bool operator==(const NearTruss& other) const {
    return heap_ == other.heap_ && mul_ == other.mul_;
  }

 private:
  NearTruss(Heap heap, CayleyTable mul, std::optional<Elem> unit)
      : heap_(std::move(heap)), mul_(std::move(mul)), unit_(unit) {}

  Heap heap_;
  CayleyTable mul_;
  std::optional<Elem> unit_;
};

// T(B) of a skew brace: the heap a - b + c with the circle multiplication.
// Unital with unit the brace zero.
NearTruss truss_of_brace(const WeakBrace& b);

// Z/mZ with [a, b, c] = a - b + c and ring multiplication; distributes on
// both sides.
NearTruss truss_of_ring_mod(int m);

// Whether [b, c, d] * a = [b*a, c*a, d*a] also holds everywhere.
bool is_right_distributive(const NearTruss& t);

// The one-parameter family at the heart of the construction:
//   sigma_check(t, z, a, b) = [a*b, a*z, z].
Elem sigma_check(const NearTruss& t, Elem z, Elem a, Elem b);

// A unital near-truss T retracting onto the truss of a brace B:
//   pi: T -> T(B) and gamma: T(B) -> T are unital near-truss homomorphisms
//   with pi o gamma = id.
// Verification checks both homomorphism properties exhaustively, plus that
// the kernel {t : pi(t) = zero of B} is a sub-near-truss.  eta is the lifted
// family
//   eta^z_a(b) = [gp(a) gp(b), gp(a) gp(z), gp(z)],   gp = gamma o pi,
// whose pointwise inverse is taken downstairs on purpose:
//   eta_inverse = gamma((pi eta)^-); T itself need not have inverses.
class Retraction {
 public:
  static Retraction verify(NearTruss t, WeakBrace b, std::vector<Elem> pi,
                           std::vector<Elem> gamma);

  const NearTruss& truss() const { return truss_; }
  const WeakBrace& brace() const { return brace_; }

  Elem pi(Elem t) const { return pi_[t]; }
  Elem gamma(Elem b) const { return gamma_[b]; }
  Elem gp(Elem t) const { return gamma_[pi_[t]]; }  // gamma o pi
  const std::vector<Elem>& pi_map() const { return pi_; }
  const std::vector<Elem>& gamma_map() const { return gamma_; }
  const std::vector<Elem>& kernel() const { return kernel_; }  // ascending
  Elem unit() const { return unit_; }

  Elem eta(Elem z, Elem a, Elem b) const;
  Elem eta_inverse(Elem z, Elem a, Elem b) const;

 private:
  Retraction(NearTruss t, WeakBrace b, std::vector<Elem> pi,
             std::vector<Elem> gamma, std::vector<Elem> kernel, Elem unit)
      : truss_(std::move(t)), brace_(std::move(b)), pi_(std::move(pi)),
        gamma_(std::move(gamma)), kernel_(std::move(kernel)), unit_(unit) {}

  NearTruss truss_;
  WeakBrace brace_;
  std::vector<Elem> pi_;
  std::vector<Elem> gamma_;
  std::vector<Elem> kernel_;
  Elem unit_;
};

// T(B) retracting onto itself with pi = gamma = id.
Retraction identity_retraction(const WeakBrace& b);

// Any unital near-truss retracting onto the one-element brace; every
// parameter yields the constant solution (a, b) |-> (1, a*b).
Retraction trivial_base_retraction(const NearTruss& t);

// The product construction: T(B) x T with componentwise operations,
// pi = first projection, gamma(b) = (b, 1).  Pairs are indexed row-major
// with the T(B) coordinate major.  The brace must be at least dual weak and
// pi(z) lands in its distributor componentwise.
Retraction product_near_truss(const WeakBrace& b, const NearTruss& t);

// A retraction built to break the decomposition: kernel Z/mZ x Z/mZ (ring
// truss), base the trivial brace on Z/2Z acting by coordinate swap on the
// multiplication.  gamma(B) sits inside Fix and the heap swap condition
// holds, but kernel and image fail to commute multiplicatively, so phi below
// is a bijection that is not an isomorphism.
Retraction swap_twisted_retraction(int m);

// The deformed solution upstairs:
//   r^z(a, b) = (eta^z_a(b), eta^z_a(b)^{-1} a b).
// Requires pi(z) in the distributor of the base brace (InputError
// otherwise).  Solutionhood is a theorem, not re-checked here.
PairMap near_truss_solution(const Retraction& r, Elem z);

// The restriction of near_truss_solution to gamma(B) x gamma(B), written on
// the carrier of B (index b stands for gamma(b)).  It coincides with the
// partner solution of B at pi(z) under that relabeling.
PairMap restricted_solution(const Retraction& r, Elem z);

// Fix_T(S) = {t : [1, s, s*t] = t for all s in S}; requires a unital truss.
std::vector<Elem> fix_t(const NearTruss& t, const std::vector<Elem>& s);

// The decomposition map phi(s, b) = [i(s), 1, gamma(b)] on kernel x T(B).
// It is a bijection for every retraction; it is a near-truss isomorphism
// from the componentwise product precisely when the three conditions hold.
// Both sides of that equivalence are computed independently.
struct DecompositionReport {
  bool gamma_in_fix = false;   // gamma(B) inside Fix_T(kernel)
  bool mul_commutes = false;   // i(s) gamma(b) = gamma(b) i(s)
  bool swap_holds = false;     // [i(s), 1, gamma(b)] = [gamma(b), 1, i(s)]
  bool phi_bijective = false;
  bool phi_homomorphism = false;  // ternary and multiplicative, unit follows
  bool conditions() const { return gamma_in_fix && mul_commutes && swap_holds; }
  bool phi_isomorphism() const { return phi_bijective && phi_homomorphism; }
};
DecompositionReport decomposition_check(const Retraction& r);

// One named exhaustive identity check; witness is meaningful when !holds.
struct LemmaCheck {
  std::string name;
  bool holds = false;
  std::vector<Elem> witness;
};

// The sigma_check laws on a near-truss at parameter z: the recovery identity
// a*b = [sigma, z, a*z], fixing of z, unit action, heap distribution, the
// one-parameter semigroup law, per-element agreement of left cancellativity
// with injectivity, and bijectivity at invertible elements.
std::vector<LemmaCheck> lemma_suites(const NearTruss& t, Elem z);

// The lifted laws on a retraction at parameter z: naturality of sigma_check
// under pi and gamma, the eta variants of the laws above (fixing of z
// checked under the premise gp(z) = z), eta * eta_inverse = 1, and the
// three-term braid bookkeeping identity behind the solution theorem.
std::vector<LemmaCheck> lemma_suites(const Retraction& r, Elem z);

// (every eta^z_a row injective, pi bijective) - equal by the
// nondegeneracy criterion; computed by separate scans.  Requires pi(z) in
// the distributor of the base.
std::pair<bool, bool> left_nondegeneracy_criterion(const Retraction& r, Elem z);

}  // namespace ybdeform
