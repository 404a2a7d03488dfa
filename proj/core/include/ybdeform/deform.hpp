#pragma once

#include <optional>
#include <vector>

#include "ybdeform/brace.hpp"
#include "ybdeform/solution.hpp"

namespace ybdeform {

// Deformed solutions over a dual weak brace.  For a parameter z the deformed
// pair is
//   sigma^z_a(b) = -(a o z) + a o b o z
//   tau^z_b(a)   = sigma^z_a(b)^- o a o b
// and the partner family is
//   sigma'^z_a(b) = a o b - a o z + z
//   tau'^z_b(a)   = sigma'^z_a(b)^- o a o b.
// The central theorem: r_z is a solution precisely when z lies in the right
// distributor.  Operations below that say "dual weak" throw UnsupportedError
// on a merely weak brace.

// Right distributor: all z with (a + b) o z = a o z - z + b o z for all a, b.
// Ascending order.
std::vector<Elem> right_distributor(const WeakBrace& w);
bool in_right_distributor(const WeakBrace& w, Elem z);

// Three equivalent characterizations of membership, each scanned
// independently:
//   three_term  (a - b + c) o z = a o z - b o z + c o z
//   pairwise    (a + b) o z = a o z - z + b o z
//   inverted    (a + b) o z = a o z + (z^- + b) o z
struct DistributorChecks {
  bool three_term = false;
  bool pairwise = false;
  bool inverted = false;
};
DistributorChecks check_distributor_conditions(const WeakBrace& w, Elem z);

// r_z by the defining formula.  Total: never rejects z outside the
// distributor (the braid scan is the arbiter of solutionhood).
PairMap deformed_solution(const WeakBrace& w, Elem z);

// r_z by the conjugation rewriting
//   a |-> z^- o lambda_{z o a}(b) o z,  z^- o rho_b(z o a);
// agrees with deformed_solution exactly on distributor elements.
PairMap deformed_solution_via_lambda(const WeakBrace& w, Elem z);

// The partner solution for parameter z^-: the map
//   (a, b) |-> (a o b - a o z^- + z^-, ... )
// that is completely regular with r_z.  Requires z in the distributor;
// throws InputError naming a witness pair otherwise.
PairMap deformed_check_solution(const WeakBrace& w, Elem z);

// As above but for an arbitrary parameter, with no membership gate: the raw
// family r'_w used by reports.
PairMap deformed_partner_raw(const WeakBrace& w, Elem par);

// sigma^z as one map per element: multiplicative iff a o z = z + a for all
// a.  The two flags are computed by separate scans; for dual weak braces
// they always agree.
struct SigmaHomCriterion {
  bool multiplicative = false;
  bool commutation = false;
};
SigmaHomCriterion sigma_hom_criterion(const WeakBrace& w, Elem z);

// Distinguished subsets (ascending).  fix_set/socle/annihilator require a
// skew brace; center_circ is defined for every weak brace.
std::vector<Elem> fix_set(const WeakBrace& w);      // a with lambda_x(a) = a for all x
std::vector<Elem> socle(const WeakBrace& w);        // a+b = a o b and a+b = b+a for all b
std::vector<Elem> annihilator(const WeakBrace& w);  // socle intersect center_circ
std::vector<Elem> center_circ(const WeakBrace& w);  // center of (S, o)

// Ideal tests on a skew brace, via two independent definitions that must
// agree on every subset:
//   is_ideal          normal subgroup of (S,+), normal subgroup of (S,o),
//                     lambda-invariant
//   ideal_via_cosets  normal subgroup of (S,+) with a o I = a + I and
//                     I o a = a + I for every a
bool is_ideal(const WeakBrace& w, const std::vector<Elem>& subset);
bool ideal_via_cosets(const WeakBrace& w, const std::vector<Elem>& subset);

// Closure facts about the right distributor.  The unconditional claims
// (closed under o and inverses, contains idempotents and the circle center)
// are verified and reported; the additive claims apply when + is commutative,
// in which case the restriction is re-verified as a two-sided dual weak
// subbrace.
struct DistributorStructure {
  std::vector<Elem> distributor;
  bool closed_mul = false;
  bool closed_inv = false;
  bool contains_idempotents = false;
  bool contains_center = false;
  bool add_commutative = false;
  // Meaningful when add_commutative:
  bool closed_add = false;
  bool closed_neg = false;
  bool subbrace_dual_weak = false;
  bool subbrace_two_sided = false;
};
DistributorStructure distributor_structure(const WeakBrace& w);

// Searches (ascending) for c with w = c^- o z o c such that conjugation by c
// is a bijection intertwining r_z with r_w, and returns that bijection.
// Requires a two-sided structure of level >= dual_weak.  On a skew brace the
// intertwining is a theorem, so a conjugating c that fails it raises
// AxiomError; on dual weak carriers candidates failing bijectivity or
// intertwining are skipped.  Conjugacy is sufficient, never claimed
// necessary.
std::optional<std::vector<Elem>> conjugacy_equivalence(const WeakBrace& w,
                                                       Elem z, Elem par);

// Everything about every parameter at once.
struct ZReport {
  Elem z = 0;
  bool in_distributor = false;
  bool is_solution = false;        // braid scan of r_z
  bool completely_regular = false; // with the raw partner at z^-
};
struct DeformationReport {
  std::vector<Elem> distributor;
  std::vector<ZReport> per_z;
  bool theorem_holds = false;  // in_distributor == is_solution for every z
};
DeformationReport deformation_report(const WeakBrace& w);

}  // namespace ybdeform
