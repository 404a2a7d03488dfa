#include "ybdeform/deform.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace ybdeform {

namespace {

void require_dual_weak(const WeakBrace& w, const char* op) {
  if (w.level() < BraceLevel::dual_weak) {
    throw UnsupportedError(std::string(op) +
                           " requires a dual weak brace or better");
  }
}

void require_skew(const WeakBrace& w, const char* op) {
  if (w.level() < BraceLevel::skew) {
    throw UnsupportedError(std::string(op) + " requires a skew brace");
  }
}

bool is_sorted_member(const std::vector<Elem>& xs, Elem x) {
  return std::binary_search(xs.begin(), xs.end(), x);
}

}  // namespace

bool in_right_distributor(const WeakBrace& w, Elem z) {
  const int n = w.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem lhs = w.mul(w.add(a, b), z);
      const Elem rhs = w.add(w.add(w.mul(a, z), w.neg(z)), w.mul(b, z));
      if (lhs != rhs) return false;
    }
  return true;
}

std::vector<Elem> right_distributor(const WeakBrace& w) {
  require_dual_weak(w, "right distributor");
  std::vector<Elem> out;
  for (Elem z = 0; z < w.size(); ++z)
    if (in_right_distributor(w, z)) out.push_back(z);
  return out;
}

DistributorChecks check_distributor_conditions(const WeakBrace& w, Elem z) {
  require_dual_weak(w, "distributor conditions");
  const int n = w.size();
  DistributorChecks out{true, true, true};

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = w.mul(w.add(w.add(a, w.neg(b)), c), z);
        const Elem rhs =
            w.add(w.add(w.mul(a, z), w.neg(w.mul(b, z))), w.mul(c, z));
        if (lhs != rhs) out.three_term = false;
      }
      const Elem lhs = w.mul(w.add(a, b), z);
      if (lhs != w.add(w.add(w.mul(a, z), w.neg(z)), w.mul(b, z)))
        out.pairwise = false;
      if (lhs != w.add(w.mul(a, z), w.mul(w.add(w.inv(z), b), z)))
        out.inverted = false;
    }
  return out;
}

PairMap deformed_solution(const WeakBrace& w, Elem z) {
  require_dual_weak(w, "deformation");
  if (z < 0 || z >= w.size()) throw InputError("parameter out of range");
  const int n = w.size();
  std::vector<Elem> sigma(static_cast<size_t>(n) * n);
  std::vector<Elem> tau(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem s = w.add(w.neg(w.mul(a, z)), w.mul(w.mul(a, b), z));
      sigma[static_cast<size_t>(a) * n + b] = s;
      tau[static_cast<size_t>(b) * n + a] = w.mul(w.inv(s), w.mul(a, b));
    }
  return PairMap(n, std::move(sigma), std::move(tau));
}

PairMap deformed_solution_via_lambda(const WeakBrace& w, Elem z) {
  require_dual_weak(w, "deformation");
  if (z < 0 || z >= w.size()) throw InputError("parameter out of range");
  const int n = w.size();
  std::vector<Elem> sigma(static_cast<size_t>(n) * n);
  std::vector<Elem> tau(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      sigma[static_cast<size_t>(a) * n + b] =
          w.mul(w.mul(w.inv(z), w.lambda(w.mul(z, a), b)), z);
      tau[static_cast<size_t>(b) * n + a] =
          w.mul(w.inv(z), w.rho(b, w.mul(z, a)));
    }
  return PairMap(n, std::move(sigma), std::move(tau));
}

PairMap deformed_partner_raw(const WeakBrace& w, Elem par) {
  require_dual_weak(w, "deformation");
  if (par < 0 || par >= w.size()) throw InputError("parameter out of range");
  const int n = w.size();
  std::vector<Elem> sigma(static_cast<size_t>(n) * n);
  std::vector<Elem> tau(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem s =
          w.add(w.add(w.mul(a, b), w.neg(w.mul(a, par))), par);
      sigma[static_cast<size_t>(a) * n + b] = s;
      tau[static_cast<size_t>(b) * n + a] = w.mul(w.inv(s), w.mul(a, b));
    }
  return PairMap(n, std::move(sigma), std::move(tau));
}

PairMap deformed_check_solution(const WeakBrace& w, Elem z) {
  require_dual_weak(w, "deformation");
  if (z < 0 || z >= w.size()) throw InputError("parameter out of range");
  const int n = w.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const Elem lhs = w.mul(w.add(a, b), z);
      const Elem rhs = w.add(w.add(w.mul(a, z), w.neg(z)), w.mul(b, z));
      if (lhs != rhs) {
        std::ostringstream out;
        out << "parameter " << z << " is outside the right distributor: "
            << "pair (" << a << ", " << b << ") breaks right distributivity";
        throw InputError(out.str());
      }
    }
  return deformed_partner_raw(w, w.inv(z));
}

SigmaHomCriterion sigma_hom_criterion(const WeakBrace& w, Elem z) {
  require_dual_weak(w, "sigma homomorphism criterion");
  if (z < 0 || z >= w.size()) throw InputError("parameter out of range");
  const int n = w.size();
  SigmaHomCriterion out{true, true};

  const auto sigma_z = [&](Elem a, Elem b) {
    return w.add(w.neg(w.mul(a, z)), w.mul(w.mul(a, b), z));
  };
  for (Elem a = 0; a < n && out.multiplicative; ++a)
    for (Elem b = 0; b < n && out.multiplicative; ++b)
      for (Elem c = 0; c < n; ++c)
        if (sigma_z(w.mul(a, b), c) != sigma_z(a, sigma_z(b, c))) {
          out.multiplicative = false;
          break;
        }
  for (Elem a = 0; a < n; ++a)
    if (w.mul(a, z) != w.add(z, a)) {
      out.commutation = false;
      break;
    }
  return out;
}

std::vector<Elem> fix_set(const WeakBrace& w) {
  require_skew(w, "fix set");
  std::vector<Elem> out;
  for (Elem a = 0; a < w.size(); ++a) {
    bool fixed = true;
    for (Elem x = 0; x < w.size(); ++x)
      if (w.lambda(x, a) != a) {
        fixed = false;
        break;
      }
    if (fixed) out.push_back(a);
  }
  return out;
}

std::vector<Elem> socle(const WeakBrace& w) {
  require_skew(w, "socle");
  std::vector<Elem> out;
  for (Elem a = 0; a < w.size(); ++a) {
    bool in = true;
    for (Elem b = 0; b < w.size(); ++b) {
      const Elem s = w.add(a, b);
      if (s != w.mul(a, b) || s != w.add(b, a)) {
        in = false;
        break;
      }
    }
    if (in) out.push_back(a);
  }
  return out;
}

std::vector<Elem> center_circ(const WeakBrace& w) {
  std::vector<Elem> out;
  for (Elem a = 0; a < w.size(); ++a) {
    bool central = true;
    for (Elem b = 0; b < w.size(); ++b)
      if (w.mul(a, b) != w.mul(b, a)) {
        central = false;
        break;
      }
    if (central) out.push_back(a);
  }
  return out;
}

std::vector<Elem> annihilator(const WeakBrace& w) {
  const std::vector<Elem> soc = socle(w);
  const std::vector<Elem> cen = center_circ(w);
  std::vector<Elem> out;
  std::set_intersection(soc.begin(), soc.end(), cen.begin(), cen.end(),
                        std::back_inserter(out));
  return out;
}

namespace {

// Subgroup-and-normality scans shared by the two ideal definitions.
bool normal_subgroup(const CayleyTable& t, const std::vector<Elem>& inverse,
                     Elem identity, const std::vector<Elem>& subset) {
  if (!is_sorted_member(subset, identity)) return false;
  for (Elem i : subset) {
    if (!is_sorted_member(subset, inverse[i])) return false;
    for (Elem j : subset)
      if (!is_sorted_member(subset, t.at(i, j))) return false;
  }
  for (Elem a = 0; a < t.size(); ++a)
    for (Elem i : subset)
      if (!is_sorted_member(subset, t.at(t.at(a, i), inverse[a])))
        return false;
  return true;
}

std::vector<Elem> sorted_copy(std::vector<Elem> xs) {
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  return xs;
}

std::vector<Elem> inverse_table(const WeakBrace& w, bool additive) {
  std::vector<Elem> out(w.size());
  for (Elem a = 0; a < w.size(); ++a)
    out[a] = additive ? w.neg(a) : w.inv(a);
  return out;
}

}  // namespace

bool is_ideal(const WeakBrace& w, const std::vector<Elem>& subset) {
  require_skew(w, "ideal test");
  const std::vector<Elem> ideal = sorted_copy(subset);
  for (Elem i : ideal)
    if (i < 0 || i >= w.size()) throw InputError("subset element out of range");

  if (!normal_subgroup(w.add_table(), inverse_table(w, true), w.zero(), ideal))
    return false;
  if (!normal_subgroup(w.mul_table(), inverse_table(w, false), w.zero(), ideal))
    return false;
  for (Elem a = 0; a < w.size(); ++a)
    for (Elem i : ideal)
      if (!is_sorted_member(ideal, w.lambda(a, i))) return false;
  return true;
}

bool ideal_via_cosets(const WeakBrace& w, const std::vector<Elem>& subset) {
  require_skew(w, "ideal test");
  const std::vector<Elem> ideal = sorted_copy(subset);
  for (Elem i : ideal)
    if (i < 0 || i >= w.size()) throw InputError("subset element out of range");

  if (!normal_subgroup(w.add_table(), inverse_table(w, true), w.zero(), ideal))
    return false;
  // a o I = a + I and I o a = a + I as sets, for every a.
  for (Elem a = 0; a < w.size(); ++a) {
    std::vector<Elem> translated, left_mul, right_mul;
    for (Elem i : ideal) {
      translated.push_back(w.add(a, i));
      left_mul.push_back(w.mul(a, i));
      right_mul.push_back(w.mul(i, a));
    }
    std::sort(translated.begin(), translated.end());
    std::sort(left_mul.begin(), left_mul.end());
    std::sort(right_mul.begin(), right_mul.end());
    if (left_mul != translated || right_mul != translated) return false;
  }
  return true;
}

DistributorStructure distributor_structure(const WeakBrace& w) {
  DistributorStructure out;
  out.distributor = right_distributor(w);
  const std::vector<Elem>& d = out.distributor;

  out.closed_mul = true;
  out.closed_inv = true;
  for (Elem z : d) {
    if (!is_sorted_member(d, w.inv(z))) out.closed_inv = false;
    for (Elem y : d)
      if (!is_sorted_member(d, w.mul(z, y))) out.closed_mul = false;
  }

  out.contains_idempotents = std::includes(
      d.begin(), d.end(), w.idempotents().begin(), w.idempotents().end());
  const std::vector<Elem> cen = center_circ(w);
  out.contains_center = std::includes(d.begin(), d.end(), cen.begin(), cen.end());

  const SemigroupProfile ap = classify(w.add_table());
  out.add_commutative = ap.commutative;
  if (out.add_commutative) {
    out.closed_add = true;
    out.closed_neg = true;
    for (Elem z : d) {
      if (!is_sorted_member(d, w.neg(z))) out.closed_neg = false;
      for (Elem y : d)
        if (!is_sorted_member(d, w.add(z, y))) out.closed_add = false;
    }
    if (out.closed_add && out.closed_neg && out.closed_mul && out.closed_inv &&
        !d.empty()) {
      // Reindex the restriction and verify it stands on its own.
      std::map<Elem, Elem> index;
      for (size_t i = 0; i < d.size(); ++i) index[d[i]] = static_cast<Elem>(i);
      const int k = static_cast<int>(d.size());
      std::vector<Elem> add(static_cast<size_t>(k) * k), mul(add.size());
      for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
          add[static_cast<size_t>(i) * k + j] = index.at(w.add(d[i], d[j]));
          mul[static_cast<size_t>(i) * k + j] = index.at(w.mul(d[i], d[j]));
        }
      try {
        const WeakBrace sub = WeakBrace::verify(
            CayleyTable(k, std::move(add)), CayleyTable(k, std::move(mul)),
            BraceLevel::dual_weak);
        out.subbrace_dual_weak = true;
        out.subbrace_two_sided = is_two_sided(sub);
      } catch (const AxiomError&) {
        out.subbrace_dual_weak = false;
      }
    }
  }
  return out;
}

std::optional<std::vector<Elem>> conjugacy_equivalence(const WeakBrace& w,
                                                       Elem z, Elem par) {
  require_dual_weak(w, "conjugacy equivalence");
  if (z < 0 || z >= w.size() || par < 0 || par >= w.size())
    throw InputError("parameter out of range");
  if (!is_two_sided(w))
    throw UnsupportedError("conjugacy equivalence requires a two-sided structure");

  const int n = w.size();
  const PairMap rz = deformed_solution(w, z);
  const PairMap rw = deformed_solution(w, par);

  for (Elem c = 0; c < n; ++c) {
    if (w.mul(w.mul(w.inv(c), z), c) != par) continue;

    std::vector<Elem> phi(n);
    for (Elem a = 0; a < n; ++a) phi[a] = w.mul(w.mul(w.inv(c), a), c);

    std::vector<char> seen(n, 0);
    bool bijective = true;
    for (Elem a = 0; a < n; ++a) {
      if (seen[phi[a]]) bijective = false;
      seen[phi[a]] = 1;
    }
    if (!bijective) continue;  // possible below skew level only

    bool intertwines = true;
    for (Elem a = 0; a < n && intertwines; ++a)
      for (Elem b = 0; b < n; ++b) {
        if (phi[rz.sigma(a, b)] != rw.sigma(phi[a], phi[b]) ||
            phi[rz.tau(b, a)] != rw.tau(phi[b], phi[a])) {
          intertwines = false;
          break;
        }
      }
    if (intertwines) return phi;
    if (w.level() >= BraceLevel::skew) {
      // On a two-sided skew brace conjugation always intertwines; reaching
      // this line would disprove the theorem.
      throw AxiomError("conjugacy-intertwining", {z, par, c});
    }
  }
  return std::nullopt;
}

DeformationReport deformation_report(const WeakBrace& w) {
  DeformationReport out;
  out.distributor = right_distributor(w);
  out.theorem_holds = true;
  for (Elem z = 0; z < w.size(); ++z) {
    ZReport zr;
    zr.z = z;
    zr.in_distributor = is_sorted_member(out.distributor, z);
    const PairMap rz = deformed_solution(w, z);
    zr.is_solution = check_braid(rz).holds;
    zr.completely_regular =
        completely_regular_pair(rz, deformed_partner_raw(w, w.inv(z)));
    if (zr.in_distributor != zr.is_solution) out.theorem_holds = false;
    out.per_z.push_back(zr);
  }
  return out;
}

}  // namespace ybdeform
