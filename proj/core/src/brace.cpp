#include "ybdeform/brace.hpp"

#include <algorithm>
#include <sstream>

namespace ybdeform {

const char* to_string(BraceLevel level) {
  switch (level) {
    case BraceLevel::weak: return "weak";
    case BraceLevel::dual_weak: return "dual_weak";
    case BraceLevel::skew: return "skew";
    case BraceLevel::brace: return "brace";
  }
  return "weak";
}

BraceLevel brace_level_from_string(const std::string& name) {
  if (name == "weak") return BraceLevel::weak;
  if (name == "dual_weak") return BraceLevel::dual_weak;
  if (name == "skew") return BraceLevel::skew;
  if (name == "brace") return BraceLevel::brace;
  throw InputError("unknown level '" + name +
                   "' (expected weak, dual_weak, skew or brace)");
}

WeakBrace::WeakBrace(CayleyTable add, CayleyTable mul)
    : add_(std::move(add)), mul_(std::move(mul)) {}

WeakBrace WeakBrace::verify(const CayleyTable& add, const CayleyTable& mul,
                            BraceLevel required_level) {
  if (add.size() != mul.size())
    throw InputError("addition and multiplication tables differ in size");
  const int n = add.size();

  const SemigroupProfile ap = classify(add);
  if (!ap.associative) throw AxiomError("add-associativity", {});
  if (!ap.inverse_map) throw AxiomError("add-inverse-semigroup", {});
  const SemigroupProfile mp = classify(mul);
  if (!mp.associative) throw AxiomError("mul-associativity", {});
  if (!mp.inverse_map) throw AxiomError("mul-inverse-semigroup", {});

  const std::vector<Elem>& neg = *ap.inverse_map;
  const std::vector<Elem>& inv = *mp.inverse_map;

  // a o (b + c) = a o b - a + a o c
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = mul.at(a, add.at(b, c));
        const Elem rhs = add.at(add.at(mul.at(a, b), neg[a]), mul.at(a, c));
        if (lhs != rhs) throw AxiomError("left-distributivity", {a, b, c});
      }

  // a o a^- = -a + a
  for (Elem a = 0; a < n; ++a)
    if (mul.at(a, inv[a]) != add.at(neg[a], a))
      throw AxiomError("inverse-compatibility", {a});

  // Consequences of the axioms, re-checked rather than trusted: (S, +) is
  // Clifford, both idempotent sets coincide, and idempotents act alike
  // through either operation.
  if (!ap.clifford) throw AxiomError("add-clifford", {});
  if (ap.idempotents != mp.idempotents) {
    Elem witness = 0;
    for (Elem a = 0; a < n; ++a) {
      const bool in_add = std::binary_search(ap.idempotents.begin(),
                                             ap.idempotents.end(), a);
      const bool in_mul = std::binary_search(mp.idempotents.begin(),
                                             mp.idempotents.end(), a);
      if (in_add != in_mul) {
        witness = a;
        break;
      }
    }
    throw AxiomError("idempotent-coincidence", {witness});
  }
  for (Elem e : ap.idempotents)
    for (Elem a = 0; a < n; ++a)
      if (add.at(e, a) != mul.at(e, a))
        throw AxiomError("idempotent-action", {e, a});

  WeakBrace w(add, mul);
  w.neg_ = neg;
  w.inv_ = inv;
  w.idempotents_ = ap.idempotents;

  w.level_ = BraceLevel::weak;
  if (mp.clifford) w.level_ = BraceLevel::dual_weak;
  if (ap.group && mp.group) w.level_ = BraceLevel::skew;
  if (w.level_ == BraceLevel::skew && ap.commutative)
    w.level_ = BraceLevel::brace;

  if (w.level_ < required_level) {
    std::ostringstream out;
    out << "structure verifies at level " << to_string(w.level_)
        << ", below required " << to_string(required_level);
    throw AxiomError(out.str(), {});
  }
  return w;
}

Elem WeakBrace::zero() const {
  if (level_ < BraceLevel::skew)
    throw UnsupportedError("shared identity requires a skew brace");
  return idempotents_.front();
}

Elem WeakBrace::lambda(Elem a, Elem b) const {
  return add(neg_[a], mul(a, b));
}

Elem WeakBrace::rho(Elem b, Elem a) const {
  return mul(inv_[lambda(a, b)], mul(a, b));
}

Elem WeakBrace::lambda_op(Elem a, Elem b) const {
  return add(mul(a, b), neg_[a]);
}

Elem WeakBrace::rho_op(Elem b, Elem a) const {
  return mul(inv_[lambda_op(a, b)], mul(a, b));
}

WeakBrace trivial_brace(const CayleyTable& t) {
  return WeakBrace::verify(t, t, BraceLevel::dual_weak);
}

WeakBrace almost_trivial_brace(const CayleyTable& t) {
  const int n = t.size();
  std::vector<Elem> flipped(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      flipped[static_cast<size_t>(a) * n + b] = t.at(b, a);
  return WeakBrace::verify(CayleyTable(n, std::move(flipped)), t,
                           BraceLevel::dual_weak);
}

WeakBrace rump_mod_brace(int m) {
  if (m < 2 || m % 2 != 0)
    throw InputError("parity-twisted brace needs an even modulus >= 2");
  const CayleyTable add = cyclic_table(m).table;
  std::vector<Elem> mul(static_cast<size_t>(m) * m);
  for (Elem a = 0; a < m; ++a)
    for (Elem b = 0; b < m; ++b) {
      const int signed_b = (a % 2 == 0) ? b : -b;
      mul[static_cast<size_t>(a) * m + b] = ((a + signed_b) % m + m) % m;
    }
  return WeakBrace::verify(add, CayleyTable(m, std::move(mul)),
                           BraceLevel::brace);
}

WeakBrace sandwich_units_brace(int m) {
  const BuiltTable units = units_mod_table(m);
  const int n = units.table.size();
  std::vector<int> value(n);
  std::vector<int> index(m, -1);
  for (Elem i = 0; i < n; ++i) {
    value[i] = std::stoi(units.labels[i]);
    index[value[i]] = i;
  }
  std::vector<Elem> add(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      const int sum = ((value[a] - 1 + value[b]) % m + m) % m;
      if (index[sum] < 0) {
        std::ostringstream out;
        out << "sandwich sum " << value[a] << " - 1 + " << value[b]
            << " leaves the units of Z/" << m << "Z";
        throw InputError(out.str());
      }
      add[static_cast<size_t>(a) * n + b] = index[sum];
    }
  return WeakBrace::verify(CayleyTable(n, std::move(add)), units.table,
                           BraceLevel::brace);
}

WeakBrace product_brace(const WeakBrace& x, const WeakBrace& y) {
  return WeakBrace::verify(product_table(x.add_table(), y.add_table()),
                           product_table(x.mul_table(), y.mul_table()));
}

WeakBrace semilattice_of_braces(const CayleyTable& meet,
                                const std::vector<WeakBrace>& braces,
                                const ComponentHoms& homs) {
  std::vector<CayleyTable> adds, muls;
  for (const WeakBrace& b : braces) {
    if (b.level() < BraceLevel::brace)
      throw InputError("semilattice components must be braces");
    adds.push_back(b.add_table());
    muls.push_back(b.mul_table());
  }
  // The connecting maps serve both operations at once, so they must be brace
  // homomorphisms.  build_strong_semilattice re-checks each operation
  // separately; a map preserving only one of them fails the other build.
  const CayleyTable add = build_strong_semilattice(meet, adds, homs);
  const CayleyTable mul = build_strong_semilattice(meet, muls, homs);
  return WeakBrace::verify(add, mul, BraceLevel::dual_weak);
}

bool is_two_sided(const WeakBrace& w) {
  const int n = w.size();
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c) {
        const Elem lhs = w.mul(w.add(a, b), c);
        const Elem rhs = w.add(w.add(w.mul(a, c), w.neg(c)), w.mul(b, c));
        if (lhs != rhs) return false;
      }
  return true;
}

}  // namespace ybdeform
