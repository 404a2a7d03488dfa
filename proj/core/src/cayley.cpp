#include "ybdeform/cayley.hpp"

#include <sstream>

namespace ybdeform {

namespace {

void check_carrier(int n, int cap) {
  if (n <= 0) throw InputError("carrier size must be positive");
  if (n > cap) {
    std::ostringstream out;
    out << "carrier size " << n << " exceeds the supported cap " << cap;
    throw InputError(out.str());
  }
}

}  // namespace

CayleyTable::CayleyTable(int n, std::vector<Elem> entries)
    : n_(n), entries_(std::move(entries)) {
  check_carrier(n_, kMaxCarrier);
  if (entries_.size() != static_cast<size_t>(n_) * n_) {
    std::ostringstream out;
    out << "table for carrier " << n_ << " needs " << n_ * n_
        << " entries, got " << entries_.size();
    throw InputError(out.str());
  }
  for (size_t i = 0; i < entries_.size(); ++i) {
    if (entries_[i] < 0 || entries_[i] >= n_) {
      std::ostringstream out;
      out << "entry " << entries_[i] << " at row " << i / n_ << ", column "
          << i % n_ << " is outside 0.." << n_ - 1;
      throw InputError(out.str());
    }
  }
}

CayleyTable CayleyTable::from_rows(const std::vector<std::vector<Elem>>& rows) {
  const int n = static_cast<int>(rows.size());
  check_carrier(n, kMaxCarrier);
  std::vector<Elem> flat;
  flat.reserve(static_cast<size_t>(n) * n);
  for (size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != rows.size()) {
      std::ostringstream out;
      out << "row " << i << " has " << rows[i].size() << " entries, expected "
          << n;
      throw InputError(out.str());
    }
    flat.insert(flat.end(), rows[i].begin(), rows[i].end());
  }
  return CayleyTable(n, std::move(flat));
}

std::vector<std::vector<Elem>> CayleyTable::rows() const {
  std::vector<std::vector<Elem>> out(n_);
  for (int a = 0; a < n_; ++a) {
    out[a].assign(entries_.begin() + static_cast<size_t>(a) * n_,
                  entries_.begin() + static_cast<size_t>(a + 1) * n_);
  }
  return out;
}

SemigroupProfile classify(const CayleyTable& t) {
  const int n = t.size();
  SemigroupProfile p;

  p.associative = true;
  for (Elem a = 0; a < n && p.associative; ++a)
    for (Elem b = 0; b < n && p.associative; ++b)
      for (Elem c = 0; c < n; ++c)
        if (t.at(t.at(a, b), c) != t.at(a, t.at(b, c))) {
          p.associative = false;
          break;
        }

  p.commutative = true;
  for (Elem a = 0; a < n && p.commutative; ++a)
    for (Elem b = 0; b < n; ++b)
      if (t.at(a, b) != t.at(b, a)) {
        p.commutative = false;
        break;
      }

  for (Elem a = 0; a < n; ++a)
    if (t.at(a, a) == a) p.idempotents.push_back(a);

  for (Elem z = 0; z < n; ++z) {
    bool central = true;
    for (Elem a = 0; a < n; ++a)
      if (t.at(z, a) != t.at(a, z)) {
        central = false;
        break;
      }
    if (central) p.center.push_back(z);
  }

  for (Elem e = 0; e < n; ++e) {
    bool identity = true;
    for (Elem a = 0; a < n; ++a)
      if (t.at(e, a) != a || t.at(a, e) != a) {
        identity = false;
        break;
      }
    if (identity) {
      p.monoid_identity = e;
      break;  // two-sided identities are unique
    }
  }

  // Quasi-inverses only make sense in a semigroup.
  if (p.associative) {
    std::vector<Elem> inverse(n);
    bool unique_everywhere = true;
    for (Elem a = 0; a < n && unique_everywhere; ++a) {
      int found = 0;
      for (Elem x = 0; x < n; ++x) {
        if (t.at(t.at(a, x), a) == a && t.at(t.at(x, a), x) == x) {
          inverse[a] = x;
          ++found;
        }
      }
      if (found != 1) unique_everywhere = false;
    }
    if (unique_everywhere) {
      p.inverse_map = std::move(inverse);
      p.clifford = true;
      for (Elem a = 0; a < n; ++a) {
        const Elem x = (*p.inverse_map)[a];
        if (t.at(a, x) != t.at(x, a)) {
          p.clifford = false;
          break;
        }
      }
      p.group = p.clifford && p.idempotents.size() == 1;
    }
  }

  return p;
}

Elem invert(const CayleyTable& t, Elem a) {
  if (a < 0 || a >= t.size()) throw InputError("element out of range");
  const SemigroupProfile p = classify(t);
  if (!p.inverse_map) {
    throw UnsupportedError(
        "table is not an inverse semigroup: no unique quasi-inverses");
  }
  return (*p.inverse_map)[a];
}

}  // namespace ybdeform
