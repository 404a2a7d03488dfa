#include "ybdeform/heap.hpp"

#include <sstream>

#include "ybdeform/error.hpp"

namespace ybdeform {

Heap Heap::verify(int n, std::vector<Elem> tern) {
  if (n <= 0 || n > kMaxHeapCarrier) {
    std::ostringstream out;
    out << "heap carrier size " << n << " outside supported range 1.."
        << kMaxHeapCarrier;
    throw InputError(out.str());
  }
  const size_t expected = static_cast<size_t>(n) * n * n;
  if (tern.size() != expected) {
    std::ostringstream out;
    out << "ternary table has " << tern.size() << " entries, expected "
        << expected;
    throw InputError(out.str());
  }
  for (size_t i = 0; i < tern.size(); ++i)
    if (tern[i] < 0 || tern[i] >= n) {
      std::ostringstream out;
      out << "ternary table entry " << tern[i] << " at flat index " << i
          << " outside 0.." << (n - 1);
      throw InputError(out.str());
    }

  const auto t = [&](Elem a, Elem b, Elem c) {
    return tern[(static_cast<size_t>(a) * n + b) * n + c];
  };

  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b) {
      if (t(a, a, b) != b) throw AxiomError("malcev-left", {a, a, b});
      if (t(b, a, a) != b) throw AxiomError("malcev-right", {b, a, a});
    }
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        for (Elem d = 0; d < n; ++d)
          for (Elem e = 0; e < n; ++e) {
            const Elem inner = t(a, b, t(c, d, e));
            if (inner != t(t(a, b, c), d, e))
              throw AxiomError("para-associativity", {a, b, c});
            if (inner != t(a, t(d, c, b), e))
              throw AxiomError("middle-swap", {a, b, c});
          }
  return Heap(n, std::move(tern));
}

Heap Heap::from_tables(
    const std::vector<std::vector<std::vector<Elem>>>& tern) {
  const int n = static_cast<int>(tern.size());
  std::vector<Elem> flat;
  flat.reserve(static_cast<size_t>(n) * n * n);
  for (const auto& plane : tern) {
    if (static_cast<int>(plane.size()) != n)
      throw InputError("ternary table is not cubic");
    for (const auto& row : plane) {
      if (static_cast<int>(row.size()) != n)
        throw InputError("ternary table is not cubic");
      flat.insert(flat.end(), row.begin(), row.end());
    }
  }
  return verify(n, std::move(flat));
}

Heap heap_of_group(const CayleyTable& group) {
  const SemigroupProfile p = classify(group);
  if (!p.group) throw UnsupportedError("heap construction requires a group table");
  const int n = group.size();
  if (n > kMaxHeapCarrier) {
    std::ostringstream out;
    out << "heap carrier size " << n << " outside supported range 1.."
        << kMaxHeapCarrier;
    throw InputError(out.str());
  }
  const std::vector<Elem>& inv = *p.inverse_map;
  std::vector<Elem> tern(static_cast<size_t>(n) * n * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      for (Elem c = 0; c < n; ++c)
        tern[(static_cast<size_t>(a) * n + b) * n + c] =
            group.at(group.at(a, inv[b]), c);
  return Heap::verify(n, std::move(tern));
}

CayleyTable retract(const Heap& h, Elem e) {
  const int n = h.size();
  if (e < 0 || e >= n) throw InputError("retract base point out of range");
  std::vector<Elem> entries(static_cast<size_t>(n) * n);
  for (Elem a = 0; a < n; ++a)
    for (Elem b = 0; b < n; ++b)
      entries[static_cast<size_t>(a) * n + b] = h.tern(a, e, b);
  CayleyTable table(n, std::move(entries));
  const SemigroupProfile p = classify(table);
  if (!p.group) throw AxiomError("retract-group", {e, e, e});
  return table;
}

}  // namespace ybdeform
