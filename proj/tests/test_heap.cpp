#include <doctest.h>

#include <ybdeform/error.hpp>
#include <ybdeform/groups.hpp>
#include <ybdeform/heap.hpp>

using namespace ybdeform;

namespace {

// Dense ternary table of [a, b, c] = a - b + c mod n, the mod-n oracle.
std::vector<Elem> mod_tern(int n) {
  std::vector<Elem> t;
  t.reserve(static_cast<size_t>(n) * n * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c) t.push_back(((a - b + c) % n + n) % n);
  return t;
}

}  // namespace

TEST_CASE("heap verification accepts the modular oracle") {
  const Heap h = Heap::verify(5, mod_tern(5));
  CHECK(h.size() == 5);
  CHECK(h.tern(1, 4, 2) == 4);
  CHECK(Heap::verify(1, {0}).size() == 1);
}

TEST_CASE("heap verification rejects malformed input") {
  CHECK_THROWS_AS(Heap::verify(2, {0}), InputError);
  CHECK_THROWS_AS(Heap::verify(2, std::vector<Elem>(8, 3)), InputError);
  const int n = kMaxHeapCarrier + 1;
  CHECK_THROWS_AS(
      Heap::verify(n, std::vector<Elem>(static_cast<size_t>(n) * n * n, 0)),
      InputError);
}

TEST_CASE("heap axiom failures carry the axiom name") {
  SUBCASE("Mal'cev failure") {
    // Constant ternary operation: [a, a, b] = 0 != b.
    std::vector<Elem> t(8, 0);
    try {
      Heap::verify(2, std::move(t));
      FAIL("expected AxiomError");
    } catch (const AxiomError& e) {
      CHECK(std::string(e.axiom()).find("malcev") != std::string::npos);
    }
  }
  SUBCASE("para-associativity failure") {
    // Patch one entry of the mod-3 oracle; Mal'cev entries stay intact.
    std::vector<Elem> t = mod_tern(3);
    // [1, 2, 0] = 2; set it to 0 instead (indices all distinct, so no
    // Mal'cev pattern is touched).
    t[(1 * 3 + 2) * 3 + 0] = 0;
    CHECK_THROWS_AS(Heap::verify(3, std::move(t)), AxiomError);
  }
}

TEST_CASE("from_tables mirrors dense verification") {
  std::vector<std::vector<std::vector<Elem>>> rows(
      2, std::vector<std::vector<Elem>>(2, std::vector<Elem>(2)));
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int c = 0; c < 2; ++c) rows[a][b][c] = (a ^ b ^ c);
  const Heap h = Heap::from_tables(rows);
  CHECK(h == Heap::verify(2, mod_tern(2)));
}

TEST_CASE("heap of a group uses a b^{-1} c") {
  const CayleyTable s3 = symmetric_table(3).table;
  const Heap h = heap_of_group(s3);
  for (Elem a = 0; a < 6; ++a)
    for (Elem b = 0; b < 6; ++b)
      for (Elem c = 0; c < 6; ++c)
        CHECK(h.tern(a, b, c) == s3.at(s3.at(a, invert(s3, b)), c));
  SUBCASE("non-group tables are rejected") {
    CHECK_THROWS_AS(heap_of_group(clifford3_table().table),
                    UnsupportedError);
  }
}

TEST_CASE("retract and heap_of_group are mutually inverse") {
  const CayleyTable c6 = cyclic_table(6).table;
  const Heap h = heap_of_group(c6);
  // Retracting at the identity returns the original group.
  CHECK(retract(h, 0) == c6);
  // Retracting anywhere and rebuilding returns the original heap.
  for (Elem e = 0; e < 6; ++e) {
    const CayleyTable g = retract(h, e);
    const SemigroupProfile p = classify(g);
    CHECK(p.group);
    CHECK(*p.monoid_identity == e);
    CHECK(heap_of_group(g) == h);
  }
  // Same round trip on a nonabelian carrier.
  const CayleyTable d4 = dihedral_table(4).table;
  const Heap hd = heap_of_group(d4);
  CHECK(retract(hd, 0) == d4);
  for (Elem e = 0; e < 8; ++e) CHECK(heap_of_group(retract(hd, e)) == hd);
}
