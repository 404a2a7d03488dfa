#include <doctest.h>

#include <functional>
#include <map>
#include <string>
#include <tuple>
#include <ybdeform/brace.hpp>
#include <ybdeform/doc.hpp>
#include <ybdeform/error.hpp>
#include <ybdeform/groups.hpp>
#include <ybdeform/heap.hpp>
#include <ybdeform/solution.hpp>
#include <ybdeform/truss.hpp>

using namespace ybdeform;

namespace {

std::string message_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.what();
  }
  return "";
}

}  // namespace

TEST_CASE("canonical rendering is stable bytes") {
  const StructureDoc doc = parse_doc(
      R"({"kind":"builder","name":"sandwich_units","params":{"n":8}})");
  CHECK(render_doc(doc) ==
        "{\"kind\":\"builder\",\"name\":\"sandwich_units\","
        "\"params\":{\"n\":8}}\n");
  // Whitespace and key order do not matter on the way in.
  const StructureDoc shuffled = parse_doc(
      "{ \"params\": {\"n\": 8}, \"name\": \"sandwich_units\", "
      "\"kind\": \"builder\" }");
  CHECK(shuffled == doc);
  CHECK(render_doc(shuffled) == render_doc(doc));
}

TEST_CASE("parse and render are mutually inverse") {
  const std::vector<StructureDoc> docs = {
      doc_of(cyclic_table(4).table),
      doc_of(heap_of_group(cyclic_table(3).table)),
      doc_of(rump_mod_brace(6)),
      doc_of(truss_of_ring_mod(5)),
      doc_of(twist_map(3)),
      doc_of(product_near_truss(sandwich_units_brace(8),
                                truss_of_ring_mod(5))),
  };
  for (const StructureDoc& doc : docs) {
    CAPTURE(doc.kind());
    CHECK(parse_doc(render_doc(doc)) == doc);
    // Canonical text is a fixed point of a second round trip.
    CHECK(render_doc(parse_doc(render_doc(doc))) == render_doc(doc));
  }
}

TEST_CASE("documents evaluate to verified structures") {
  const StructureDoc table_doc =
      parse_doc(R"({"kind":"table","n":2,"payload":[[0,1],[1,0]]})");
  CHECK(build_doc(table_doc).table() == cyclic_table(2).table);

  const WeakBrace b6 = rump_mod_brace(6);
  const BuiltStructure rebuilt = build_doc(doc_of(b6), BraceLevel::brace);
  CHECK(rebuilt.brace() == b6);

  SUBCASE("kind accessors reject mismatches") {
    CHECK_THROWS_AS(build_doc(table_doc).brace(), InputError);
    CHECK_THROWS_AS(build_doc(doc_of(b6)).table(), InputError);
  }
  SUBCASE("payloads are verified, not trusted") {
    // A pair_map document with out-of-range entries never builds.
    CHECK_THROWS_AS(
        parse_doc(
            R"({"kind":"pair_map","n":2,"payload":{"sigma":[[0,2],[0,1]],"tau":[[0,1],[0,1]]}})"),
        InputError);
    // A heap document that breaks Mal'cev fails verification.
    const std::string bad_heap =
        R"({"kind":"heap","n":2,"payload":[[[0,0],[0,0]],[[0,0],[0,0]]]})";
    CHECK_THROWS_AS(build_doc(parse_doc(bad_heap)), AxiomError);
  }
}

TEST_CASE("schema errors carry a JSON path") {
  const std::string bad_entry =
      R"({"kind":"table","n":4,"payload":[[0,1,2,3],[1,2,7,0],[2,3,0,1],[3,0,1,2]]})";
  const std::string msg = message_of([&] { parse_doc(bad_entry); });
  CHECK(msg.find("payload[1][2]") != std::string::npos);
  CHECK(msg.find("entry 7") != std::string::npos);

  CHECK_THROWS_AS(parse_doc("{"), InputError);
  CHECK_THROWS_AS(parse_doc(R"({"kind":"nonsense","n":1,"payload":[[0]]})"),
                  InputError);
  CHECK_THROWS_AS(parse_doc(R"({"kind":"table","n":2})"), InputError);
  // Unknown keys are rejected rather than ignored.
  CHECK_THROWS_AS(
      parse_doc(
          R"({"kind":"table","n":2,"payload":[[0,1],[1,0]],"extra":1})"),
      InputError);
}

TEST_CASE("builder registry resolves nested references") {
  const StructureDoc doc = parse_doc(
      R"({"kind":"builder","name":"trivial","params":{"of":{"name":"symmetric","params":{"n":3}}}})");
  const BuiltStructure built = build_doc(doc);
  CHECK(built.brace() == trivial_brace(symmetric_table(3).table));
  CHECK(built.labels == symmetric_table(3).labels);

  SUBCASE("unknown builders and wrong parameters are input errors") {
    CHECK_THROWS_AS(
        build_doc(parse_doc(R"({"kind":"builder","name":"nope","params":{}})")),
        InputError);
    const std::string msg = message_of([&] {
      build_doc(parse_doc(
          R"({"kind":"builder","name":"rump_mod","params":{"m":6}})"));
    });
    CHECK(msg.find("rump_mod") != std::string::npos);
  }
  SUBCASE("sub-builder kind mismatches are input errors") {
    // ring_truss's parameter is an integer, not a sub-builder.
    CHECK_THROWS_AS(
        build_doc(parse_doc(
            R"({"kind":"builder","name":"brace_truss","params":{"of":{"name":"cyclic","params":{"n":4}}}})")),
        InputError);
  }
  SUBCASE("required level applies to built braces") {
    const StructureDoc t3 = parse_doc(
        R"({"kind":"builder","name":"trivial","params":{"of":{"name":"clifford3","params":{}}}})");
    CHECK_NOTHROW(build_doc(t3, BraceLevel::dual_weak));
    CHECK_THROWS_AS(build_doc(t3, BraceLevel::skew), AxiomError);
  }
}

TEST_CASE("builtin braces are the documented fixtures") {
  const std::vector<BuiltinBrace>& all = builtin_braces();
  REQUIRE(all.size() == 9);

  std::map<std::string, const BuiltinBrace*> by_name;
  for (const BuiltinBrace& item : all) by_name[item.name] = &item;

  const std::vector<std::tuple<std::string, int, BraceLevel>> expected = {
      {"rump_mod_4", 4, BraceLevel::brace},
      {"rump_mod_6", 6, BraceLevel::brace},
      {"rump_mod_8", 8, BraceLevel::brace},
      {"sandwich_units_8", 4, BraceLevel::brace},
      {"trivial_sym3", 6, BraceLevel::skew},
      {"almost_trivial_sym3", 6, BraceLevel::skew},
      {"trivial_monoid3", 3, BraceLevel::dual_weak},
      {"sandwich_chain_3", 7, BraceLevel::dual_weak},
      {"product_u8_b6", 24, BraceLevel::brace},
  };
  for (const auto& [name, n, level] : expected) {
    CAPTURE(name);
    REQUIRE(by_name.count(name));
    const BuiltinBrace& item = *by_name[name];
    CHECK(item.brace.size() == n);
    CHECK(item.brace.level() == level);
    // Each stored document rebuilds its own brace.
    CHECK(build_doc(item.doc).brace() == item.brace);
  }
}

TEST_CASE("retraction documents round-trip with their base") {
  const Retraction r =
      product_near_truss(sandwich_units_brace(8), truss_of_ring_mod(5));
  const StructureDoc doc = doc_of(r);
  const BuiltStructure built = build_doc(parse_doc(render_doc(doc)));
  const Retraction& r2 = built.retraction();
  CHECK(r2.truss() == r.truss());
  CHECK(r2.pi_map() == r.pi_map());
  CHECK(r2.gamma_map() == r.gamma_map());
  CHECK(r2.kernel() == r.kernel());
}
