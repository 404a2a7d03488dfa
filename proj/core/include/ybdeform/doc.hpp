#pragma once

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "ybdeform/brace.hpp"
#include "ybdeform/heap.hpp"
#include "ybdeform/solution.hpp"
#include "ybdeform/truss.hpp"

namespace ybdeform {

// Structure documents: a canonical JSON exchange format for every structure
// the library handles.  Canonical form means object keys sorted, no
// insignificant whitespace except a trailing newline, LF only — so
// parse/render round-trips are byte-stable and diffable.
//
// Shapes ("n" is the carrier size, entries are always indices 0..n-1):
//   {"kind":"table","n":2,"payload":[[0,1],[1,0]]}
//   {"kind":"heap","n":2,"payload":[[[0,1],[1,0]],[[1,0],[0,1]]]}
//   {"kind":"weak_brace","n":6,"payload":{"add":[...],"mul":[...]}}
//   {"kind":"near_truss","n":5,"payload":{"mul":[...],"tern":[[[...]]]}}
//   {"kind":"pair_map","n":3,"payload":{"sigma":[...],"tau":[...]}}
//   {"kind":"retraction","n":8,"payload":{"brace":{"add":[...],"mul":[...],
//        "n":4},"gamma":[...],"pi":[...],"truss":{"mul":[...],"n":8,
//        "tern":[...]}}}
//   {"kind":"builder","name":"rump_mod","params":{"n":6}}
// An optional "labels" array of n strings may accompany any non-builder
// kind.  Builder params are integers or nested {"name":...,"params":{...}}
// builder references.

using Table2 = std::vector<std::vector<Elem>>;
using Table3 = std::vector<Table2>;

// A builder reference with (possibly nested) parameters, kept sorted by key
// so documents compare canonically.
struct BuilderSpec {
  std::string name;
  std::vector<std::pair<std::string, int>> ints;
  std::vector<std::pair<std::string, BuilderSpec>> subs;

  int int_param(const std::string& key) const;
  const BuilderSpec& sub_param(const std::string& key) const;
  bool operator==(const BuilderSpec&) const = default;
};

struct TablePayload {
  Table2 table;
  bool operator==(const TablePayload&) const = default;
};
struct HeapPayload {
  Table3 tern;
  bool operator==(const HeapPayload&) const = default;
};
struct BracePayload {
  Table2 add, mul;
  bool operator==(const BracePayload&) const = default;
};
struct TrussPayload {
  Table3 tern;
  Table2 mul;
  bool operator==(const TrussPayload&) const = default;
};
struct PairMapPayload {
  Table2 sigma, tau;
  bool operator==(const PairMapPayload&) const = default;
};
struct RetractionPayload {
  int truss_n = 0;
  Table3 truss_tern;
  Table2 truss_mul;
  int brace_n = 0;
  Table2 brace_add, brace_mul;
  std::vector<Elem> pi, gamma;
  bool operator==(const RetractionPayload&) const = default;
};
struct BuilderPayload {
  BuilderSpec spec;
  bool operator==(const BuilderPayload&) const = default;
};

using DocPayload = std::variant<TablePayload, HeapPayload, BracePayload,
                                TrussPayload, PairMapPayload,
                                RetractionPayload, BuilderPayload>;

struct StructureDoc {
  std::optional<int> n;  // absent for builders
  std::optional<std::vector<std::string>> labels;
  DocPayload payload;

  const char* kind() const;
  bool operator==(const StructureDoc&) const = default;
};

// Parses a document, validating shape and entry ranges; errors carry the
// JSON path of the offending value ("payload[1][2]").  render emits
// canonical bytes; parse(render(doc)) == doc.
StructureDoc parse_doc(const std::string& text);
std::string render_doc(const StructureDoc& doc);

// Document factories for values the CLI emits.
StructureDoc doc_of(const CayleyTable& t);
StructureDoc doc_of(const Heap& h);
StructureDoc doc_of(const WeakBrace& w);
StructureDoc doc_of(const NearTruss& t);
StructureDoc doc_of(const PairMap& r);
StructureDoc doc_of(const Retraction& r);

// The result of evaluating a document: one verified structure, plus labels
// when the document (or builder) provides them.
struct BuiltStructure {
  std::variant<CayleyTable, Heap, WeakBrace, NearTruss, PairMap, Retraction>
      value;
  std::vector<std::string> labels;  // empty when none

  const CayleyTable& table() const;
  const Heap& heap() const;
  const WeakBrace& brace() const;
  const NearTruss& truss() const;
  const PairMap& pair_map() const;
  const Retraction& retraction() const;
};

// Evaluates a document: explicit payloads are verified as their kind;
// builder references are resolved recursively.  required_level applies when
// the result is a weak brace.
BuiltStructure build_doc(const StructureDoc& doc,
                         BraceLevel required_level = BraceLevel::weak);

// Evaluates a builder reference.  Registry:
//   tables:  cyclic{n}, symmetric{n}, dihedral{n}, units_mod{n}, clifford3{},
//            clifford_chain{top,bottom}, table_product{left,right}
//   braces:  trivial{of}, almost_trivial{of}, rump_mod{n}, sandwich_units{n},
//            brace_product{left,right}, sandwich_chain{k}
//   trusses: ring_truss{n}, brace_truss{of}
//   retractions: identity_retraction{of}, trivial_base{of},
//            product_retraction{brace,truss}, twisted_truss{n}
BuiltStructure build_from_registry(const BuilderSpec& spec);

// The named weak braces every report and the acceptance suite range over,
// in fixed order.
struct BuiltinBrace {
  std::string name;
  StructureDoc doc;
  WeakBrace brace;
};
const std::vector<BuiltinBrace>& builtin_braces();

}  // namespace ybdeform
