#include "ybdeform/doc.hpp"

#include <json.hpp>

#include <algorithm>
#include <numeric>
#include <sstream>

#include "ybdeform/groups.hpp"

namespace ybdeform {

namespace {

using nlohmann::json;  // std::map-backed: object keys stay sorted

[[noreturn]] void fail(const std::string& path, const std::string& what) {
  throw InputError(path + ": " + what);
}

std::string at_index(const std::string& path, size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

int read_int(const json& j, const std::string& path) {
  if (!j.is_number_integer()) fail(path, "expected an integer");
  return j.get<int>();
}

int read_carrier(const json& j, const std::string& path) {
  const int n = read_int(j, path);
  if (n < 1) fail(path, "carrier size must be positive");
  return n;
}

std::vector<Elem> read_elem_array(const json& j, const std::string& path,
                                  size_t count, int bound) {
  if (!j.is_array()) fail(path, "expected an array");
  if (j.size() != count)
    fail(path, "expected " + std::to_string(count) + " entries, found " +
                   std::to_string(j.size()));
  std::vector<Elem> out;
  out.reserve(count);
  for (size_t i = 0; i < j.size(); ++i) {
    const int v = read_int(j[i], at_index(path, i));
    if (v < 0 || v >= bound)
      fail(at_index(path, i),
           "entry " + std::to_string(v) + " outside 0.." +
               std::to_string(bound - 1));
    out.push_back(v);
  }
  return out;
}

Table2 read_table2(const json& j, const std::string& path, int n, int bound) {
  if (!j.is_array()) fail(path, "expected an array");
  if (static_cast<int>(j.size()) != n)
    fail(path, "expected " + std::to_string(n) + " rows, found " +
                   std::to_string(j.size()));
  Table2 out;
  out.reserve(n);
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(read_elem_array(j[i], at_index(path, i), n, bound));
  return out;
}

Table3 read_table3(const json& j, const std::string& path, int n, int bound) {
  if (!j.is_array()) fail(path, "expected an array");
  if (static_cast<int>(j.size()) != n)
    fail(path, "expected " + std::to_string(n) + " planes, found " +
                   std::to_string(j.size()));
  Table3 out;
  out.reserve(n);
  for (size_t i = 0; i < j.size(); ++i)
    out.push_back(read_table2(j[i], at_index(path, i), n, bound));
  return out;
}

std::vector<Elem> flat2(const Table2& t) {
  std::vector<Elem> out;
  for (const auto& row : t) out.insert(out.end(), row.begin(), row.end());
  return out;
}

std::vector<Elem> flat3(const Table3& t) {
  std::vector<Elem> out;
  for (const auto& plane : t)
    for (const auto& row : plane) out.insert(out.end(), row.begin(), row.end());
  return out;
}

Table2 to_table2(int n, const std::vector<Elem>& flat) {
  Table2 out(n, std::vector<Elem>(n));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      out[a][b] = flat[static_cast<size_t>(a) * n + b];
  return out;
}

Table3 to_table3(int n, const std::vector<Elem>& flat) {
  Table3 out(n, Table2(n, std::vector<Elem>(n)));
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b)
      for (int c = 0; c < n; ++c)
        out[a][b][c] = flat[(static_cast<size_t>(a) * n + b) * n + c];
  return out;
}

void expect_keys(const json& j, const std::string& path,
                 const std::vector<std::string>& required,
                 const std::vector<std::string>& optional = {}) {
  for (const auto& item : j.items()) {
    const std::string& key = item.key();
    if (std::find(required.begin(), required.end(), key) == required.end() &&
        std::find(optional.begin(), optional.end(), key) == optional.end())
      fail(path, "unexpected key '" + key + "'");
  }
  for (const auto& key : required)
    if (!j.contains(key)) fail(path, "missing key '" + key + "'");
}

BuilderSpec read_builder_fields(const json& j, const std::string& path) {
  BuilderSpec spec;
  if (!j.at("name").is_string()) fail(path + ".name", "expected a string");
  spec.name = j.at("name").get<std::string>();
  if (j.contains("params")) {
    const json& params = j.at("params");
    if (!params.is_object()) fail(path + ".params", "expected an object");
    for (const auto& item : params.items()) {
      const std::string sub_path = path + ".params." + item.key();
      if (item.value().is_number_integer()) {
        spec.ints.emplace_back(item.key(), item.value().get<int>());
      } else if (item.value().is_object()) {
        expect_keys(item.value(), sub_path, {"name"}, {"params"});
        spec.subs.emplace_back(item.key(),
                               read_builder_fields(item.value(), sub_path));
      } else {
        fail(sub_path, "expected an integer or a nested builder");
      }
    }
  }
  return spec;
}

json render_builder_params(const BuilderSpec& spec) {
  json params = json::object();
  for (const auto& [key, value] : spec.ints) params[key] = value;
  for (const auto& [key, sub] : spec.subs) {
    json inner;
    inner["name"] = sub.name;
    inner["params"] = render_builder_params(sub);
    params[key] = inner;
  }
  return params;
}

std::vector<std::string> index_labels(int n) {
  std::vector<std::string> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) out.push_back(std::to_string(i));
  return out;
}

std::vector<std::string> pair_labels(const std::vector<std::string>& left,
                                     const std::vector<std::string>& right) {
  std::vector<std::string> out;
  out.reserve(left.size() * right.size());
  for (const auto& l : left)
    for (const auto& r : right) out.push_back("(" + l + "," + r + ")");
  return out;
}

std::vector<std::string> labels_or_indices(std::vector<std::string> labels,
                                           int n) {
  return labels.empty() ? index_labels(n) : std::move(labels);
}

void expect_params(const BuilderSpec& spec,
                   std::vector<std::string> int_keys,
                   std::vector<std::string> sub_keys) {
  std::vector<std::string> got_ints, got_subs;
  for (const auto& [key, value] : spec.ints) got_ints.push_back(key);
  for (const auto& [key, value] : spec.subs) got_subs.push_back(key);
  std::sort(int_keys.begin(), int_keys.end());
  std::sort(sub_keys.begin(), sub_keys.end());
  std::sort(got_ints.begin(), got_ints.end());
  std::sort(got_subs.begin(), got_subs.end());
  if (got_ints == int_keys && got_subs == sub_keys) return;

  std::ostringstream out;
  out << "builder '" << spec.name << "' takes";
  if (int_keys.empty() && sub_keys.empty()) {
    out << " no parameters";
  } else {
    const char* sep = " ";
    for (const auto& key : int_keys) {
      out << sep << "integer '" << key << "'";
      sep = ", ";
    }
    for (const auto& key : sub_keys) {
      out << sep << "builder '" << key << "'";
      sep = ", ";
    }
  }
  throw InputError(out.str());
}

std::vector<int> units_of(int m) {
  std::vector<int> out;
  for (int u = 1; u < m; ++u)
    if (std::gcd(u, m) == 1) out.push_back(u);
  if (m == 1) out.push_back(0);
  return out;
}

BuiltStructure build_clifford_chain(int top, int bottom) {
  if (top < 1 || bottom < 1)
    throw InputError("clifford_chain orders must be positive");
  if (top % bottom != 0)
    throw InputError(
        "clifford_chain requires the bottom order to divide the top order");
  const CayleyTable meet(2, {0, 1, 1, 1});
  const std::vector<CayleyTable> groups = {cyclic_table(top).table,
                                           cyclic_table(bottom).table};
  ComponentHoms homs;
  std::vector<Elem>& down = homs[{0, 1}];
  down.resize(top);
  for (int x = 0; x < top; ++x) down[x] = x % bottom;

  std::vector<std::string> labels;
  for (int x = 0; x < top; ++x) labels.push_back("0:" + std::to_string(x));
  for (int x = 0; x < bottom; ++x) labels.push_back("1:" + std::to_string(x));
  return {build_strong_semilattice(meet, groups, homs), std::move(labels)};
}

BuiltStructure build_sandwich_chain(int k) {
  if (k < 1) throw InputError("sandwich_chain length must be positive");
  if (k > 5) throw InputError("sandwich_chain length above 5 is unsupported");
  std::vector<WeakBrace> braces;
  std::vector<std::vector<int>> units;
  std::vector<std::string> labels;
  for (int i = 0; i < k; ++i) {
    const int m = 1 << (k - i);
    braces.push_back(sandwich_units_brace(m));
    units.push_back(units_of(m));
    for (int u : units.back())
      labels.push_back(std::to_string(i) + ":" + std::to_string(u));
  }

  std::vector<Elem> meet_entries(static_cast<size_t>(k) * k);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j)
      meet_entries[static_cast<size_t>(i) * k + j] = std::max(i, j);
  const CayleyTable meet(k, std::move(meet_entries));

  ComponentHoms homs;
  for (int i = 0; i < k; ++i)
    for (int j = i + 1; j < k; ++j) {
      const int mj = 1 << (k - j);
      std::vector<Elem>& down = homs[{i, j}];
      for (int u : units[i]) {
        const auto& lower = units[j];
        const auto it = std::find(lower.begin(), lower.end(), u % mj);
        down.push_back(static_cast<Elem>(it - lower.begin()));
      }
    }
  return {semilattice_of_braces(meet, braces, homs), std::move(labels)};
}

BuiltStructure builder_table(const BuilderSpec& spec);

CayleyTable sub_table(const BuilderSpec& spec, const std::string& key,
                      std::vector<std::string>* labels) {
  BuiltStructure sub = build_from_registry(spec.sub_param(key));
  if (!std::holds_alternative<CayleyTable>(sub.value))
    throw InputError("builder '" + spec.name + "' parameter '" + key +
                     "' must build a table");
  *labels = labels_or_indices(std::move(sub.labels),
                              std::get<CayleyTable>(sub.value).size());
  return std::get<CayleyTable>(std::move(sub.value));
}

WeakBrace sub_brace(const BuilderSpec& spec, const std::string& key,
                    std::vector<std::string>* labels) {
  BuiltStructure sub = build_from_registry(spec.sub_param(key));
  if (!std::holds_alternative<WeakBrace>(sub.value))
    throw InputError("builder '" + spec.name + "' parameter '" + key +
                     "' must build a weak brace");
  *labels = labels_or_indices(std::move(sub.labels),
                              std::get<WeakBrace>(sub.value).size());
  return std::get<WeakBrace>(std::move(sub.value));
}

NearTruss sub_truss(const BuilderSpec& spec, const std::string& key,
                    std::vector<std::string>* labels) {
  BuiltStructure sub = build_from_registry(spec.sub_param(key));
  if (!std::holds_alternative<NearTruss>(sub.value))
    throw InputError("builder '" + spec.name + "' parameter '" + key +
                     "' must build a near-truss");
  *labels = labels_or_indices(std::move(sub.labels),
                              std::get<NearTruss>(sub.value).size());
  return std::get<NearTruss>(std::move(sub.value));
}

std::vector<std::string> twisted_labels(int m) {
  std::vector<std::string> out;
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      for (int b = 0; b < 2; ++b) {
        std::ostringstream label;
        label << "((" << x << "," << y << ")," << b << ")";
        out.push_back(label.str());
      }
  return out;
}

}  // namespace

int BuilderSpec::int_param(const std::string& key) const {
  for (const auto& [k, v] : ints)
    if (k == key) return v;
  throw InputError("builder '" + name + "' is missing integer parameter '" +
                   key + "'");
}

const BuilderSpec& BuilderSpec::sub_param(const std::string& key) const {
  for (const auto& [k, v] : subs)
    if (k == key) return v;
  throw InputError("builder '" + name + "' is missing builder parameter '" +
                   key + "'");
}

const char* StructureDoc::kind() const {
  switch (payload.index()) {
    case 0: return "table";
    case 1: return "heap";
    case 2: return "weak_brace";
    case 3: return "near_truss";
    case 4: return "pair_map";
    case 5: return "retraction";
    case 6: return "builder";
  }
  return "table";
}

StructureDoc parse_doc(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("document is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) fail("$", "expected an object");
  if (!j.contains("kind") || !j.at("kind").is_string())
    fail("$.kind", "expected a string");
  const std::string kind = j.at("kind").get<std::string>();

  if (kind == "builder") {
    expect_keys(j, "$", {"kind", "name"}, {"params"});
    return {std::nullopt, std::nullopt,
            BuilderPayload{read_builder_fields(j, "$")}};
  }

  expect_keys(j, "$", {"kind", "n", "payload"}, {"labels"});
  const int n = read_carrier(j.at("n"), "$.n");

  StructureDoc doc;
  doc.n = n;
  if (j.contains("labels")) {
    const json& labels = j.at("labels");
    if (!labels.is_array() || static_cast<int>(labels.size()) != n)
      fail("$.labels", "expected an array of " + std::to_string(n) +
                           " strings");
    std::vector<std::string> out;
    for (size_t i = 0; i < labels.size(); ++i) {
      if (!labels[i].is_string())
        fail(at_index("$.labels", i), "expected a string");
      out.push_back(labels[i].get<std::string>());
    }
    doc.labels = std::move(out);
  }

  const json& payload = j.at("payload");
  const std::string root = "$.payload";
  if (kind == "table") {
    doc.payload = TablePayload{read_table2(payload, root, n, n)};
  } else if (kind == "heap") {
    doc.payload = HeapPayload{read_table3(payload, root, n, n)};
  } else if (kind == "weak_brace") {
    if (!payload.is_object()) fail(root, "expected an object");
    expect_keys(payload, root, {"add", "mul"});
    doc.payload = BracePayload{read_table2(payload.at("add"), root + ".add", n, n),
                               read_table2(payload.at("mul"), root + ".mul", n, n)};
  } else if (kind == "near_truss") {
    if (!payload.is_object()) fail(root, "expected an object");
    expect_keys(payload, root, {"mul", "tern"});
    doc.payload = TrussPayload{read_table3(payload.at("tern"), root + ".tern", n, n),
                               read_table2(payload.at("mul"), root + ".mul", n, n)};
  } else if (kind == "pair_map") {
    if (!payload.is_object()) fail(root, "expected an object");
    expect_keys(payload, root, {"sigma", "tau"});
    doc.payload =
        PairMapPayload{read_table2(payload.at("sigma"), root + ".sigma", n, n),
                       read_table2(payload.at("tau"), root + ".tau", n, n)};
  } else if (kind == "retraction") {
    if (!payload.is_object()) fail(root, "expected an object");
    expect_keys(payload, root, {"brace", "gamma", "pi", "truss"});
    const json& truss = payload.at("truss");
    if (!truss.is_object()) fail(root + ".truss", "expected an object");
    expect_keys(truss, root + ".truss", {"mul", "n", "tern"});
    const json& brace = payload.at("brace");
    if (!brace.is_object()) fail(root + ".brace", "expected an object");
    expect_keys(brace, root + ".brace", {"add", "mul", "n"});

    RetractionPayload p;
    p.truss_n = read_carrier(truss.at("n"), root + ".truss.n");
    if (p.truss_n != n)
      fail(root + ".truss.n", "does not match the document carrier");
    p.truss_tern = read_table3(truss.at("tern"), root + ".truss.tern", n, n);
    p.truss_mul = read_table2(truss.at("mul"), root + ".truss.mul", n, n);
    p.brace_n = read_carrier(brace.at("n"), root + ".brace.n");
    p.brace_add =
        read_table2(brace.at("add"), root + ".brace.add", p.brace_n, p.brace_n);
    p.brace_mul =
        read_table2(brace.at("mul"), root + ".brace.mul", p.brace_n, p.brace_n);
    p.pi = read_elem_array(payload.at("pi"), root + ".pi",
                           static_cast<size_t>(n), p.brace_n);
    p.gamma = read_elem_array(payload.at("gamma"), root + ".gamma",
                              static_cast<size_t>(p.brace_n), n);
    doc.payload = std::move(p);
  } else {
    fail("$.kind", "unknown kind '" + kind + "'");
  }
  return doc;
}

std::string render_doc(const StructureDoc& doc) {
  json j;
  j["kind"] = doc.kind();
  if (doc.n) j["n"] = *doc.n;
  if (doc.labels) j["labels"] = *doc.labels;

  if (const auto* p = std::get_if<TablePayload>(&doc.payload)) {
    j["payload"] = p->table;
  } else if (const auto* p = std::get_if<HeapPayload>(&doc.payload)) {
    j["payload"] = p->tern;
  } else if (const auto* p = std::get_if<BracePayload>(&doc.payload)) {
    j["payload"] = json{{"add", p->add}, {"mul", p->mul}};
  } else if (const auto* p = std::get_if<TrussPayload>(&doc.payload)) {
    j["payload"] = json{{"mul", p->mul}, {"tern", p->tern}};
  } else if (const auto* p = std::get_if<PairMapPayload>(&doc.payload)) {
    j["payload"] = json{{"sigma", p->sigma}, {"tau", p->tau}};
  } else if (const auto* p = std::get_if<RetractionPayload>(&doc.payload)) {
    j["payload"] =
        json{{"brace", json{{"add", p->brace_add},
                            {"mul", p->brace_mul},
                            {"n", p->brace_n}}},
             {"gamma", p->gamma},
             {"pi", p->pi},
             {"truss", json{{"mul", p->truss_mul},
                            {"n", p->truss_n},
                            {"tern", p->truss_tern}}}};
  } else if (const auto* p = std::get_if<BuilderPayload>(&doc.payload)) {
    j["name"] = p->spec.name;
    j["params"] = render_builder_params(p->spec);
  }
  return j.dump() + "\n";
}

StructureDoc doc_of(const CayleyTable& t) {
  return {t.size(), std::nullopt, TablePayload{t.rows()}};
}

StructureDoc doc_of(const Heap& h) {
  return {h.size(), std::nullopt, HeapPayload{to_table3(h.size(), h.entries())}};
}

StructureDoc doc_of(const WeakBrace& w) {
  return {w.size(), std::nullopt,
          BracePayload{w.add_table().rows(), w.mul_table().rows()}};
}

StructureDoc doc_of(const NearTruss& t) {
  return {t.size(), std::nullopt,
          TrussPayload{to_table3(t.size(), t.heap().entries()),
                       t.mul_table().rows()}};
}

StructureDoc doc_of(const PairMap& r) {
  return {r.size(), std::nullopt,
          PairMapPayload{to_table2(r.size(), r.sigma_entries()),
                         to_table2(r.size(), r.tau_entries())}};
}

StructureDoc doc_of(const Retraction& r) {
  RetractionPayload p;
  const NearTruss& t = r.truss();
  const WeakBrace& b = r.brace();
  p.truss_n = t.size();
  p.truss_tern = to_table3(t.size(), t.heap().entries());
  p.truss_mul = t.mul_table().rows();
  p.brace_n = b.size();
  p.brace_add = b.add_table().rows();
  p.brace_mul = b.mul_table().rows();
  p.pi = r.pi_map();
  p.gamma = r.gamma_map();
  return {t.size(), std::nullopt, std::move(p)};
}

const CayleyTable& BuiltStructure::table() const {
  if (!std::holds_alternative<CayleyTable>(value))
    throw InputError("document does not describe a table");
  return std::get<CayleyTable>(value);
}
const Heap& BuiltStructure::heap() const {
  if (!std::holds_alternative<Heap>(value))
    throw InputError("document does not describe a heap");
  return std::get<Heap>(value);
}
const WeakBrace& BuiltStructure::brace() const {
  if (!std::holds_alternative<WeakBrace>(value))
    throw InputError("document does not describe a weak brace");
  return std::get<WeakBrace>(value);
}
const NearTruss& BuiltStructure::truss() const {
  if (!std::holds_alternative<NearTruss>(value))
    throw InputError("document does not describe a near-truss");
  return std::get<NearTruss>(value);
}
const PairMap& BuiltStructure::pair_map() const {
  if (!std::holds_alternative<PairMap>(value))
    throw InputError("document does not describe a pair map");
  return std::get<PairMap>(value);
}
const Retraction& BuiltStructure::retraction() const {
  if (!std::holds_alternative<Retraction>(value))
    throw InputError("document does not describe a retraction");
  return std::get<Retraction>(value);
}

BuiltStructure build_doc(const StructureDoc& doc, BraceLevel required_level) {
  const std::vector<std::string> labels =
      doc.labels ? *doc.labels : std::vector<std::string>{};
  const int n = doc.n.value_or(0);

  if (const auto* p = std::get_if<TablePayload>(&doc.payload)) {
    return {CayleyTable(n, flat2(p->table)), labels};
  }
  if (const auto* p = std::get_if<HeapPayload>(&doc.payload)) {
    return {Heap::verify(n, flat3(p->tern)), labels};
  }
  if (const auto* p = std::get_if<BracePayload>(&doc.payload)) {
    return {WeakBrace::verify(CayleyTable(n, flat2(p->add)),
                              CayleyTable(n, flat2(p->mul)), required_level),
            labels};
  }
  if (const auto* p = std::get_if<TrussPayload>(&doc.payload)) {
    return {NearTruss::verify(Heap::verify(n, flat3(p->tern)),
                              CayleyTable(n, flat2(p->mul))),
            labels};
  }
  if (const auto* p = std::get_if<PairMapPayload>(&doc.payload)) {
    return {PairMap(n, flat2(p->sigma), flat2(p->tau)), labels};
  }
  if (const auto* p = std::get_if<RetractionPayload>(&doc.payload)) {
    NearTruss t = NearTruss::verify(Heap::verify(p->truss_n, flat3(p->truss_tern)),
                                    CayleyTable(p->truss_n, flat2(p->truss_mul)));
    WeakBrace b = WeakBrace::verify(CayleyTable(p->brace_n, flat2(p->brace_add)),
                                    CayleyTable(p->brace_n, flat2(p->brace_mul)));
    return {Retraction::verify(std::move(t), std::move(b), p->pi, p->gamma),
            labels};
  }
  const auto& spec = std::get<BuilderPayload>(doc.payload).spec;
  BuiltStructure built = build_from_registry(spec);
  if (const auto* w = std::get_if<WeakBrace>(&built.value);
      w && required_level > BraceLevel::weak) {
    WeakBrace::verify(w->add_table(), w->mul_table(), required_level);
  }
  return built;
}

BuiltStructure build_from_registry(const BuilderSpec& spec) {
  const std::string& name = spec.name;

  if (name == "cyclic" || name == "symmetric" || name == "dihedral" ||
      name == "units_mod") {
    expect_params(spec, {"n"}, {});
    const int n = spec.int_param("n");
    BuiltTable bt = name == "cyclic"      ? cyclic_table(n)
                    : name == "symmetric" ? symmetric_table(n)
                    : name == "dihedral"  ? dihedral_table(n)
                                          : units_mod_table(n);
    return {std::move(bt.table), std::move(bt.labels)};
  }
  if (name == "clifford3") {
    expect_params(spec, {}, {});
    BuiltTable bt = clifford3_table();
    return {std::move(bt.table), std::move(bt.labels)};
  }
  if (name == "clifford_chain") {
    expect_params(spec, {"top", "bottom"}, {});
    return build_clifford_chain(spec.int_param("top"),
                                spec.int_param("bottom"));
  }
  if (name == "table_product") {
    expect_params(spec, {}, {"left", "right"});
    std::vector<std::string> left_labels, right_labels;
    const CayleyTable left = sub_table(spec, "left", &left_labels);
    const CayleyTable right = sub_table(spec, "right", &right_labels);
    return {product_table(left, right), pair_labels(left_labels, right_labels)};
  }

  if (name == "trivial" || name == "almost_trivial") {
    expect_params(spec, {}, {"of"});
    std::vector<std::string> labels;
    const CayleyTable t = sub_table(spec, "of", &labels);
    return {name == "trivial" ? trivial_brace(t) : almost_trivial_brace(t),
            std::move(labels)};
  }
  if (name == "rump_mod") {
    expect_params(spec, {"n"}, {});
    const int n = spec.int_param("n");
    return {rump_mod_brace(n), index_labels(n)};
  }
  if (name == "sandwich_units") {
    expect_params(spec, {"n"}, {});
    const int n = spec.int_param("n");
    WeakBrace w = sandwich_units_brace(n);
    std::vector<std::string> labels;
    for (int u : units_of(n)) labels.push_back(std::to_string(u));
    return {std::move(w), std::move(labels)};
  }
  if (name == "brace_product") {
    expect_params(spec, {}, {"left", "right"});
    std::vector<std::string> left_labels, right_labels;
    const WeakBrace left = sub_brace(spec, "left", &left_labels);
    const WeakBrace right = sub_brace(spec, "right", &right_labels);
    return {product_brace(left, right), pair_labels(left_labels, right_labels)};
  }
  if (name == "sandwich_chain") {
    expect_params(spec, {"k"}, {});
    return build_sandwich_chain(spec.int_param("k"));
  }

  if (name == "ring_truss") {
    expect_params(spec, {"n"}, {});
    const int n = spec.int_param("n");
    return {truss_of_ring_mod(n), index_labels(n)};
  }
  if (name == "brace_truss") {
    expect_params(spec, {}, {"of"});
    std::vector<std::string> labels;
    const WeakBrace b = sub_brace(spec, "of", &labels);
    return {truss_of_brace(b), std::move(labels)};
  }

  if (name == "identity_retraction") {
    expect_params(spec, {}, {"of"});
    std::vector<std::string> labels;
    const WeakBrace b = sub_brace(spec, "of", &labels);
    return {identity_retraction(b), std::move(labels)};
  }
  if (name == "trivial_base") {
    expect_params(spec, {}, {"of"});
    std::vector<std::string> labels;
    const NearTruss t = sub_truss(spec, "of", &labels);
    return {trivial_base_retraction(t), std::move(labels)};
  }
  if (name == "product_retraction") {
    expect_params(spec, {}, {"brace", "truss"});
    std::vector<std::string> brace_labels, truss_labels;
    const WeakBrace b = sub_brace(spec, "brace", &brace_labels);
    const NearTruss t = sub_truss(spec, "truss", &truss_labels);
    return {product_near_truss(b, t), pair_labels(brace_labels, truss_labels)};
  }
  if (name == "twisted_truss") {
    expect_params(spec, {"n"}, {});
    const int n = spec.int_param("n");
    return {swap_twisted_retraction(n), twisted_labels(n)};
  }

  throw InputError("unknown builder '" + name + "'");
}

namespace {

BuilderSpec int_spec(std::string name, std::string key, int value) {
  BuilderSpec spec;
  spec.name = std::move(name);
  spec.ints.emplace_back(std::move(key), value);
  return spec;
}

BuilderSpec wrap_spec(std::string name, std::string key, BuilderSpec inner) {
  BuilderSpec spec;
  spec.name = std::move(name);
  spec.subs.emplace_back(std::move(key), std::move(inner));
  return spec;
}

BuilderSpec no_param_spec(std::string name) {
  BuilderSpec spec;
  spec.name = std::move(name);
  return spec;
}

BuiltinBrace make_builtin(std::string name, BuilderSpec spec) {
  StructureDoc doc{std::nullopt, std::nullopt, BuilderPayload{spec}};
  WeakBrace brace = std::get<WeakBrace>(build_from_registry(spec).value);
  return {std::move(name), std::move(doc), std::move(brace)};
}

}  // namespace

const std::vector<BuiltinBrace>& builtin_braces() {
  static const std::vector<BuiltinBrace> builtins = [] {
    BuilderSpec product;
    product.name = "brace_product";
    product.subs.emplace_back("left", int_spec("sandwich_units", "n", 8));
    product.subs.emplace_back("right", int_spec("rump_mod", "n", 6));

    std::vector<BuiltinBrace> out;
    out.push_back(make_builtin("rump_mod_4", int_spec("rump_mod", "n", 4)));
    out.push_back(make_builtin("rump_mod_6", int_spec("rump_mod", "n", 6)));
    out.push_back(make_builtin("rump_mod_8", int_spec("rump_mod", "n", 8)));
    out.push_back(
        make_builtin("sandwich_units_8", int_spec("sandwich_units", "n", 8)));
    out.push_back(make_builtin(
        "trivial_sym3", wrap_spec("trivial", "of", int_spec("symmetric", "n", 3))));
    out.push_back(make_builtin(
        "almost_trivial_sym3",
        wrap_spec("almost_trivial", "of", int_spec("symmetric", "n", 3))));
    out.push_back(make_builtin(
        "trivial_monoid3", wrap_spec("trivial", "of", no_param_spec("clifford3"))));
    out.push_back(
        make_builtin("sandwich_chain_3", int_spec("sandwich_chain", "k", 3)));
    out.push_back(make_builtin("product_u8_b6", std::move(product)));
    return out;
  }();
  return builtins;
}

}  // namespace ybdeform
