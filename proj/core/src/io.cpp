#include "dcospan/io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace dcospan {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& why) {
  throw std::invalid_argument("malformed circuit document: " + why);
}

void requireKeys(const json& obj, const std::vector<std::string>& keys,
                 const std::string& where) {
  if (!obj.is_object()) fail(where + " is not an object");
  for (const auto& item : obj.items()) {
    bool known = false;
    for (const std::string& k : keys) known = known || item.key() == k;
    if (!known) fail("unexpected key \"" + item.key() + "\" in " + where);
  }
  for (const std::string& k : keys)
    if (!obj.contains(k)) fail("missing key \"" + k + "\" in " + where);
}

std::uint32_t asSize(const json& v, const std::string& where) {
  if (!v.is_number_unsigned()) fail(where + " is not a nonnegative integer");
  const std::uint64_t n = v.get<std::uint64_t>();
  if (n > FinSet::kMaxSize) fail(where + " exceeds the 2^16 size cap");
  return static_cast<std::uint32_t>(n);
}

FinFunction legFromJson(const json& v, FinSet apex, const std::string& where) {
  if (!v.is_array()) fail(where + " is not an array");
  std::vector<std::uint32_t> table;
  table.reserve(v.size());
  for (const json& e : v) {
    const std::uint32_t idx = asSize(e, "entry of " + where);
    if (idx >= apex.size()) fail(where + " points outside the apex");
    table.push_back(idx);
  }
  const auto domSize = static_cast<std::uint32_t>(table.size());
  return FinFunction(FinSet(domSize), apex, std::move(table));
}

Rat ratFromJson(const json& v, const std::string& where) {
  if (!v.is_string()) fail(where + " is not a \"p/q\" string");
  try {
    return Rat::parse(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    fail(where + ": " + e.what());
  }
}

LabeledGraph graphFromJson(const json& deco, FinSet apex) {
  requireKeys(deco, {"edges", "kind"}, "decoration");
  if (!deco["edges"].is_array()) fail("edges is not an array");
  std::vector<LabeledGraph::Edge> edges;
  for (const json& e : deco["edges"]) {
    if (!e.is_array() || e.size() != 3) fail("edge is not a [src,tgt,label]");
    LabeledGraph::Edge edge;
    edge.src = asSize(e[0], "edge source");
    edge.tgt = asSize(e[1], "edge target");
    if (edge.src >= apex.size() || edge.tgt >= apex.size())
      fail("edge endpoint outside the apex");
    edge.label = ratFromJson(e[2], "edge label");
    if (!edge.label.isPositive()) fail("edge label is not positive");
    edges.push_back(std::move(edge));
  }
  return LabeledGraph(apex, std::move(edges));
}

Subspace linsubFromJson(const json& deco, FinSet apex, bool lenient) {
  requireKeys(deco, {"kind", "rows"}, "decoration");
  if (!deco["rows"].is_array()) fail("rows is not an array");
  const std::size_t ambient = 2 * static_cast<std::size_t>(apex.size());
  Matrix rows(deco["rows"].size(), ambient);
  std::size_t i = 0;
  for (const json& r : deco["rows"]) {
    if (!r.is_array() || r.size() != ambient)
      fail("subspace row does not have 2*apex entries");
    for (std::size_t j = 0; j < ambient; ++j)
      rows.at(i, j) = ratFromJson(r[j], "subspace entry");
    ++i;
  }
  if (lenient) return Subspace::fromGenerators(rows, ambient);
  try {
    return Subspace::fromCanonicalRows(std::move(rows), ambient);
  } catch (const std::invalid_argument&) {
    fail("subspace rows are not in reduced row-echelon form");
  }
}

json ratToJson(const Rat& r) { return r.str(); }

}  // namespace

CircuitDocument documentFromCospan(const Cospan& c) {
  return CircuitDocument{c, DecorationKind::None, std::nullopt, std::nullopt};
}

CircuitDocument documentFromGraphDecorated(const CircuitCospan& d) {
  return CircuitDocument{d.shape, DecorationKind::Graph, d.decoration,
                         std::nullopt};
}

CircuitDocument documentFromLinSubDecorated(
    const DecoratedCospan<LinSubFunctor>& d) {
  return CircuitDocument{d.shape, DecorationKind::LinSub, std::nullopt,
                         d.decoration};
}

CircuitCospan asGraphDecorated(const CircuitDocument& doc) {
  if (doc.kind != DecorationKind::Graph)
    throw std::invalid_argument("expected a graph-decorated document");
  return makeDecorated(GraphFunctor{}, doc.shape, *doc.graph);
}

DecoratedCospan<LinSubFunctor> asLinSubDecorated(const CircuitDocument& doc) {
  if (doc.kind != DecorationKind::LinSub)
    throw std::invalid_argument("expected a linsub-decorated document");
  return makeDecorated(LinSubFunctor{}, doc.shape, *doc.linsub);
}

CircuitDocument parseCircuit(const std::string& bytes, bool lenient) {
  json root;
  try {
    root = json::parse(bytes);
  } catch (const json::exception& e) {
    fail(std::string("invalid JSON: ") + e.what());
  }
  requireKeys(root, {"apex", "decoration", "feet", "legs"}, "document");
  requireKeys(root["feet"], {"left", "right"}, "feet");
  requireKeys(root["legs"], {"left", "right"}, "legs");

  CircuitDocument doc;
  const FinSet apex(asSize(root["apex"], "apex"));
  const FinFunction legLeft = legFromJson(root["legs"]["left"], apex, "left leg");
  const FinFunction legRight =
      legFromJson(root["legs"]["right"], apex, "right leg");
  if (legLeft.dom().size() != asSize(root["feet"]["left"], "left foot"))
    fail("left leg length differs from the left foot");
  if (legRight.dom().size() != asSize(root["feet"]["right"], "right foot"))
    fail("right leg length differs from the right foot");
  doc.shape = makeCospan(legLeft.dom(), legRight.dom(), apex, legLeft,
                         legRight);

  const json& deco = root["decoration"];
  if (!deco.is_object() || !deco.contains("kind") ||
      !deco["kind"].is_string())
    fail("decoration kind missing");
  const std::string kind = deco["kind"].get<std::string>();
  if (kind == "none") {
    requireKeys(deco, {"kind"}, "decoration");
    doc.kind = DecorationKind::None;
  } else if (kind == "graph") {
    doc.kind = DecorationKind::Graph;
    doc.graph = graphFromJson(deco, apex);
  } else if (kind == "linsub") {
    doc.kind = DecorationKind::LinSub;
    doc.linsub = linsubFromJson(deco, apex, lenient);
  } else {
    fail("unknown decoration kind \"" + kind + "\"");
  }
  return doc;
}

CircuitDocument readCircuitFile(const std::string& path, bool lenient) {
  return parseCircuit(readFileBytes(path), lenient);
}

std::string circuitBytes(const CircuitDocument& doc) {
  json root;
  root["apex"] = doc.shape.apex.size();
  root["feet"]["left"] = doc.shape.footLeft.size();
  root["feet"]["right"] = doc.shape.footRight.size();
  root["legs"]["left"] = doc.shape.legLeft.table();
  root["legs"]["right"] = doc.shape.legRight.table();
  json deco;
  switch (doc.kind) {
    case DecorationKind::None:
      deco["kind"] = "none";
      break;
    case DecorationKind::Graph: {
      deco["kind"] = "graph";
      json edges = json::array();
      for (const auto& e : doc.graph->edges())
        edges.push_back(json::array({e.src, e.tgt, ratToJson(e.label)}));
      deco["edges"] = std::move(edges);
      break;
    }
    case DecorationKind::LinSub: {
      deco["kind"] = "linsub";
      json rows = json::array();
      const Matrix& basis = doc.linsub->basis();
      for (std::size_t i = 0; i < basis.rows(); ++i) {
        json row = json::array();
        for (std::size_t j = 0; j < basis.cols(); ++j)
          row.push_back(ratToJson(basis.at(i, j)));
        rows.push_back(std::move(row));
      }
      deco["rows"] = std::move(rows);
      break;
    }
  }
  root["decoration"] = std::move(deco);
  return root.dump(2) + "\n";
}

std::string reportBytes(const std::vector<SuiteReport>& reports) {
  bool ok = true;
  json list = json::array();
  for (const SuiteReport& r : reports) {
    ok = ok && r.ok();
    json laws = json::array();
    for (const LawOutcome& l : r.laws) {
      json entry;
      entry["law"] = l.law;
      entry["passed"] = l.passed;
      if (!l.counterexample.empty()) {
        entry["counterexample"] = l.counterexample;
        entry["size"] = l.counterexampleSize;
      }
      laws.push_back(std::move(entry));
    }
    json suite;
    suite["suite"] = r.suite;
    suite["seed"] = r.seed;
    suite["cases"] = r.cases;
    suite["laws"] = std::move(laws);
    list.push_back(std::move(suite));
  }
  json root;
  root["ok"] = ok;
  root["reports"] = std::move(list);
  return root.dump(2) + "\n";
}

std::string isoAnswerBytes(const std::optional<FinFunction>& witness) {
  json root;
  root["isomorphic"] = witness.has_value();
  if (witness) root["witness"] = witness->table();
  return root.dump(2) + "\n";
}

std::string equivAnswerBytes(bool equivalent) {
  json root;
  root["equivalent"] = equivalent;
  return root.dump(2) + "\n";
}

std::string readFileBytes(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot read file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void writeFileBytes(const std::string& path, const std::string& bytes) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw std::invalid_argument("cannot write file: " + path);
  out << bytes;
  if (!out.flush()) throw std::invalid_argument("failed writing: " + path);
}

}  // namespace dcospan
