#include <string>

#include "dcospan/io.hpp"
#include "doctest.h"
#include "json.hpp"

using namespace dcospan;
using nlohmann::json;

namespace {

const std::string kFixtures = DCOSPAN_FIXTURE_DIR;

CircuitDocument graphDoc() {
  CircuitDocument doc;
  doc.shape = makeCospan(FinSet(1), FinSet(2), FinSet(3),
                         FinFunction(FinSet(1), FinSet(3), {2}),
                         FinFunction(FinSet(2), FinSet(3), {0, 2}));
  doc.kind = DecorationKind::Graph;
  doc.graph = LabeledGraph(FinSet(3), {{0, 1, Rat(1, 2)}, {2, 2, Rat(4)}});
  return doc;
}

CircuitDocument linsubDoc() {
  CircuitDocument doc;
  doc.shape = identityCospan(FinSet(1));
  doc.kind = DecorationKind::LinSub;
  doc.linsub = Subspace::fromGenerators(
      Matrix::fromRows({{Rat(1), Rat(-3, 7)}}, 2), 2);
  return doc;
}

CircuitDocument bareDoc() {
  CircuitDocument doc;
  doc.shape = makeCospan(FinSet(0), FinSet(1), FinSet(2),
                         FinFunction(FinSet(0), FinSet(2), {}),
                         FinFunction(FinSet(1), FinSet(2), {1}));
  return doc;
}

}  // namespace

TEST_SUITE("io") {

TEST_CASE("documents survive the byte round trip unchanged") {
  for (const CircuitDocument& doc : {graphDoc(), linsubDoc(), bareDoc()}) {
    const std::string bytes = circuitBytes(doc);
    const CircuitDocument back = parseCircuit(bytes);
    CHECK(back.shape == doc.shape);
    CHECK(back.kind == doc.kind);
    CHECK(back.graph.has_value() == doc.graph.has_value());
    if (doc.graph) CHECK(graphEqual(*back.graph, *doc.graph));
    if (doc.linsub) CHECK(subspaceEqual(*back.linsub, *doc.linsub));
    CHECK(circuitBytes(back) == bytes);
    CHECK(bytes.back() == '\n');
  }
}

TEST_CASE("equal documents print identical bytes regardless of input order") {
  CircuitDocument a = graphDoc();
  CircuitDocument b = graphDoc();
  b.graph = LabeledGraph(FinSet(3), {{2, 2, Rat(4)}, {0, 1, Rat(1, 2)}});
  CHECK(circuitBytes(a) == circuitBytes(b));
}

TEST_CASE("the checked-in fixtures parse to the worked example") {
  const CircuitDocument left =
      readCircuitFile(kFixtures + "/intro_left.json");
  CHECK(left.kind == DecorationKind::Graph);
  CHECK(left.shape.apex == FinSet(3));
  REQUIRE(left.graph.has_value());
  CHECK(left.graph->edges().size() == 4);
  const CircuitDocument composite =
      readCircuitFile(kFixtures + "/intro_composite.json");
  CHECK(composite.shape.apex == FinSet(4));
  REQUIRE(composite.graph.has_value());
  CHECK(composite.graph->edges().size() == 6);
}

TEST_CASE("strict parsing rejects malformed documents") {
  const auto rejects = [](const std::string& bytes) {
    CHECK_THROWS_AS(parseCircuit(bytes), std::invalid_argument);
  };
  rejects("{");
  rejects("[]");
  const std::string good = circuitBytes(graphDoc());

  json doc = json::parse(good);
  doc["extra"] = 1;
  rejects(doc.dump());

  doc = json::parse(good);
  doc.erase("apex");
  rejects(doc.dump());

  doc = json::parse(good);
  doc["legs"]["right"][0] = 3;  // outside the apex
  rejects(doc.dump());

  doc = json::parse(good);
  doc["legs"]["right"][0] = -1;
  rejects(doc.dump());

  doc = json::parse(good);
  doc["legs"]["left"].push_back(0);  // longer than the foot
  rejects(doc.dump());

  doc = json::parse(good);
  doc["apex"] = 70000;  // over the 2^16 cap
  rejects(doc.dump());

  doc = json::parse(good);
  doc["feet"].erase("right");
  rejects(doc.dump());

  doc = json::parse(good);
  doc["decoration"]["kind"] = "nonsense";
  rejects(doc.dump());

  doc = json::parse(good);
  doc["decoration"]["edges"][0][2] = "0";  // label must be positive
  rejects(doc.dump());

  doc = json::parse(good);
  doc["decoration"]["edges"][0][2] = "-1/2";
  rejects(doc.dump());

  doc = json::parse(good);
  doc["decoration"]["edges"][0][2] = 2;  // label must be a string
  rejects(doc.dump());

  doc = json::parse(good);
  doc["decoration"]["edges"][0][2] = "1/0";
  rejects(doc.dump());

  doc = json::parse(good);
  doc["decoration"]["edges"][0] = {0, 1};  // not [src, tgt, label]
  rejects(doc.dump());

  doc = json::parse(good);
  doc["decoration"]["edges"][0][0] = 5;  // endpoint outside the apex
  rejects(doc.dump());

  doc = json::parse(good);
  doc["decoration"] = {{"kind", "none"}, {"edges", json::array()}};
  rejects(doc.dump());

  doc = json::parse(circuitBytes(linsubDoc()));
  doc["decoration"]["rows"][0].push_back("0");  // wrong width
  rejects(doc.dump());
}

TEST_CASE("lenient parsing canonicalizes what strict parsing refuses") {
  json doc = json::parse(circuitBytes(linsubDoc()));
  // Scale the only row by 2: same subspace, no longer in reduced form.
  doc["decoration"]["rows"][0] = {"2", "-6/7"};
  CHECK_THROWS_AS(parseCircuit(doc.dump()), std::invalid_argument);
  const CircuitDocument lenient = parseCircuit(doc.dump(), true);
  REQUIRE(lenient.linsub.has_value());
  CHECK(subspaceEqual(*lenient.linsub, *linsubDoc().linsub));
  CHECK(circuitBytes(lenient) == circuitBytes(linsubDoc()));
}

TEST_CASE("conversion guards demand the decoration they name") {
  CHECK_THROWS_AS(asGraphDecorated(bareDoc()), std::invalid_argument);
  CHECK_THROWS_AS(asLinSubDecorated(graphDoc()), std::invalid_argument);
  const CircuitCospan d = asGraphDecorated(graphDoc());
  const CircuitDocument doc = documentFromGraphDecorated(d);
  CHECK(circuitBytes(doc) == circuitBytes(graphDoc()));
}

TEST_CASE("law reports serialize with stable shape") {
  SuiteReport ok{"alpha", 42, 3, {}};
  ok.laws.push_back({"assoc", true, "", 0});
  SuiteReport bad{"beta", 7, 2, {}};
  bad.laws.push_back({"unit", false, "f=0->1 []", 1});
  const json parsed = json::parse(reportBytes({ok, bad}));
  CHECK(parsed["ok"] == false);
  REQUIRE(parsed["reports"].size() == 2);
  CHECK(parsed["reports"][0]["suite"] == "alpha");
  CHECK(parsed["reports"][0]["seed"] == 42);
  CHECK(parsed["reports"][0]["cases"] == 3);
  CHECK(parsed["reports"][0]["laws"][0] ==
        json({{"law", "assoc"}, {"passed", true}}));
  CHECK(parsed["reports"][1]["laws"][0] ==
        json({{"counterexample", "f=0->1 []"},
              {"law", "unit"},
              {"passed", false},
              {"size", 1}}));
  const json allGood = json::parse(reportBytes({ok}));
  CHECK(allGood["ok"] == true);
}

TEST_CASE("query answers serialize to their tiny documents") {
  const json yes = json::parse(
      isoAnswerBytes(FinFunction(FinSet(2), FinSet(2), {1, 0})));
  CHECK(yes == json({{"isomorphic", true}, {"witness", {1, 0}}}));
  const json no = json::parse(isoAnswerBytes(std::nullopt));
  CHECK(no == json({{"isomorphic", false}}));
  CHECK(json::parse(equivAnswerBytes(true)) ==
        json({{"equivalent", true}}));
}

TEST_CASE("file helpers report unusable paths") {
  CHECK_THROWS_AS(readFileBytes(kFixtures + "/no_such_file.json"),
                  std::invalid_argument);
  CHECK_THROWS_AS(writeFileBytes("/nonexistent-dir/out.json", "x"),
                  std::invalid_argument);
}

}  // TEST_SUITE("io")
