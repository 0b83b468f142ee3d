#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dcospan/circuits.hpp"
#include "dcospan/cospan.hpp"
#include "dcospan/decorated.hpp"
#include "dcospan/decoration.hpp"
#include "dcospan/graph.hpp"
#include "dcospan/subspace.hpp"

namespace dcospan {

// A cospan plus an optional decoration, as read from / written to circuit
// files. Kind "none" is a bare cospan; "graph" a resistor network; "linsub"
// a linear-relation network.
enum class DecorationKind { None, Graph, LinSub };

struct CircuitDocument {
  Cospan shape;
  DecorationKind kind = DecorationKind::None;
  std::optional<LabeledGraph> graph;
  std::optional<Subspace> linsub;
};

CircuitDocument documentFromCospan(const Cospan& c);
CircuitDocument documentFromGraphDecorated(const CircuitCospan& d);
CircuitDocument documentFromLinSubDecorated(
    const DecoratedCospan<LinSubFunctor>& d);

// Throw std::invalid_argument unless the document carries that decoration.
CircuitCospan asGraphDecorated(const CircuitDocument& doc);
DecoratedCospan<LinSubFunctor> asLinSubDecorated(const CircuitDocument& doc);

// Strict parsing rejects out-of-range indices, nonpositive labels, unknown
// keys, and subspace rows that are not already in reduced form. Lenient
// parsing (the `canon` verb) instead accepts any generating rows and
// canonicalizes. Both throw std::invalid_argument with a reason.
CircuitDocument parseCircuit(const std::string& bytes, bool lenient = false);
CircuitDocument readCircuitFile(const std::string& path,
                                bool lenient = false);

// Canonical bytes: sorted keys, two-space indent, "p/q" rationals, sorted
// edges, RREF rows, trailing newline. Equal documents give equal bytes.
std::string circuitBytes(const CircuitDocument& doc);

std::string reportBytes(const std::vector<SuiteReport>& reports);
std::string isoAnswerBytes(const std::optional<FinFunction>& witness);
std::string equivAnswerBytes(bool equivalent);

std::string readFileBytes(const std::string& path);
void writeFileBytes(const std::string& path, const std::string& bytes);

}  // namespace dcospan
