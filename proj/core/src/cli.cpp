#include "dcospan/cli.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <stdexcept>

#include "CLI11.hpp"

#include "dcospan/circuits.hpp"
#include "dcospan/decorated.hpp"
#include "dcospan/io.hpp"
#include "dcospan/suites.hpp"

namespace dcospan {
namespace {

void emit(const std::string& bytes, const std::string& outPath,
          std::ostream& out) {
  if (outPath.empty())
    out << bytes;
  else
    writeFileBytes(outPath, bytes);
}

CircuitDocument binaryOp(const CircuitDocument& a, const CircuitDocument& b,
                         bool composing) {
  if (a.kind != b.kind)
    throw std::invalid_argument("the two inputs carry different decoration "
                                "kinds");
  switch (a.kind) {
    case DecorationKind::None:
      return documentFromCospan(composing ? composeCospan(a.shape, b.shape)
                                          : tensorCospan(a.shape, b.shape));
    case DecorationKind::Graph: {
      const GraphFunctor f{};
      CircuitCospan d1 = asGraphDecorated(a);
      CircuitCospan d2 = asGraphDecorated(b);
      return documentFromGraphDecorated(composing
                                            ? composeDecorated(f, d1, d2)
                                            : tensorDecorated(f, d1, d2));
    }
    case DecorationKind::LinSub: {
      const LinSubFunctor f{};
      DecoratedCospan<LinSubFunctor> d1 = asLinSubDecorated(a);
      DecoratedCospan<LinSubFunctor> d2 = asLinSubDecorated(b);
      return documentFromLinSubDecorated(composing
                                             ? composeDecorated(f, d1, d2)
                                             : tensorDecorated(f, d1, d2));
    }
  }
  throw std::logic_error("unhandled decoration kind");
}

CircuitDocument daggerOp(const CircuitDocument& doc) {
  CircuitDocument out = doc;
  out.shape = opposite(doc.shape);
  return out;
}

CircuitDocument behaviorDocument(const CircuitCospan& d) {
  const FinSet x = d.shape.footLeft;
  const FinSet y = d.shape.footRight;
  FinSet boundary(x.size() + y.size());
  Cospan shape = makeCospan(x, y, boundary, inl(x, y), inr(x, y));
  return documentFromLinSubDecorated(
      makeDecorated(LinSubFunctor{}, std::move(shape), behavior(d)));
}

std::optional<FinFunction> isoWitness(const CircuitDocument& a,
                                      const CircuitDocument& b,
                                      std::uint64_t budget) {
  if (a.kind != b.kind)
    throw std::invalid_argument("the two inputs carry different decoration "
                                "kinds");
  switch (a.kind) {
    case DecorationKind::None: {
      std::optional<CospanIso> iso = isoSearch(a.shape, b.shape, budget);
      if (!iso) return std::nullopt;
      return std::move(iso->bijection);
    }
    case DecorationKind::Graph: {
      std::optional<DecoratedIso> iso = isoDecorated(
          GraphFunctor{}, asGraphDecorated(a), asGraphDecorated(b), budget);
      if (!iso) return std::nullopt;
      return std::move(iso->bijection);
    }
    case DecorationKind::LinSub: {
      std::optional<DecoratedIso> iso = isoDecorated(
          LinSubFunctor{}, asLinSubDecorated(a), asLinSubDecorated(b), budget);
      if (!iso) return std::nullopt;
      return std::move(iso->bijection);
    }
  }
  throw std::logic_error("unhandled decoration kind");
}

int dispatch(const std::vector<std::string>& args, std::ostream& out,
             std::ostream& err) {
  CLI::App app{"decorated-cospan toolbox"};
  app.require_subcommand(1);
  int exitCode = 0;

  std::string inA, inB, outPath;
  std::uint64_t budget = kDefaultIsoBudget;
  std::string functorName = "graph";
  SuiteOptions suiteOpts;
  std::string suiteName = "all";

  CLI::App* compose = app.add_subcommand("compose", "glue two circuits");
  compose->add_option("left", inA)->required();
  compose->add_option("right", inB)->required();
  compose->add_option("-o,--out", outPath);
  compose->callback([&] {
    emit(circuitBytes(binaryOp(readCircuitFile(inA), readCircuitFile(inB),
                               true)),
         outPath, out);
  });

  CLI::App* tensor = app.add_subcommand("tensor", "set two circuits side by "
                                                  "side");
  tensor->add_option("left", inA)->required();
  tensor->add_option("right", inB)->required();
  tensor->add_option("-o,--out", outPath);
  tensor->callback([&] {
    emit(circuitBytes(binaryOp(readCircuitFile(inA), readCircuitFile(inB),
                               false)),
         outPath, out);
  });

  CLI::App* dagger = app.add_subcommand("dagger", "reflect a circuit");
  dagger->add_option("input", inA)->required();
  dagger->add_option("-o,--out", outPath);
  dagger->callback([&] {
    emit(circuitBytes(daggerOp(readCircuitFile(inA))), outPath, out);
  });

  CLI::App* behaviorCmd =
      app.add_subcommand("behavior", "black-box a resistor network");
  behaviorCmd->add_option("input", inA)->required();
  behaviorCmd->add_option("-o,--out", outPath);
  behaviorCmd->callback([&] {
    emit(circuitBytes(behaviorDocument(asGraphDecorated(readCircuitFile(inA)))),
         outPath, out);
  });

  CLI::App* embed =
      app.add_subcommand("embed", "decorate a plain cospan trivially");
  embed->add_option("input", inA)->required();
  embed->add_option("--functor", functorName)
      ->check(CLI::IsMember({"graph", "linsub"}));
  embed->add_option("-o,--out", outPath);
  embed->callback([&] {
    CircuitDocument doc = readCircuitFile(inA);
    if (doc.kind != DecorationKind::None)
      throw std::invalid_argument("embed expects an undecorated cospan");
    if (functorName == "graph")
      emit(circuitBytes(documentFromGraphDecorated(
               embedCospan(GraphFunctor{}, doc.shape))),
           outPath, out);
    else
      emit(circuitBytes(documentFromLinSubDecorated(
               embedCospan(LinSubFunctor{}, doc.shape))),
           outPath, out);
  });

  CLI::App* res =
      app.add_subcommand("res", "replace a graph decoration by its "
                                "potential/current subspace");
  res->add_option("input", inA)->required();
  res->add_option("-o,--out", outPath);
  res->callback([&] {
    CircuitCospan d = asGraphDecorated(readCircuitFile(inA));
    emit(circuitBytes(documentFromLinSubDecorated(
             applyFunctor(ResTransformation{}, IdentityEndofunctor{}, d))),
         outPath, out);
  });

  CLI::App* iso = app.add_subcommand("iso", "search for an isomorphism");
  iso->add_option("left", inA)->required();
  iso->add_option("right", inB)->required();
  iso->add_option("--budget", budget);
  iso->add_option("-o,--out", outPath);
  iso->callback([&] {
    std::optional<FinFunction> witness =
        isoWitness(readCircuitFile(inA), readCircuitFile(inB), budget);
    emit(isoAnswerBytes(witness), outPath, out);
    if (!witness) exitCode = 1;
  });

  CLI::App* equiv =
      app.add_subcommand("equiv", "compare black-boxed behaviors");
  equiv->add_option("left", inA)->required();
  equiv->add_option("right", inB)->required();
  equiv->add_option("-o,--out", outPath);
  equiv->callback([&] {
    bool same = behaviorEquivalent(asGraphDecorated(readCircuitFile(inA)),
                                   asGraphDecorated(readCircuitFile(inB)));
    emit(equivAnswerBytes(same), outPath, out);
    if (!same) exitCode = 1;
  });

  CLI::App* check = app.add_subcommand("check", "run the law suites");
  check->add_option("--suite", suiteName);
  check->add_option("--seed", suiteOpts.seed);
  check->add_option("--cases", suiteOpts.cases);
  check->add_option("--budget", suiteOpts.isoBudget);
  check->add_option("-o,--out", outPath);
  check->callback([&] {
    std::vector<SuiteReport> reports;
    if (suiteName == "all")
      reports = runAllSuites(suiteOpts);
    else
      reports.push_back(runSuite(suiteName, suiteOpts));
    emit(reportBytes(reports), outPath, out);
    for (const SuiteReport& r : reports)
      if (!r.ok()) exitCode = 1;
  });

  CLI::App* canon =
      app.add_subcommand("canon", "rewrite a document in canonical form");
  canon->add_option("input", inA)->required();
  canon->add_option("-o,--out", outPath);
  canon->callback([&] {
    emit(circuitBytes(readCircuitFile(inA, /*lenient=*/true)), outPath, out);
  });

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(std::move(reversed));
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }
  return exitCode;
}

}  // namespace

int runCommand(const std::vector<std::string>& args, std::ostream& out,
               std::ostream& err) {
  try {
    return dispatch(args, out, err);
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace dcospan
