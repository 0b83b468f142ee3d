#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dcospan/cospan.hpp"
#include "dcospan/decoration.hpp"

namespace dcospan {

struct SuiteOptions {
  std::uint64_t seed = 42;
  int cases = 200;
  std::uint64_t isoBudget = kDefaultIsoBudget;
};

// Every runnable suite, in the order runAllSuites executes them.
std::vector<std::string> suiteNames();

// Throws std::invalid_argument for an unknown name.
SuiteReport runSuite(const std::string& name, const SuiteOptions& opts);

std::vector<SuiteReport> runAllSuites(const SuiteOptions& opts);

}  // namespace dcospan
