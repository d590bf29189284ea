#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "graphoid/json_io.hpp"

namespace graphoid {

struct SuiteConfig {
  std::uint64_t seed = 0;
  // 0 selects the suite's default.
  std::size_t n_vars = 0;
  std::size_t samples = 0;
};

struct SuiteFailure {
  std::string case_id;
  io::Json inputs;
  std::string expected;
  std::string actual;
  io::Json witness;
};

// Everything in a report is a function of the suite name and configuration,
// so equal inputs produce byte-identical JSON.
struct SuiteReport {
  std::string suite;
  std::uint64_t seed = 0;
  std::size_t n_vars = 0;
  std::size_t samples = 0;
  std::size_t cases = 0;
  std::vector<SuiteFailure> failures;

  bool passed() const { return failures.empty(); }
  io::Json to_json() const;
};

// axioms, dsep-soundness, components, relations, clean, pt-bin,
// gaussian-props, transitivity, simnet-equiv.
const std::vector<std::string_view>& suite_names();
bool is_suite(std::string_view name);

// Throws std::invalid_argument for an unknown suite or an out-of-range size.
SuiteReport run_suite(std::string_view name, const SuiteConfig& config);

}  // namespace graphoid
