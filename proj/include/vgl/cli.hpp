#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end: one command per invocation, one JSON report.
 *
 * Exit codes: 0 affirmative/pass, 1 negative/inconclusive, 2 usage or error.
 */

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "vgl/json_io.hpp"

namespace vgl::cli {

inline constexpr int kExitAffirmative = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitError = 2;

struct RunConfig {
  /// compare, spectral, certify, bench-lemmas or classify-type.
  std::string command;
  /// catalytic, asymptotic or asymptotic-uk (certify only).
  std::string certify_kind;
  /// Inline text, inline JSON, or "@path" naming a file with either form.
  std::string p_source;
  std::string q_source;
  std::optional<std::string> catalyst_source;

  std::uint64_t seed = 42;
  SamplingConfig sampling;
  bool strict = false;
  EvaluationMode mode = EvaluationMode::Exact;

  std::optional<std::uint32_t> max_n;  ///< defaults: 12 (catalytic), 20 (asymptotic)
  std::uint32_t max_k = 6;
  std::uint32_t window = 3;
  Rational eps = 0;
  bool allow_sampled_spectral = false;

  std::string model;
  long samples = 10000;  ///< lemma samples or classification samples

  std::optional<std::string> output;
};

struct RunResult {
  int exit_code = kExitError;
  Json report;
};

/// Reads a polynomial source; `dim` 0 infers the dimension from the source.
SparsePoly load_poly(const std::string& source, std::size_t dim = 0);
/// Number of variables a source mentions (at least 1).
std::size_t source_dim(const std::string& source);

/// Executes one command. Errors are reported in the JSON with exit code 2.
RunResult run(const RunConfig& config);

/**
 * Parses argv-style arguments (without the program name), applies VGL_SEED,
 * runs the command and writes the report to --output or `out`.
 */
int main_entry(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace vgl::cli
