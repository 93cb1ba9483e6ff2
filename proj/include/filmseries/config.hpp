#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>

#include "filmseries/params.hpp"

namespace filmseries {

/// Settings shared by the command-line tool and the optional config file.
///
/// The config file is flat `key = value` lines; `#` starts a comment, blank
/// lines are ignored. Keys: gamma, epsilon, w1, w2, beta_s, n_roots, n_terms,
/// roots_source, out, format, tol. Numbers are decimal literals.
struct RunConfig {
  std::optional<double> gamma;
  std::optional<double> epsilon;
  std::optional<double> w1;
  std::optional<double> w2;
  std::optional<double> beta_s;
  std::optional<std::size_t> n_roots;
  std::optional<std::size_t> n_terms;
  /// "solver", "fixture" or a path to an eigenset CSV.
  std::optional<std::string> roots_source;
  std::optional<std::string> out;
  std::optional<std::string> format;
  std::optional<double> tol;
};

/// Throws ConfigError with the offending line number.
RunConfig parse_config(std::istream& in);

RunConfig load_config_file(const std::string& path);

/// Fields set in `overrides` replace those in `base`.
RunConfig merge(const RunConfig& base, const RunConfig& overrides);

/// Either gamma (with w1 = gamma, beta_s = 1) or w1 and beta_s; epsilon required.
/// Throws ConfigError for missing or contradictory constants.
ModelParams resolve_model(const RunConfig& cfg);

}  // namespace filmseries
