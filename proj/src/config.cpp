#include "filmseries/config.hpp"

#include <fstream>
#include <istream>
#include <string>
#include <string_view>

#include "filmseries/csv.hpp"
#include "filmseries/errors.hpp"

namespace filmseries {

namespace {

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

std::size_t parse_count(std::string_view text) {
  const double v = parse_real(text);
  if (!(v >= 1.0) || v != static_cast<double>(static_cast<std::size_t>(v))) {
    throw std::invalid_argument("expected a positive integer, got '" + std::string(text) + "'");
  }
  return static_cast<std::size_t>(v);
}

}  // namespace

RunConfig parse_config(std::istream& in) {
  RunConfig cfg;
  std::string raw;
  std::size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string_view line = raw;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string_view::npos) {
      throw ConfigError("config line " + std::to_string(line_no) + ": expected key = value");
    }
    const std::string key(trim(line.substr(0, eq)));
    const std::string_view value = trim(line.substr(eq + 1));
    if (value.empty()) {
      throw ConfigError("config line " + std::to_string(line_no) + ": empty value for " + key);
    }
    try {
      if (key == "gamma") cfg.gamma = parse_real(value);
      else if (key == "epsilon") cfg.epsilon = parse_real(value);
      else if (key == "w1") cfg.w1 = parse_real(value);
      else if (key == "w2") cfg.w2 = parse_real(value);
      else if (key == "beta_s") cfg.beta_s = parse_real(value);
      else if (key == "n_roots") cfg.n_roots = parse_count(value);
      else if (key == "n_terms") cfg.n_terms = parse_count(value);
      else if (key == "roots_source") cfg.roots_source = std::string(value);
      else if (key == "out") cfg.out = std::string(value);
      else if (key == "format") cfg.format = std::string(value);
      else if (key == "tol") cfg.tol = parse_real(value);
      else throw ConfigError("config line " + std::to_string(line_no) + ": unknown key '" + key + "'");
    } catch (const std::invalid_argument& e) {
      throw ConfigError("config line " + std::to_string(line_no) + ": " + e.what());
    }
  }
  return cfg;
}

RunConfig load_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  return parse_config(in);
}

RunConfig merge(const RunConfig& base, const RunConfig& overrides) {
  RunConfig out = base;
  auto take = [](auto& dst, const auto& src) {
    if (src) dst = src;
  };
  take(out.gamma, overrides.gamma);
  take(out.epsilon, overrides.epsilon);
  take(out.w1, overrides.w1);
  take(out.w2, overrides.w2);
  take(out.beta_s, overrides.beta_s);
  take(out.n_roots, overrides.n_roots);
  take(out.n_terms, overrides.n_terms);
  take(out.roots_source, overrides.roots_source);
  take(out.out, overrides.out);
  take(out.format, overrides.format);
  take(out.tol, overrides.tol);
  return out;
}

ModelParams resolve_model(const RunConfig& cfg) {
  if (!cfg.epsilon) {
    throw ConfigError("epsilon is required");
  }
  ModelParams params;
  params.epsilon = *cfg.epsilon;
  params.w2 = cfg.w2.value_or(1.0);
  if (cfg.gamma) {
    if (cfg.w1 || cfg.beta_s) {
      const double w1 = cfg.w1.value_or(*cfg.gamma);
      const double beta = cfg.beta_s.value_or(1.0);
      if (w1 * beta != *cfg.gamma) {
        throw ConfigError("gamma contradicts w1*beta_s; give either gamma or w1 and beta_s");
      }
      params.w1 = w1;
      params.beta_s = beta;
    } else {
      params.w1 = *cfg.gamma;
      params.beta_s = 1.0;
    }
  } else {
    if (!cfg.w1 || !cfg.beta_s) {
      throw ConfigError("either gamma or both w1 and beta_s are required");
    }
    params.w1 = *cfg.w1;
    params.beta_s = *cfg.beta_s;
  }
  return params;
}

}  // namespace filmseries
