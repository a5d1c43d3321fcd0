#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "inls/experiments.hpp"

#include <nlohmann/json.hpp>

namespace inls {

// Strict JSON run configuration: sections "grid", "model", "solver",
// "scenario"; unknown keys are rejected so parameter typos cannot pass
// silently.
std::tuple<ScenarioConfig, SolverConfig, GridSpec> parse_config(
    const std::string& path);
std::tuple<ScenarioConfig, SolverConfig, GridSpec> parse_config_json(
    const nlohmann::json& root);

nlohmann::json config_to_json(const ScenarioConfig& scenario,
                              const SolverConfig& solver,
                              const GridSpec& grid);

// CSV with the fixed header
//   t,mass,energy,I,rhs_sum,rhs_kinetic,rhs_phi3,rhs_K1,rhs_K2,rhs_V,
//   h1_alpha,l2_local,linf_local,tail_mass
// and shortest round-trip decimals; byte-identical for identical inputs.
void write_timeseries(const std::vector<DiagnosticsRecord>& records,
                      const std::string& path);
std::string timeseries_string(const std::vector<DiagnosticsRecord>& records);

// Shortest round-trip decimal rendering of a double.
std::string format_real(Real value);

struct RunManifest {
  nlohmann::json config;
  std::string code_version;
  Real wall_seconds = 0.0;
  std::vector<std::pair<std::string, std::string>> outputs;  // path, hash
  bool tail_breach = false;
  bool overflow = false;

  nlohmann::json to_json() const;
};

// FNV-1a content hash of a file, as a hex string.
std::string hash_file(const std::string& path);

void write_manifest(const RunManifest& manifest, const std::string& path);

std::string theorem_name(TheoremTag tag);
TheoremTag theorem_from_name(const std::string& name);

}  // namespace inls
