#include "inls/io.hpp"

#include <charconv>
#include <cstdint>
#include <fstream>
#include <sstream>

namespace inls {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::string& section,
                    std::initializer_list<const char*> allowed) {
  for (auto it = obj.begin(); it != obj.end(); ++it) {
    bool ok = false;
    for (const char* key : allowed) {
      if (it.key() == key) {
        ok = true;
        break;
      }
    }
    if (!ok) {
      throw ConfigError("config: unknown key \"" + it.key() + "\" in section " +
                        section);
    }
  }
}

template <typename T>
T get_required(const json& obj, const std::string& section, const char* key) {
  if (!obj.contains(key)) {
    throw ConfigError("config: missing key \"" + std::string(key) +
                      "\" in section " + section);
  }
  try {
    return obj.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError("config: bad value for key \"" + std::string(key) +
                      "\" in section " + section);
  }
}

template <typename T>
T get_optional(const json& obj, const std::string& section, const char* key,
               T fallback) {
  if (!obj.contains(key)) return fallback;
  return get_required<T>(obj, section, key);
}

KFamilyTag k_family_from_name(const std::string& name) {
  if (name == "none") return KFamilyTag::none;
  if (name == "K1_pure") return KFamilyTag::K1_pure;
  if (name == "K2_pure") return KFamilyTag::K2_pure;
  if (name == "K3_decay") return KFamilyTag::K3_decay;
  if (name == "K4_decay") return KFamilyTag::K4_decay;
  throw ConfigError("config: unknown K family \"" + name + "\"");
}

std::string k_family_name(KFamilyTag tag) {
  switch (tag) {
    case KFamilyTag::none: return "none";
    case KFamilyTag::K1_pure: return "K1_pure";
    case KFamilyTag::K2_pure: return "K2_pure";
    case KFamilyTag::K3_decay: return "K3_decay";
    case KFamilyTag::K4_decay: return "K4_decay";
  }
  return "none";
}

PotentialTag potential_from_name(const std::string& name) {
  if (name == "zero") return PotentialTag::zero;
  if (name == "inverse_power") return PotentialTag::inverse_power;
  if (name == "yukawa") return PotentialTag::yukawa;
  throw ConfigError("config: unknown potential family \"" + name + "\"");
}

std::string potential_name(PotentialTag tag) {
  switch (tag) {
    case PotentialTag::zero: return "zero";
    case PotentialTag::inverse_power: return "inverse_power";
    case PotentialTag::yukawa: return "yukawa";
  }
  return "zero";
}

InitialFamily initial_from_name(const std::string& name) {
  if (name == "odd_gaussian_pair") return InitialFamily::odd_gaussian_pair;
  if (name == "odd_xgaussian") return InitialFamily::odd_xgaussian;
  if (name == "gaussian") return InitialFamily::gaussian;
  throw ConfigError("config: unknown initial family \"" + name + "\"");
}

std::string initial_name(InitialFamily fam) {
  switch (fam) {
    case InitialFamily::odd_gaussian_pair: return "odd_gaussian_pair";
    case InitialFamily::odd_xgaussian: return "odd_xgaussian";
    case InitialFamily::gaussian: return "gaussian";
  }
  return "odd_gaussian_pair";
}

}  // namespace

std::string theorem_name(TheoremTag tag) {
  switch (tag) {
    case TheoremTag::thm1_case1: return "thm1_case1";
    case TheoremTag::thm1_case2: return "thm1_case2";
    case TheoremTag::thm1_case3: return "thm1_case3";
    case TheoremTag::thm_odd_case1: return "thm_odd_case1";
    case TheoremTag::thm_odd_case2: return "thm_odd_case2";
    case TheoremTag::thm_potential_1: return "thm_potential_1";
    case TheoremTag::thm_potential_2: return "thm_potential_2";
  }
  return "thm_odd_case1";
}

TheoremTag theorem_from_name(const std::string& name) {
  if (name == "thm1_case1") return TheoremTag::thm1_case1;
  if (name == "thm1_case2") return TheoremTag::thm1_case2;
  if (name == "thm1_case3") return TheoremTag::thm1_case3;
  if (name == "thm_odd_case1") return TheoremTag::thm_odd_case1;
  if (name == "thm_odd_case2") return TheoremTag::thm_odd_case2;
  if (name == "thm_potential_1") return TheoremTag::thm_potential_1;
  if (name == "thm_potential_2") return TheoremTag::thm_potential_2;
  throw ConfigError("config: unknown theorem \"" + name + "\"");
}

std::tuple<ScenarioConfig, SolverConfig, GridSpec> parse_config_json(
    const json& root) {
  if (!root.is_object()) throw ConfigError("config: top level must be an object");
  reject_unknown(root, "top level", {"grid", "model", "solver", "scenario"});
  for (const char* section : {"grid", "model", "solver", "scenario"}) {
    if (!root.contains(section)) {
      throw ConfigError("config: missing section \"" + std::string(section) +
                        "\"");
    }
  }

  const json& g = root.at("grid");
  reject_unknown(g, "grid", {"L", "N"});
  const GridSpec grid = make_grid(get_required<Real>(g, "grid", "L"),
                                  get_required<int>(g, "grid", "N"));

  const json& m = root.at("model");
  reject_unknown(m, "model",
                 {"sigma", "b", "mu", "K", "s", "eps_K", "V", "V_m", "V_n",
                  "V_variant"});
  ModelSpec model;
  model.sigma = get_required<Real>(m, "model", "sigma");
  model.b = get_required<Real>(m, "model", "b");
  model.mu = get_optional<Real>(m, "model", "mu", 0.0);
  model.K_family.tag =
      k_family_from_name(get_required<std::string>(m, "model", "K"));
  model.K_family.sign = get_optional<int>(m, "model", "s", 1);
  model.K_family.epsilon_K = get_optional<Real>(m, "model", "eps_K", 0.0);
  model.V_family.tag = potential_from_name(
      get_optional<std::string>(m, "model", "V", "zero"));
  model.V_family.m = get_optional<Real>(m, "model", "V_m", 0.0);
  model.V_family.n = get_optional<Real>(m, "model", "V_n", 0.0);
  const std::string variant =
      get_optional<std::string>(m, "model", "V_variant", "cutoff");
  if (variant == "cutoff") {
    model.V_family.variant = V0Variant::cutoff;
  } else if (variant == "bounded") {
    model.V_family.variant = V0Variant::bounded;
  } else {
    throw ConfigError("config: V_variant must be \"cutoff\" or \"bounded\"");
  }
  model.validate();
  if (model.mu > 0.0 && model.V_family.tag == PotentialTag::zero) {
    throw ConfigError("config: mu > 0 requires a potential family");
  }

  const json& s = root.at("solver");
  reject_unknown(s, "solver",
                 {"dt", "T", "observer_stride", "enforce_odd",
                  "tail_abort_threshold", "snapshot_stride"});
  SolverConfig solver;
  solver.dt = get_required<Real>(s, "solver", "dt");
  solver.T_final = get_required<Real>(s, "solver", "T");
  solver.observer_stride = get_optional<int>(s, "solver", "observer_stride", 10);
  solver.enforce_odd = get_optional<bool>(s, "solver", "enforce_odd", false);
  solver.tail_abort_threshold =
      get_optional<Real>(s, "solver", "tail_abort_threshold", 1e-8);
  solver.snapshot_stride = get_optional<int>(s, "solver", "snapshot_stride", 1);
  solver.validate(grid);

  const json& sc = root.at("scenario");
  reject_unknown(sc, "scenario",
                 {"theorem", "initial", "epsilon", "interval", "horizons",
                  "radii"});
  ScenarioConfig scenario;
  scenario.model = model;
  scenario.theorem_tag =
      theorem_from_name(get_required<std::string>(sc, "scenario", "theorem"));
  if (sc.contains("initial")) {
    const json& init = sc.at("initial");
    reject_unknown(init, "scenario.initial", {"family", "center", "width"});
    scenario.initial_family =
        initial_from_name(get_required<std::string>(init, "initial", "family"));
    scenario.initial_center = get_optional<Real>(init, "initial", "center", 1.0);
    scenario.initial_width = get_optional<Real>(init, "initial", "width", 1.0);
  }
  if (sc.contains("epsilon")) {
    scenario.epsilon_small = get_required<Real>(sc, "scenario", "epsilon");
  }
  if (sc.contains("interval")) {
    const auto iv = get_required<std::vector<Real>>(sc, "scenario", "interval");
    if (iv.size() != 2) throw ConfigError("config: interval must be [a, b]");
    scenario.interval_a = iv[0];
    scenario.interval_b = iv[1];
  }
  scenario.horizons =
      get_optional<std::vector<Real>>(sc, "scenario", "horizons", {});
  scenario.radii = get_optional<std::vector<Real>>(sc, "scenario", "radii", {});
  scenario.validate(grid);
  return {scenario, solver, grid};
}

std::tuple<ScenarioConfig, SolverConfig, GridSpec> parse_config(
    const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open " + path);
  json root;
  try {
    in >> root;
  } catch (const json::exception& err) {
    throw ConfigError("config: " + path + ": " + err.what());
  }
  return parse_config_json(root);
}

json config_to_json(const ScenarioConfig& scenario, const SolverConfig& solver,
                    const GridSpec& grid) {
  json root;
  root["grid"] = {{"L", grid.half_length}, {"N", grid.point_count}};
  json m = {{"sigma", scenario.model.sigma},
            {"b", scenario.model.b},
            {"mu", scenario.model.mu},
            {"K", k_family_name(scenario.model.K_family.tag)},
            {"s", scenario.model.K_family.sign},
            {"eps_K", scenario.model.K_family.epsilon_K}};
  if (scenario.model.V_family.tag != PotentialTag::zero) {
    m["V"] = potential_name(scenario.model.V_family.tag);
    m["V_m"] = scenario.model.V_family.m;
    m["V_n"] = scenario.model.V_family.n;
    m["V_variant"] = scenario.model.V_family.variant == V0Variant::cutoff
                         ? "cutoff"
                         : "bounded";
  }
  root["model"] = m;
  root["solver"] = {{"dt", solver.dt},
                    {"T", solver.T_final},
                    {"observer_stride", solver.observer_stride},
                    {"enforce_odd", solver.enforce_odd},
                    {"tail_abort_threshold", solver.tail_abort_threshold},
                    {"snapshot_stride", solver.snapshot_stride}};
  json sc = {{"theorem", theorem_name(scenario.theorem_tag)},
             {"initial",
              {{"family", initial_name(scenario.initial_family)},
               {"center", scenario.initial_center},
               {"width", scenario.initial_width}}},
             {"interval", {scenario.interval_a, scenario.interval_b}}};
  if (scenario.epsilon_small) sc["epsilon"] = *scenario.epsilon_small;
  if (!scenario.horizons.empty()) sc["horizons"] = scenario.horizons;
  if (!scenario.radii.empty()) sc["radii"] = scenario.radii;
  root["scenario"] = sc;
  return root;
}

std::string format_real(Real value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

std::string timeseries_string(const std::vector<DiagnosticsRecord>& records) {
  std::ostringstream out;
  out << "t,mass,energy,I,rhs_sum,rhs_kinetic,rhs_phi3,rhs_K1,rhs_K2,rhs_V,"
         "h1_alpha,l2_local,linf_local,tail_mass\n";
  for (const auto& r : records) {
    out << format_real(r.t) << ',' << format_real(r.mass) << ','
        << format_real(r.energy) << ',' << format_real(r.I) << ','
        << format_real(r.rhs_sum) << ',' << format_real(r.rhs_kinetic) << ','
        << format_real(r.rhs_phi3) << ',' << format_real(r.rhs_K1) << ','
        << format_real(r.rhs_K2) << ',' << format_real(r.rhs_V) << ','
        << format_real(r.h1_alpha) << ',' << format_real(r.l2_local) << ','
        << format_real(r.linf_local) << ',' << format_real(r.tail_mass_fraction)
        << '\n';
  }
  return out.str();
}

void write_timeseries(const std::vector<DiagnosticsRecord>& records,
                      const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_timeseries: cannot open " + path);
  out << timeseries_string(records);
  if (!out) throw Error("write_timeseries: write failed for " + path);
}

std::string hash_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("hash_file: cannot open " + path);
  std::uint64_t hash = 0xcbf29ce484222325ULL;
  char c;
  while (in.get(c)) {
    hash ^= static_cast<unsigned char>(c);
    hash *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(hash));
  return buf;
}

json RunManifest::to_json() const {
  json files = json::array();
  for (const auto& [path, hash] : outputs) {
    files.push_back({{"path", path}, {"fnv1a", hash}});
  }
  return {{"config", config},
          {"code_version", code_version},
          {"wall_seconds", wall_seconds},
          {"outputs", files},
          {"validity",
           {{"tail_breach", tail_breach}, {"overflow", overflow}}}};
}

void write_manifest(const RunManifest& manifest, const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("write_manifest: cannot open " + path);
  out << manifest.to_json().dump(2) << '\n';
}

}  // namespace inls
