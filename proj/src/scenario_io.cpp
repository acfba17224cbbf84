#include <fstream>
#include <sstream>

#include <json.hpp>

#include "eedi/domain.hpp"

namespace eedi
{
using ordered_json = nlohmann::ordered_json;

std::string to_string(ControllerKind kind)
{
  switch (kind)
  {
    case ControllerKind::Eedi: return "EEDI";
    case ControllerKind::Iga: return "IGA";
    case ControllerKind::Im: return "IM";
    case ControllerKind::Geer: return "GEER";
    case ControllerKind::Rw: return "RW";
  }
  throw ConfigError("unknown controller kind");
}

std::string to_string(DynamicsKind kind)
{
  switch (kind)
  {
    case DynamicsKind::Integrator: return "Integrator";
    case DynamicsKind::UnicycleKin: return "UnicycleKin";
    case DynamicsKind::UnicycleDyn: return "UnicycleDyn";
  }
  throw ConfigError("unknown dynamics kind");
}

std::string to_string(SearchMode mode)
{
  return mode == SearchMode::SingleTarget ? "single" : "sequential";
}

ControllerKind controller_from_string(const std::string& name)
{
  if (name == "EEDI") return ControllerKind::Eedi;
  if (name == "IGA") return ControllerKind::Iga;
  if (name == "IM") return ControllerKind::Im;
  if (name == "GEER") return ControllerKind::Geer;
  if (name == "RW") return ControllerKind::Rw;
  throw ConfigError("unknown controller: " + name);
}

DynamicsKind dynamics_from_string(const std::string& name)
{
  if (name == "Integrator") return DynamicsKind::Integrator;
  if (name == "UnicycleKin") return DynamicsKind::UnicycleKin;
  if (name == "UnicycleDyn") return DynamicsKind::UnicycleDyn;
  throw ConfigError("unknown dynamics model: " + name);
}

SearchMode search_mode_from_string(const std::string& name)
{
  if (name == "single") return SearchMode::SingleTarget;
  if (name == "sequential") return SearchMode::Sequential;
  throw ConfigError("unknown search_mode: " + name);
}

namespace
{
ordered_json target_to_json(const TargetParams& t)
{
  return ordered_json{{"location", t.location},
                      {"radius", t.radius},
                      {"plane_offset", t.plane_offset}};
}

TargetParams target_from_json(const ordered_json& j)
{
  TargetParams t;
  t.location = j.at("location").get<std::vector<double>>();
  t.radius = j.at("radius").get<double>();
  t.plane_offset = j.at("plane_offset").get<double>();
  return t;
}
}  // namespace

std::string serialize_scenario(const ScenarioConfig& c)
{
  ordered_json j;
  j["domain"] = {{"lengths", c.domain.lengths},
                 {"grid_resolution", c.domain.grid_resolution}};
  j["true_targets"] = ordered_json::array();
  for (const auto& t : c.true_targets)
  {
    j["true_targets"].push_back(target_to_json(t));
  }
  j["distractors"] = ordered_json::array();
  for (const auto& t : c.distractors)
  {
    j["distractors"].push_back(target_to_json(t));
  }
  j["noise_sigma"] = c.noise_sigma;
  j["horizon_T"] = c.horizon_T;
  j["dt"] = c.dt;
  j["gamma"] = c.gamma;
  j["R"] = c.R;
  j["rng_seed"] = c.rng_seed;
  j["controller"] = to_string(c.controller);
  j["dynamics"] = to_string(c.dynamics);
  j["max_runtime"] = c.max_runtime;
  j["success_tolerance"] = c.success_tolerance;
  j["termination_std"] = c.termination_std;
  j["search_mode"] = to_string(c.search_mode);
  j["basis_K"] = c.basis_K;
  j["estimate_radius"] = c.estimate_radius;
  j["radius_band"] = c.radius_band;
  j["belief_resolution"] = c.belief_resolution;
  j["measurement_rate_hz"] = c.measurement_rate_hz;
  j["control_bound"] = c.control_bound;
  j["baseline_speed"] = c.baseline_speed;
  j["barrier_weight"] = c.barrier_weight;
  j["optimizer"] = {{"max_iters", c.optimizer.max_iters},
                    {"descent_tolerance", c.optimizer.descent_tolerance},
                    {"armijo_c1", c.optimizer.armijo_c1},
                    {"armijo_shrink", c.optimizer.armijo_shrink},
                    {"initial_forward_control", c.optimizer.initial_forward_control}};
  j["geer_candidates"] = c.geer_candidates;
  j["geer_belief_samples"] = c.geer_belief_samples;
  j["boundary_band_horizons"] = c.boundary_band_horizons;
  j["initial_state"] = c.initial_state;
  j["amplitude"] = c.amplitude;
  j["calibration_radius"] = c.calibration_radius;
  j["filter_target"] = {{"radius", c.filter_target.radius},
                        {"lateral_offset", c.filter_target.lateral_offset},
                        {"plane_offset", c.filter_target.plane_offset}};
  j["randomize"] = {{"targets", c.randomize.targets},
                    {"target_count", c.randomize.target_count},
                    {"distractor_line", c.randomize.distractor_line},
                    {"wall_margin", c.randomize.wall_margin},
                    {"min_separation", c.randomize.min_separation},
                    {"distractor_gap", c.randomize.distractor_gap}};
  return j.dump(2) + "\n";
}

ScenarioConfig parse_scenario(const std::string& text)
{
  ordered_json j;
  try
  {
    j = ordered_json::parse(text);
  }
  catch (const nlohmann::json::exception& e)
  {
    throw ConfigError(std::string("scenario parse error: ") + e.what());
  }
  ScenarioConfig c;
  try
  {
    c.domain.lengths = j.at("domain").at("lengths").get<std::vector<double>>();
    c.domain.grid_resolution =
        j.at("domain").at("grid_resolution").get<std::vector<int>>();
    for (const auto& t : j.at("true_targets"))
    {
      c.true_targets.push_back(target_from_json(t));
    }
    for (const auto& t : j.at("distractors"))
    {
      c.distractors.push_back(target_from_json(t));
    }
    c.noise_sigma = j.at("noise_sigma").get<double>();
    c.horizon_T = j.at("horizon_T").get<double>();
    c.dt = j.at("dt").get<double>();
    c.gamma = j.at("gamma").get<double>();
    c.R = j.at("R").get<double>();
    c.rng_seed = j.at("rng_seed").get<std::uint64_t>();
    c.controller = controller_from_string(j.at("controller").get<std::string>());
    c.dynamics = dynamics_from_string(j.at("dynamics").get<std::string>());
    c.max_runtime = j.at("max_runtime").get<double>();
    c.success_tolerance = j.at("success_tolerance").get<double>();
    c.termination_std = j.at("termination_std").get<double>();
    c.search_mode = search_mode_from_string(j.value("search_mode", "single"));
    c.basis_K = j.value("basis_K", c.basis_K);
    c.estimate_radius = j.value("estimate_radius", c.estimate_radius);
    if (j.contains("radius_band"))
    {
      c.radius_band = j.at("radius_band").get<std::array<double, 2>>();
    }
    c.belief_resolution = j.value("belief_resolution", c.belief_resolution);
    c.measurement_rate_hz = j.value("measurement_rate_hz", c.measurement_rate_hz);
    c.control_bound = j.value("control_bound", c.control_bound);
    c.baseline_speed = j.value("baseline_speed", c.baseline_speed);
    c.barrier_weight = j.value("barrier_weight", c.barrier_weight);
    if (j.contains("optimizer"))
    {
      const auto& o = j.at("optimizer");
      c.optimizer.max_iters = o.value("max_iters", c.optimizer.max_iters);
      c.optimizer.descent_tolerance =
          o.value("descent_tolerance", c.optimizer.descent_tolerance);
      c.optimizer.armijo_c1 = o.value("armijo_c1", c.optimizer.armijo_c1);
      c.optimizer.armijo_shrink = o.value("armijo_shrink", c.optimizer.armijo_shrink);
      c.optimizer.initial_forward_control =
          o.value("initial_forward_control", c.optimizer.initial_forward_control);
    }
    c.geer_candidates = j.value("geer_candidates", c.geer_candidates);
    c.geer_belief_samples = j.value("geer_belief_samples", c.geer_belief_samples);
    c.boundary_band_horizons =
        j.value("boundary_band_horizons", c.boundary_band_horizons);
    c.initial_state = j.value("initial_state", c.initial_state);
    c.amplitude = j.value("amplitude", c.amplitude);
    c.calibration_radius = j.value("calibration_radius", c.calibration_radius);
    if (j.contains("filter_target"))
    {
      const auto& f = j.at("filter_target");
      c.filter_target.radius = f.value("radius", c.filter_target.radius);
      c.filter_target.lateral_offset =
          f.value("lateral_offset", c.filter_target.lateral_offset);
      c.filter_target.plane_offset =
          f.value("plane_offset", c.filter_target.plane_offset);
    }
    if (j.contains("randomize"))
    {
      const auto& r = j.at("randomize");
      c.randomize.targets = r.value("targets", c.randomize.targets);
      c.randomize.target_count = r.value("target_count", c.randomize.target_count);
      c.randomize.distractor_line =
          r.value("distractor_line", c.randomize.distractor_line);
      c.randomize.wall_margin = r.value("wall_margin", c.randomize.wall_margin);
      c.randomize.min_separation =
          r.value("min_separation", c.randomize.min_separation);
      c.randomize.distractor_gap =
          r.value("distractor_gap", c.randomize.distractor_gap);
    }
  }
  catch (const nlohmann::json::exception& e)
  {
    throw ConfigError(std::string("scenario field error: ") + e.what());
  }
  return c;
}

ScenarioConfig load_scenario(const std::string& path)
{
  std::ifstream in(path);
  if (!in)
  {
    throw ConfigError("cannot open scenario file: " + path);
  }
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_scenario(buffer.str());
}

void save_scenario(const ScenarioConfig& config, const std::string& path)
{
  std::ofstream out(path);
  if (!out)
  {
    throw ConfigError("cannot write scenario file: " + path);
  }
  out << serialize_scenario(config);
}

}  // namespace eedi
