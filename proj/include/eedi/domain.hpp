#ifndef EEDI_DOMAIN_HPP
#define EEDI_DOMAIN_HPP

#include <array>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace eedi
{
struct Error : std::runtime_error
{
  using std::runtime_error::runtime_error;
};

/// A query point left the search domain.
struct DomainViolation : Error
{
  using Error::Error;
};

/// Belief (or an EID map derived from it) lost all probability mass.
struct DegenerateBelief : Error
{
  using Error::Error;
};

struct IntegrationDiverged : Error
{
  using Error::Error;
};

struct ConfigError : Error
{
  using Error::Error;
};

/// Axis-aligned box workspace [0,L1]x...x[0,Ln] with a node grid used for
/// field discretization (EID maps, spectral quadrature).
struct SearchDomain
{
  std::vector<double> lengths;
  std::vector<int> grid_resolution;

  int dim() const
  {
    return static_cast<int>(lengths.size());
  }

  bool contains(std::span<const double> x, double slack = 0.0) const;

  void validate() const;
};

/// Time-stamped rollout of one planning horizon. States are model-dependent;
/// workspace coordinates are always the leading state components.
struct Trajectory
{
  Eigen::VectorXd times;                  // N+1, uniform step
  std::vector<Eigen::VectorXd> states;    // N+1
  std::vector<Eigen::VectorXd> controls;  // N

  int steps() const
  {
    return static_cast<int>(controls.size());
  }

  double dt() const;
  double duration() const;

  /// Leading workspace coordinates of state j.
  Eigen::VectorXd workspace_point(int j, int workspace_dim) const;

  void validate() const;
};

/// Parameters of one spherical target. location holds workspace coordinates;
/// in 1D scenarios it may carry a second, known lateral offset from the line
/// of motion. plane_offset is the vertical standoff between the sensor plane
/// and the target.
struct TargetParams
{
  std::vector<double> location;
  double radius = 0.0125;
  double plane_offset = 0.2;
};

struct GridAxis
{
  double min = 0.0;
  double max = 1.0;
  int count = 2;

  double spacing() const
  {
    return (max - min) / static_cast<double>(count - 1);
  }

  double point(int i) const
  {
    return min + spacing() * static_cast<double>(i);
  }
};

/// Dense probability grid over estimated parameters. Nodes include the axis
/// endpoints; integrals use trapezoid weights (half weight on boundary nodes),
/// which keeps cosine-basis projections exactly orthogonal on the same grid.
struct BeliefGrid
{
  std::vector<GridAxis> axes;
  Eigen::VectorXd mass;  // flattened C-order (axis 0 outermost)

  int dim() const
  {
    return static_cast<int>(axes.size());
  }

  Eigen::Index size() const
  {
    return mass.size();
  }

  /// Nominal cell volume: product of axis spacings.
  double cell_volume() const;

  /// Trapezoid quadrature weight of a flattened cell index.
  double quad_weight(Eigen::Index flat) const;

  /// Parameter-space coordinates of a flattened cell index.
  void cell_point(Eigen::Index flat, std::span<double> out) const;

  /// Integral of the stored mass under trapezoid quadrature.
  double integral() const;

  static BeliefGrid uniform(std::vector<GridAxis> axes);
};

double cell_volume(const BeliefGrid& grid);

/// Rescale mass so it integrates to one. Throws DegenerateBelief when the
/// grid carries no mass.
BeliefGrid normalize(const BeliefGrid& grid);

/// Mean and covariance of a normalized grid.
struct Moments
{
  Eigen::VectorXd mean;
  Eigen::MatrixXd covariance;
};

Moments moments(const BeliefGrid& grid);

/// Differential entropy -sum p log p (0 log 0 := 0).
double entropy(const BeliefGrid& grid);

enum class ControllerKind
{
  Eedi,
  Iga,
  Im,
  Geer,
  Rw
};

enum class DynamicsKind
{
  Integrator,
  UnicycleKin,
  UnicycleDyn
};

enum class SearchMode
{
  SingleTarget,  // one belief grid, stop when it converges
  Sequential     // unknown target count, freeze-and-add procedure
};

struct OptimizerSettings
{
  int max_iters = 100;
  double descent_tolerance = 1e-3;  // on the dt-scaled gradient infinity norm
  double armijo_c1 = 1e-4;
  double armijo_shrink = 0.5;
  double initial_forward_control = 0.02;
};

/// What the Bayesian filter assumes about any hypothesized target: fixed
/// radius (when not estimated), known lateral offset from the motion line
/// (1D scenarios) and the vertical plane standoff.
struct FilterTargetModel
{
  double radius = 0.0125;
  double lateral_offset = 0.0;
  double plane_offset = 0.2;
};

/// Per-trial placement randomization applied by the batch runner.
struct Randomization
{
  bool targets = false;
  int target_count = -1;  // -1: keep the configured list size
  bool distractor_line = false;
  double wall_margin = 0.15;
  double min_separation = 0.12;     // between targets
  double distractor_gap = 0.25;     // distractor-to-target along the line
};

struct ScenarioConfig
{
  SearchDomain domain;
  std::vector<TargetParams> true_targets;
  std::vector<TargetParams> distractors;
  double noise_sigma = 1e-4;
  double horizon_T = 10.0;
  double dt = 0.1;
  double gamma = 20.0;
  double R = 0.01;  // control effort weight; the matrix is R * identity
  std::uint64_t rng_seed = 1;
  ControllerKind controller = ControllerKind::Eedi;
  DynamicsKind dynamics = DynamicsKind::Integrator;
  double max_runtime = 1000.0;
  double success_tolerance = 0.02;
  double termination_std = 0.01;

  SearchMode search_mode = SearchMode::SingleTarget;
  int basis_K = 15;
  bool estimate_radius = false;
  std::array<double, 2> radius_band{0.005, 0.015};
  std::vector<int> belief_resolution;  // empty: defaults per scenario class
  double measurement_rate_hz = 100.0;
  double control_bound = 0.1;
  double baseline_speed = 0.04;
  double barrier_weight = 1e3;
  OptimizerSettings optimizer;
  int geer_candidates = 50;
  int geer_belief_samples = 20;
  int boundary_band_horizons = 3;
  std::vector<double> initial_state;  // empty: model default
  double amplitude = 0.0;             // <= 0: calibrate from noise_sigma
  double calibration_radius = 0.009;
  FilterTargetModel filter_target;
  Randomization randomize;

  int horizon_steps() const;
  void validate() const;

  /// Belief axes for the estimated parameters (locations, optional radius).
  std::vector<GridAxis> belief_axes() const;
};

std::string to_string(ControllerKind kind);
std::string to_string(DynamicsKind kind);
std::string to_string(SearchMode mode);
ControllerKind controller_from_string(const std::string& name);
DynamicsKind dynamics_from_string(const std::string& name);
SearchMode search_mode_from_string(const std::string& name);

/// Serialize to / parse from the JSON scenario file schema. parse(serialize)
/// is an identity.
std::string serialize_scenario(const ScenarioConfig& config);
ScenarioConfig parse_scenario(const std::string& text);
ScenarioConfig load_scenario(const std::string& path);
void save_scenario(const ScenarioConfig& config, const std::string& path);

}  // namespace eedi

#endif
