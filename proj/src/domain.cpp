#include "eedi/domain.hpp"

#include <cmath>
#include <numeric>

namespace eedi
{
namespace
{
// Decompose a flat C-order index into per-axis indices.
inline void unflatten(Eigen::Index flat, const std::vector<GridAxis>& axes,
                      std::span<int> out)
{
  for (int a = static_cast<int>(axes.size()) - 1; a >= 0; --a)
  {
    const auto n = static_cast<Eigen::Index>(axes[a].count);
    out[a] = static_cast<int>(flat % n);
    flat /= n;
  }
}
}  // namespace

bool SearchDomain::contains(std::span<const double> x, double slack) const
{
  if (x.size() != lengths.size())
  {
    return false;
  }
  for (std::size_t i = 0; i < lengths.size(); ++i)
  {
    if (x[i] < -slack || x[i] > lengths[i] + slack)
    {
      return false;
    }
  }
  return true;
}

void SearchDomain::validate() const
{
  if (lengths.empty() || lengths.size() > 2)
  {
    throw ConfigError("search domain must have 1 or 2 axes");
  }
  if (grid_resolution.size() != lengths.size())
  {
    throw ConfigError("grid_resolution must match domain dimension");
  }
  for (std::size_t i = 0; i < lengths.size(); ++i)
  {
    if (!(lengths[i] > 0.0))
    {
      throw ConfigError("domain lengths must be positive");
    }
    if (grid_resolution[i] < 2)
    {
      throw ConfigError("grid_resolution must be at least 2 per axis");
    }
  }
}

double Trajectory::dt() const
{
  if (times.size() < 2)
  {
    throw Error("trajectory needs at least two samples");
  }
  return times[1] - times[0];
}

double Trajectory::duration() const
{
  return times[times.size() - 1] - times[0];
}

Eigen::VectorXd Trajectory::workspace_point(int j, int workspace_dim) const
{
  return states[static_cast<std::size_t>(j)].head(workspace_dim);
}

void Trajectory::validate() const
{
  const auto n = static_cast<std::size_t>(times.size());
  if (n < 2 || states.size() != n || controls.size() != n - 1)
  {
    throw Error("trajectory size mismatch");
  }
  const double step = times[1] - times[0];
  if (!(step > 0.0))
  {
    throw Error("trajectory times must be strictly increasing");
  }
  for (Eigen::Index j = 1; j < times.size(); ++j)
  {
    const double d = times[j] - times[j - 1];
    if (std::abs(d - step) > 1e-9 * std::max(1.0, std::abs(step)))
    {
      throw Error("trajectory time step must be uniform");
    }
  }
}

double BeliefGrid::cell_volume() const
{
  if (axes.empty())
  {
    throw Error("belief grid needs at least one axis");
  }
  double v = 1.0;
  for (const auto& axis : axes)
  {
    if (axis.count < 2 || !(axis.max > axis.min))
    {
      throw Error("malformed belief axis");
    }
    v *= axis.spacing();
  }
  return v;
}

double BeliefGrid::quad_weight(Eigen::Index flat) const
{
  std::array<int, 4> idx{};
  unflatten(flat, axes, std::span<int>(idx.data(), axes.size()));
  double w = 1.0;
  for (std::size_t a = 0; a < axes.size(); ++a)
  {
    double h = axes[a].spacing();
    if (idx[a] == 0 || idx[a] == axes[a].count - 1)
    {
      h *= 0.5;
    }
    w *= h;
  }
  return w;
}

void BeliefGrid::cell_point(Eigen::Index flat, std::span<double> out) const
{
  std::array<int, 4> idx{};
  unflatten(flat, axes, std::span<int>(idx.data(), axes.size()));
  for (std::size_t a = 0; a < axes.size(); ++a)
  {
    out[a] = axes[a].point(idx[a]);
  }
}

double BeliefGrid::integral() const
{
  double total = 0.0;
  for (Eigen::Index i = 0; i < mass.size(); ++i)
  {
    total += mass[i] * quad_weight(i);
  }
  return total;
}

BeliefGrid BeliefGrid::uniform(std::vector<GridAxis> axes)
{
  BeliefGrid grid;
  grid.axes = std::move(axes);
  Eigen::Index n = 1;
  for (const auto& axis : grid.axes)
  {
    n *= axis.count;
  }
  grid.mass = Eigen::VectorXd::Ones(n);
  return normalize(grid);
}

double cell_volume(const BeliefGrid& grid)
{
  return grid.cell_volume();
}

BeliefGrid normalize(const BeliefGrid& grid)
{
  if (grid.mass.size() == 0 || (grid.mass.array() < 0.0).any())
  {
    throw Error("belief mass must be nonnegative");
  }
  const double total = grid.integral();
  if (!(total > 0.0) || !std::isfinite(total))
  {
    throw DegenerateBelief("belief grid carries no probability mass");
  }
  BeliefGrid out = grid;
  out.mass /= total;
  return out;
}

Moments moments(const BeliefGrid& grid)
{
  const int d = grid.dim();
  if (std::abs(grid.integral() - 1.0) > 1e-6)
  {
    throw Error("moments requires a normalized belief grid");
  }
  Eigen::VectorXd mean = Eigen::VectorXd::Zero(d);
  std::array<double, 4> pt{};
  const std::span<double> coords(pt.data(), static_cast<std::size_t>(d));
  for (Eigen::Index i = 0; i < grid.size(); ++i)
  {
    grid.cell_point(i, coords);
    const double w = grid.mass[i] * grid.quad_weight(i);
    for (int a = 0; a < d; ++a)
    {
      mean[a] += w * pt[static_cast<std::size_t>(a)];
    }
  }
  Eigen::MatrixXd cov = Eigen::MatrixXd::Zero(d, d);
  for (Eigen::Index i = 0; i < grid.size(); ++i)
  {
    grid.cell_point(i, coords);
    const double w = grid.mass[i] * grid.quad_weight(i);
    for (int a = 0; a < d; ++a)
    {
      const double da = pt[static_cast<std::size_t>(a)] - mean[a];
      for (int b = a; b < d; ++b)
      {
        const double db = pt[static_cast<std::size_t>(b)] - mean[b];
        cov(a, b) += w * da * db;
      }
    }
  }
  cov = cov.selfadjointView<Eigen::Upper>();
  return {std::move(mean), std::move(cov)};
}

double entropy(const BeliefGrid& grid)
{
  double h = 0.0;
  for (Eigen::Index i = 0; i < grid.size(); ++i)
  {
    const double p = grid.mass[i];
    if (p > 0.0)
    {
      h -= grid.quad_weight(i) * p * std::log(p);
    }
  }
  return h;
}

int ScenarioConfig::horizon_steps() const
{
  const double steps = horizon_T / dt;
  const auto n = static_cast<int>(std::lround(steps));
  if (n < 1 || std::abs(steps - static_cast<double>(n)) > 1e-6)
  {
    throw ConfigError("horizon_T must be an integer multiple of dt");
  }
  return n;
}

void ScenarioConfig::validate() const
{
  domain.validate();
  if (!(noise_sigma > 0.0))
  {
    throw ConfigError("noise_sigma must be positive");
  }
  if (!(dt > 0.0))
  {
    throw ConfigError("dt must be positive");
  }
  horizon_steps();
  if (max_runtime < horizon_T)
  {
    throw ConfigError("max_runtime must cover at least one horizon");
  }
  if (!(gamma > 0.0) || !(R > 0.0))
  {
    throw ConfigError("gamma and R must be positive");
  }
  if (basis_K < 1)
  {
    throw ConfigError("basis_K must be at least 1");
  }
  if (estimate_radius && !(radius_band[1] > radius_band[0] && radius_band[0] > 0.0))
  {
    throw ConfigError("radius_band must be a positive interval");
  }
  const int n = domain.dim();
  for (const auto& list : {true_targets, distractors})
  {
    for (const auto& t : list)
    {
      if (static_cast<int>(t.location.size()) < n)
      {
        throw ConfigError("target location dimension below workspace dimension");
      }
      if (!(t.radius > 0.0) || !(t.plane_offset > 0.0))
      {
        throw ConfigError("target radius and plane_offset must be positive");
      }
      if (!domain.contains(std::span<const double>(t.location.data(),
                                                   static_cast<std::size_t>(n))))
      {
        throw ConfigError("target location outside the search domain");
      }
    }
  }
  if (dynamics != DynamicsKind::Integrator && n != 2)
  {
    throw ConfigError("unicycle models require a 2D workspace");
  }
  if (controller != ControllerKind::Eedi && dynamics != DynamicsKind::Integrator)
  {
    throw ConfigError("baseline controllers are defined for kinematic motion only");
  }
}

std::vector<GridAxis> ScenarioConfig::belief_axes() const
{
  const int n = domain.dim();
  std::vector<int> res = belief_resolution;
  if (res.empty())
  {
    if (n == 1)
    {
      res = {101};
    }
    else if (!estimate_radius)
    {
      res = {51, 51};
    }
    else
    {
      res = {31, 31, 15};
    }
  }
  const std::size_t want = static_cast<std::size_t>(n) + (estimate_radius ? 1 : 0);
  if (res.size() != want)
  {
    throw ConfigError("belief_resolution does not match the estimated parameters");
  }
  std::vector<GridAxis> axes;
  for (int a = 0; a < n; ++a)
  {
    axes.push_back({0.0, domain.lengths[static_cast<std::size_t>(a)],
                    res[static_cast<std::size_t>(a)]});
  }
  if (estimate_radius)
  {
    axes.push_back({radius_band[0], radius_band[1], res.back()});
  }
  return axes;
}

}  // namespace eedi
