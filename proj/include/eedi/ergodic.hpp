#ifndef EEDI_ERGODIC_HPP
#define EEDI_ERGODIC_HPP

#include <vector>

#include <Eigen/Dense>

#include "eedi/domain.hpp"

namespace eedi
{
/// Separable cosine basis on the box domain, indices k = (k_1..k_n) with
/// 0 <= k_i <= K, and Sobolev weights Lambda_k = (1 + |k|^2)^-s, s = (n+1)/2.
struct BasisIndexSet
{
  int K = 0;
  std::vector<std::array<int, 2>> indices;  // second entry unused in 1D
  Eigen::VectorXd weights;                  // Lambda_k, same ordering
  SearchDomain domain;

  int dim() const
  {
    return domain.dim();
  }

  Eigen::Index size() const
  {
    return static_cast<Eigen::Index>(indices.size());
  }

  static BasisIndexSet build(int K, const SearchDomain& domain);
};

using SpectralCoeffs = Eigen::VectorXd;

/// Normalized basis function F_k(x) = (1/h_k) prod_i cos(k_i pi x_i / L_i)
/// with h_k such that the L2 norm of F_k over the domain is one.
/// Throws DomainViolation when x lies outside the domain.
double basis_eval(const BasisIndexSet& basis, Eigen::Index k,
                  std::span<const double> x);

/// Gradient of F_k with respect to the workspace point.
Eigen::VectorXd basis_gradient(const BasisIndexSet& basis, Eigen::Index k,
                               std::span<const double> x);

/// Project a density sampled on the domain node grid onto the basis:
/// phi_k = integral of phi(x) F_k(x) dx by trapezoid quadrature.
/// The field must be normalized (trapezoid integral one).
SpectralCoeffs density_coeffs(const Eigen::VectorXd& field,
                              const BasisIndexSet& basis);

/// Time-averaged basis functions along a trajectory:
/// c_k = (1/T) integral of F_k(x(t)) dt, trapezoid rule on the uniform grid.
SpectralCoeffs trajectory_coeffs(const Trajectory& traj, const BasisIndexSet& basis);

/// Distance from ergodicity: sum_k Lambda_k (c_k - phi_k)^2.
double ergodicity(const SpectralCoeffs& c, const SpectralCoeffs& phi,
                  const BasisIndexSet& basis);

/// dE/dx(t_j) for every trajectory sample, trapezoid end weights halved.
std::vector<Eigen::VectorXd> ergodicity_gradient(const Trajectory& traj,
                                                 const SpectralCoeffs& phi,
                                                 const BasisIndexSet& basis);

namespace detail
{
/// Coefficients of a workspace point sequence with domain clamping, used by
/// the trajectory optimizer where line-search iterates may leave the box.
SpectralCoeffs point_sequence_coeffs(const std::vector<Eigen::VectorXd>& points,
                                     const BasisIndexSet& basis, bool clamp);

double basis_eval_clamped(const BasisIndexSet& basis, Eigen::Index k,
                          std::span<const double> x);

Eigen::VectorXd basis_gradient_clamped(const BasisIndexSet& basis, Eigen::Index k,
                                       std::span<const double> x);
}  // namespace detail

}  // namespace eedi

#endif
