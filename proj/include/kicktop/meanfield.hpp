#pragma once

#include "kicktop/core.hpp"

#include <optional>
#include <vector>

namespace kicktop {

/// arccos(cos K_x cos K_y) with K_x = kx sin(theta) cos(phi), K_y = ky sin(theta) sin(phi).
/// Result lies in [0, pi].
double mf_quasienergy(double theta, double phi, double kappa_x, double kappa_y);

/// MeanFieldSurface: values(t, p) = mf_quasienergy(thetas[t], phis[p], ...).
struct MeanFieldSurface {
	std::vector<double> thetas;
	std::vector<double> phis;
	Eigen::MatrixXd values;
};

MeanFieldSurface mf_surface(std::vector<double> thetas, std::vector<double> phis, double kappa_x,
                            double kappa_y);

/// One predicted bound-state location on the Bloch sphere of the top.
struct BoundStatePrediction {
	int n_x = 0;
	int n_y = 0;
	int sign_z = 1;
	/// Outer and inner sign of phi = s_outer * arccos(s_inner * c); the first
	/// combination reaching this point.
	int sign_phi_outer = 1;
	int sign_phi_inner = 1;
	double z = 0.0;
	double phi = 0.0;            ///< in (-pi, pi]; 0 when phi_degenerate
	bool phi_degenerate = false; ///< poles, n_x = n_y = 0
	double target = 0.0;         ///< 0 or pi, from the mean-field quasi-energy at the point
	/// Number of the eight sign combinations landing on this point.
	int multiplicity = 1;
};

/// All distinct points with n_x, n_y >= 0 and a real z. Negative integers give
/// the same set of points and are not enumerated separately.
std::vector<BoundStatePrediction> bound_state_predictions(double kappa_x, double kappa_y);

/// Continuum estimate 2 kx ky / pi, valid for kx, ky >> 1.
double topological_count_closed_form(double kappa_x, double kappa_y);

/// kx = pi n_x / sqrt(1 - z0^2 - pi^2 n_y^2 / ky^2), the kick strength that puts
/// the (n_x, n_y) bound state at height z0. Empty when the radicand is not
/// positive. The result is checked by substituting back.
std::optional<double> allowed_kappa_x(double z0, double kappa_y, int n_x, int n_y = 0);

} // namespace kicktop
