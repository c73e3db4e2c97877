#pragma once

#include "kicktop/floquet.hpp"
#include "kicktop/spectrum.hpp"

#include <vector>

namespace kicktop {

/// Gauss-Legendre nodes in cos(theta) times a uniform phi grid. Weights are the
/// normalized surface measure and sum to 1.
struct SphereGrid {
	std::vector<double> thetas;
	std::vector<double> phis;
	std::vector<double> theta_weights;  ///< Gauss-Legendre weight / 2

	[[nodiscard]] int n_theta() const { return static_cast<int>(thetas.size()); }
	[[nodiscard]] int n_phi() const { return static_cast<int>(phis.size()); }
	[[nodiscard]] double weight(int t, int /*p*/) const { return theta_weights[t] / n_phi(); }
};

SphereGrid make_sphere_grid(int n_theta, int n_phi);

/// Gauss-Legendre nodes and weights on [-1, 1], nodes ascending.
void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights);

/// sum_n |<eps_n|psi>|^4 over the columns of `eigenvectors`, which must be
/// orthonormal and complete (checked through sum_n |<eps_n|psi>|^2 = 1).
double ipr(const Matrix& eigenvectors, const StateVector& probe);

/// -ln(ipr) / ln(D).
double renyi_s2(double ipr_value, int dim);

/// ln((D + 2)/3) / ln(D), the COE expectation 3/(D + 2) for the IPR.
double coe_baseline_s2(int dim);

struct LocalizationResult {
	Eigen::MatrixXd s2;  ///< n_theta x n_phi
	double mean = 0.0;
	double baseline_coe = 0.0;
};

/// S2 of the probe state at every grid node against the eigenbasis of `op`,
/// and its sphere average. Throws ConfigError when kx ky = 0, where the
/// eigenbasis is not unique.
LocalizationResult sphere_averaged_s2(const FloquetOperator& op, const SphereGrid& grid);
LocalizationResult sphere_averaged_s2(const QuasiSpectrum& spectrum, const SphereGrid& grid);

struct HusimiPeak {
	double theta = 0.0;
	double z = 1.0;
	double phi = 0.0;
	double value = 0.0;         ///< sum_s |<theta, phi; s|state>|^2 at the peak
	double position_tol = 0.0;  ///< half the refined grid step, radians
};

/// Coarse argmax over the grid nodes followed by one bisection pass around it.
HusimiPeak husimi_peak(const StateVector& state, const SphereGrid& grid);

/// Great-circle distance between (z, phi) points on the unit sphere.
double angular_distance(double z1, double phi1, double z2, double phi2);

} // namespace kicktop
