#pragma once

#include "kicktop/floquet.hpp"
#include "kicktop/spin_algebra.hpp"

#include <vector>

namespace kicktop {

struct DynamicsSeries {
	SpinMagnitude spin{1};
	KickParams params;
	double theta0 = 0.0;             ///< initial coherent-state angles, spin up
	double phi0 = 0.0;
	std::vector<double> jz_mean;     ///< <Jz>_n, n = 0..n_max
	std::vector<double> jz_std;      ///< sigma_n of Jz
	double max_norm_drift = 0.0;

	[[nodiscard]] int n_max() const { return static_cast<int>(jz_mean.size()) - 1; }
	/// Mean of <Jz>_n / j over the last `fraction` of the kicks (n > (1 - fraction) n_max).
	[[nodiscard]] double late_time_mean(double fraction = 0.2) const;
	[[nodiscard]] double late_time_std(double fraction = 0.2) const;
};

/// Evolves psi0 by repeated application of U. Throws NumericalError if the
/// norm drifts by more than 1e-8.
DynamicsSeries stroboscopic_series(const FloquetOperator& op, const StateVector& psi0, int n_max);

/// Same observables through the eigenbasis of U, phases exp(-i n eps).
DynamicsSeries stroboscopic_series_spectral(const FloquetOperator& op, const StateVector& psi0, int n_max);

/// |arccos z0, 0> (x) |up>.
StateVector dynamics_initial_state(SpinMagnitude spin, double z0);

/// (kx)_3 = pi (2j + 1) / ky, where kx ky reaches the third stage border.
double chaotic_border_kappa_x(SpinMagnitude spin, double kappa_y);

struct DynamicalScan {
	double z0 = 0.0;
	double kappa_y = 0.0;
	std::vector<int> n_x;
	std::vector<double> kappa_x;
	std::vector<DynamicsSeries> series;
	std::vector<double> late_mean;   ///< late-time <Jz>/j per column
};

/// One plain-variant series per n_x, kx from allowed_kappa_x(z0, ky, n_x, n_y).
DynamicalScan dynamical_scan(SpinMagnitude spin, double kappa_y, double z0, const std::vector<int>& n_x,
                             int n_max, int n_y = 0, unsigned workers = 1);

/// Scan at explicit kx values with the same initial state.
DynamicalScan dynamical_scan_kappa(SpinMagnitude spin, double kappa_y, double z0,
                                   const std::vector<double>& kappa_x, int n_max, unsigned workers = 1);

} // namespace kicktop
