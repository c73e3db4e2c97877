#include "kicktop/dynamics.hpp"

#include "kicktop/meanfield.hpp"
#include "kicktop/spectrum.hpp"
#include "kicktop/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kicktop {

namespace {

constexpr double kNormDriftTol = 1e-8;

RealVector jz_diagonal(SpinMagnitude spin)
{
	RealVector m(spin.dim());
	for(int k = 0; k < spin.top_dim(); ++k) {
		m(2 * k) = k - spin.j();
		m(2 * k + 1) = k - spin.j();
	}
	return m;
}

void record(DynamicsSeries& s, const RealVector& m, const Vector& psi)
{
	const RealVector p = psi.cwiseAbs2();
	const double mean = p.dot(m);
	const double second = p.dot(m.cwiseProduct(m));
	s.jz_mean.push_back(mean);
	s.jz_std.push_back(std::sqrt(std::max(0.0, second - mean * mean)));
}

DynamicsSeries start(const FloquetOperator& op, const StateVector& psi0, int n_max)
{
	if(n_max < 1) {
		throw ConfigError("stroboscopic_series: n_max must be >= 1");
	}
	if(psi0.size() != op.spin().dim()) {
		throw ConfigError("stroboscopic_series: state dimension does not match the operator");
	}
	if(std::abs(psi0.norm() - 1.0) > 1e-10) {
		throw ConfigError("stroboscopic_series: initial state is not normalized");
	}
	DynamicsSeries s;
	s.spin = op.spin();
	s.params = op.params();
	s.jz_mean.reserve(static_cast<std::size_t>(n_max) + 1);
	s.jz_std.reserve(static_cast<std::size_t>(n_max) + 1);
	return s;
}

std::pair<std::size_t, std::size_t> window(std::size_t n, double fraction)
{
	if(!(fraction > 0.0) || fraction > 1.0) {
		throw ConfigError("late-time window fraction must lie in (0, 1]");
	}
	const std::size_t n_max = n - 1;
	const auto first = static_cast<std::size_t>(std::floor((1.0 - fraction) * static_cast<double>(n_max))) + 1;
	return {std::min(first, n_max), n};
}

} // namespace

double DynamicsSeries::late_time_mean(double fraction) const
{
	const auto [a, b] = window(jz_mean.size(), fraction);
	double acc = 0.0;
	for(std::size_t i = a; i < b; ++i) {
		acc += jz_mean[i];
	}
	return acc / static_cast<double>(b - a) / spin.j();
}

double DynamicsSeries::late_time_std(double fraction) const
{
	const auto [a, b] = window(jz_std.size(), fraction);
	double acc = 0.0;
	for(std::size_t i = a; i < b; ++i) {
		acc += jz_std[i];
	}
	return acc / static_cast<double>(b - a) / spin.j();
}

DynamicsSeries stroboscopic_series(const FloquetOperator& op, const StateVector& psi0, int n_max)
{
	DynamicsSeries s = start(op, psi0, n_max);
	const RealVector m = jz_diagonal(op.spin());
	const Matrix& u = op.matrix();
	Vector psi = psi0.amplitudes;
	Vector next(psi.size());
	record(s, m, psi);
	for(int n = 1; n <= n_max; ++n) {
		next.noalias() = u * psi;
		psi.swap(next);
		const double drift = std::abs(psi.norm() - 1.0);
		s.max_norm_drift = std::max(s.max_norm_drift, drift);
		if(drift > kNormDriftTol) {
			throw NumericalError("stroboscopic_series: norm drift " + std::to_string(drift) + " at kick "
			                     + std::to_string(n));
		}
		record(s, m, psi);
	}
	return s;
}

DynamicsSeries stroboscopic_series_spectral(const FloquetOperator& op, const StateVector& psi0, int n_max)
{
	DynamicsSeries s = start(op, psi0, n_max);
	const RealVector m = jz_diagonal(op.spin());
	const QuasiSpectrum spec = quasi_spectrum(op);
	const Vector c = spec.eigenvectors.adjoint() * psi0.amplitudes;
	Vector phased(c.size());
	for(int n = 0; n <= n_max; ++n) {
		for(Eigen::Index i = 0; i < c.size(); ++i) {
			phased(i) = c(i) * std::exp(-kI * (static_cast<double>(n) * spec.epsilons[static_cast<std::size_t>(i)]));
		}
		record(s, m, spec.eigenvectors * phased);
	}
	return s;
}

StateVector dynamics_initial_state(SpinMagnitude spin, double z0)
{
	if(!(std::abs(z0) <= 1.0)) {
		throw ConfigError("dynamics_initial_state: |z0| must be <= 1");
	}
	const StateVector top = coherent_state(spin, std::acos(z0), 0.0);
	return StateVector{product_state(top.amplitudes, Eigen::Vector2cd(1.0, 0.0))};
}

double chaotic_border_kappa_x(SpinMagnitude spin, double kappa_y)
{
	if(!(kappa_y > 0.0)) {
		throw ConfigError("chaotic_border_kappa_x: kappa_y must be positive");
	}
	return kPi * (2.0 * spin.j() + 1.0) / kappa_y;
}

DynamicalScan dynamical_scan_kappa(SpinMagnitude spin, double kappa_y, double z0,
                                   const std::vector<double>& kappa_x, int n_max, unsigned workers)
{
	if(kappa_x.empty()) {
		throw ConfigError("dynamical_scan: empty kappa_x list");
	}
	DynamicalScan scan;
	scan.z0 = z0;
	scan.kappa_y = kappa_y;
	scan.kappa_x = kappa_x;
	const StateVector psi0 = dynamics_initial_state(spin, z0);
	for(double kx : kappa_x) {
		KickParams{kx, kappa_y, 0.0, Variant::Plain}.validate();
	}
	scan.series = parallel_map<DynamicsSeries>(kappa_x.size(), workers, [&](std::size_t i) {
		const FloquetOperator op = floquet_operator(KickParams{kappa_x[i], kappa_y, 0.0, Variant::Plain}, spin);
		DynamicsSeries s = stroboscopic_series(op, psi0, n_max);
		s.theta0 = std::acos(z0);
		return s;
	});
	for(const auto& s : scan.series) {
		scan.late_mean.push_back(s.late_time_mean());
	}
	return scan;
}

DynamicalScan dynamical_scan(SpinMagnitude spin, double kappa_y, double z0, const std::vector<int>& n_x,
                             int n_max, int n_y, unsigned workers)
{
	std::vector<double> kx;
	for(int n : n_x) {
		const auto k = allowed_kappa_x(z0, kappa_y, n, n_y);
		if(!k) {
			throw ConfigError("dynamical_scan: no allowed kappa_x for n_x = " + std::to_string(n));
		}
		kx.push_back(*k);
	}
	DynamicalScan scan = dynamical_scan_kappa(spin, kappa_y, z0, kx, n_max, workers);
	scan.n_x = n_x;
	return scan;
}

} // namespace kicktop
