#include "kicktop/localization.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace kicktop {

void gauss_legendre(int n, std::vector<double>& nodes, std::vector<double>& weights)
{
	if(n < 1) {
		throw ConfigError("gauss_legendre: need at least one node");
	}
	nodes.assign(static_cast<std::size_t>(n), 0.0);
	weights.assign(static_cast<std::size_t>(n), 0.0);
	for(int i = 0; i < (n + 1) / 2; ++i) {
		// Tricomi initial guess, then Newton on P_n.
		double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
		double dp = 0.0;
		for(int iter = 0; iter < 100; ++iter) {
			double p0 = 1.0;
			double p1 = x;
			for(int k = 2; k <= n; ++k) {
				const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
				p0 = p1;
				p1 = p2;
			}
			const double pn = n == 1 ? x : p1;
			const double pnm1 = n == 1 ? 1.0 : p0;
			dp = n * (x * pn - pnm1) / (x * x - 1.0);
			const double dx = pn / dp;
			x -= dx;
			if(std::abs(dx) < 1e-16) {
				break;
			}
		}
		const double w = 2.0 / ((1.0 - x * x) * dp * dp);
		nodes[static_cast<std::size_t>(i)] = -x;
		nodes[static_cast<std::size_t>(n - 1 - i)] = x;
		weights[static_cast<std::size_t>(i)] = w;
		weights[static_cast<std::size_t>(n - 1 - i)] = w;
	}
}

SphereGrid make_sphere_grid(int n_theta, int n_phi)
{
	if(n_theta < 1 || n_phi < 1) {
		throw ConfigError("sphere grid sizes must be positive");
	}
	std::vector<double> x;
	std::vector<double> w;
	gauss_legendre(n_theta, x, w);
	SphereGrid g;
	// Ascending cos(theta) -> descending theta; store theta ascending instead.
	for(int t = n_theta - 1; t >= 0; --t) {
		g.thetas.push_back(std::acos(x[static_cast<std::size_t>(t)]));
		g.theta_weights.push_back(0.5 * w[static_cast<std::size_t>(t)]);
	}
	for(int p = 0; p < n_phi; ++p) {
		g.phis.push_back(2.0 * kPi * p / n_phi);
	}
	return g;
}

namespace {

constexpr double kCompletenessTol = 1e-10;

struct OverlapMoments {
	double second = 0.0;
	double fourth = 0.0;
};

OverlapMoments moments(const Eigen::Ref<const Vector>& overlaps)
{
	OverlapMoments m;
	for(Eigen::Index i = 0; i < overlaps.size(); ++i) {
		const double p = std::norm(overlaps(i));
		m.second += p;
		m.fourth += p * p;
	}
	return m;
}

void check_completeness(double second)
{
	if(std::abs(second - 1.0) > kCompletenessTol) {
		throw NumericalError("eigenbasis not complete/orthonormal for the probe: sum |c|^2 = "
		                     + std::to_string(second));
	}
}

Matrix probe_matrix(const CoherentStateFactory& factory, const SphereGrid& grid)
{
	const int d = factory.spin().top_dim();
	const double j = factory.spin().j();
	const double h = 1.0 / std::sqrt(2.0);
	Matrix probes(2 * d, grid.n_theta() * grid.n_phi());
	for(int t = 0; t < grid.n_theta(); ++t) {
		const Vector polar = factory.polar_column(grid.thetas[t]);
		for(int p = 0; p < grid.n_phi(); ++p) {
			const int col = t * grid.n_phi() + p;
			for(int k = 0; k < d; ++k) {
				const cplx a = polar(k) * std::exp(-kI * grid.phis[p] * (k - j)) * h;
				probes(2 * k, col) = a;
				probes(2 * k + 1, col) = a;
			}
		}
	}
	return probes;
}

} // namespace

double ipr(const Matrix& eigenvectors, const StateVector& probe)
{
	if(eigenvectors.rows() != probe.size()) {
		throw ConfigError("ipr: eigenvector and probe dimensions differ");
	}
	const Vector overlaps = eigenvectors.adjoint() * probe.amplitudes;
	const OverlapMoments m = moments(overlaps);
	check_completeness(m.second);
	return m.fourth;
}

double renyi_s2(double ipr_value, int dim)
{
	if(!(ipr_value > 0.0) || ipr_value > 1.0 + 1e-12) {
		throw ConfigError("renyi_s2: ipr must lie in (0, 1]");
	}
	if(dim < 2) {
		throw ConfigError("renyi_s2: dimension must be >= 2");
	}
	return std::clamp(-std::log(ipr_value) / std::log(static_cast<double>(dim)), 0.0, 1.0);
}

double coe_baseline_s2(int dim)
{
	const double d = dim;
	return std::log((d + 2.0) / 3.0) / std::log(d);
}

LocalizationResult sphere_averaged_s2(const QuasiSpectrum& spectrum, const SphereGrid& grid)
{
	const int dim = spectrum.spin.dim();
	const CoherentStateFactory factory(spectrum.spin);
	const Matrix probes = probe_matrix(factory, grid);
	const Matrix overlaps = spectrum.eigenvectors.adjoint() * probes;

	LocalizationResult out;
	out.s2.resize(grid.n_theta(), grid.n_phi());
	out.baseline_coe = coe_baseline_s2(dim);
	double mean = 0.0;
	for(int t = 0; t < grid.n_theta(); ++t) {
		for(int p = 0; p < grid.n_phi(); ++p) {
			const OverlapMoments m = moments(overlaps.col(t * grid.n_phi() + p));
			check_completeness(m.second);
			const double s2 = renyi_s2(m.fourth, dim);
			out.s2(t, p) = s2;
			mean += grid.weight(t, p) * s2;
		}
	}
	out.mean = mean;
	return out;
}

LocalizationResult sphere_averaged_s2(const FloquetOperator& op, const SphereGrid& grid)
{
	if(op.params().kappa_x * op.params().kappa_y == 0.0) {
		throw ConfigError("sphere_averaged_s2: a vanishing kick leaves a degenerate eigenbasis");
	}
	return sphere_averaged_s2(quasi_spectrum(op), grid);
}

double angular_distance(double z1, double phi1, double z2, double phi2)
{
	const double s1 = std::sqrt(std::max(0.0, 1.0 - z1 * z1));
	const double s2 = std::sqrt(std::max(0.0, 1.0 - z2 * z2));
	const double c = z1 * z2 + s1 * s2 * std::cos(phi1 - phi2);
	return std::acos(std::clamp(c, -1.0, 1.0));
}

namespace {

double husimi_value(const CoherentStateFactory& factory, const Vector& up, const Vector& down,
                    double theta, double phi)
{
	const Vector c = factory.top_state(theta, phi);
	return std::norm(c.dot(up)) + std::norm(c.dot(down));
}

} // namespace

HusimiPeak husimi_peak(const StateVector& state, const SphereGrid& grid)
{
	const Eigen::Index dim = state.size();
	if(dim % 2 != 0 || dim < 4) {
		throw ConfigError("husimi_peak: expects a coupled-space state");
	}
	const SpinMagnitude spin(static_cast<int>(dim / 2 - 1));
	const CoherentStateFactory factory(spin);
	const Eigen::Index d = spin.top_dim();
	Vector up(d);
	Vector down(d);
	for(Eigen::Index k = 0; k < d; ++k) {
		up(k) = state.amplitudes(2 * k);
		down(k) = state.amplitudes(2 * k + 1);
	}

	const Matrix probes = [&] {
		Matrix m(d, grid.n_theta() * grid.n_phi());
		for(int t = 0; t < grid.n_theta(); ++t) {
			for(int p = 0; p < grid.n_phi(); ++p) {
				m.col(t * grid.n_phi() + p) = factory.top_state(grid.thetas[t], grid.phis[p]);
			}
		}
		return m;
	}();
	const Vector ou = probes.adjoint() * up;
	const Vector od = probes.adjoint() * down;

	int best_t = 0;
	int best_p = 0;
	double best = -1.0;
	for(int t = 0; t < grid.n_theta(); ++t) {
		for(int p = 0; p < grid.n_phi(); ++p) {
			const int col = t * grid.n_phi() + p;
			const double q = std::norm(ou(col)) + std::norm(od(col));
			if(q > best) {
				best = q;
				best_t = t;
				best_p = p;
			}
		}
	}

	// Local steps around the coarse argmax.
	double dtheta = kPi / grid.n_theta();
	if(grid.n_theta() > 1) {
		const int lo = std::max(best_t - 1, 0);
		const int hi = std::min(best_t + 1, grid.n_theta() - 1);
		dtheta = (grid.thetas[hi] - grid.thetas[lo]) / (hi - lo);
	}
	const double dphi = 2.0 * kPi / grid.n_phi();

	HusimiPeak peak;
	peak.theta = grid.thetas[best_t];
	peak.phi = grid.phis[best_p];
	peak.value = best;
	const double t0 = peak.theta;
	const double p0 = peak.phi;
	for(int a = -1; a <= 1; ++a) {
		for(int b = -1; b <= 1; ++b) {
			if(a == 0 && b == 0) {
				continue;
			}
			const double th = std::clamp(t0 + 0.5 * a * dtheta, 0.0, kPi);
			const double ph = p0 + 0.5 * b * dphi;
			const double q = husimi_value(factory, up, down, th, ph);
			if(q > peak.value) {
				peak.value = q;
				peak.theta = th;
				peak.phi = ph;
			}
		}
	}
	peak.phi = std::remainder(peak.phi, 2.0 * kPi);
	if(peak.phi <= -kPi) {
		peak.phi += 2.0 * kPi;
	}
	peak.z = std::cos(peak.theta);
	peak.position_tol = 0.25 * std::max(dtheta, dphi);
	return peak;
}

} // namespace kicktop
