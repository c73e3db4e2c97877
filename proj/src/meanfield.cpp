#include "kicktop/meanfield.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <string>

namespace kicktop {

namespace {

constexpr double kClampTol = 1e-12;
constexpr double kPointTol = 1e-12;

double wrap_angle(double phi)
{
	double a = std::remainder(phi, 2.0 * kPi);
	if(a <= -kPi) {
		a += 2.0 * kPi;
	}
	return a;
}

bool same_angle(double a, double b)
{
	return std::abs(wrap_angle(a - b)) <= kPointTol;
}

} // namespace

double mf_quasienergy(double theta, double phi, double kappa_x, double kappa_y)
{
	const double st = std::sin(theta);
	const double kx = kappa_x * st * std::cos(phi);
	const double ky = kappa_y * st * std::sin(phi);
	double arg = std::cos(kx) * std::cos(ky);
	if(std::abs(arg) > 1.0 + kClampTol) {
		throw NumericalError("mf_quasienergy: arccos argument out of range");
	}
	arg = std::clamp(arg, -1.0, 1.0);
	return std::acos(arg);
}

MeanFieldSurface mf_surface(std::vector<double> thetas, std::vector<double> phis, double kappa_x,
                            double kappa_y)
{
	MeanFieldSurface s{std::move(thetas), std::move(phis), {}};
	s.values.resize(static_cast<Eigen::Index>(s.thetas.size()), static_cast<Eigen::Index>(s.phis.size()));
	for(std::size_t t = 0; t < s.thetas.size(); ++t) {
		for(std::size_t p = 0; p < s.phis.size(); ++p) {
			s.values(static_cast<Eigen::Index>(t), static_cast<Eigen::Index>(p))
			    = mf_quasienergy(s.thetas[t], s.phis[p], kappa_x, kappa_y);
		}
	}
	return s;
}

std::vector<BoundStatePrediction> bound_state_predictions(double kappa_x, double kappa_y)
{
	if(!(kappa_x > 0.0) || !(kappa_y > 0.0)) {
		throw ConfigError("bound_state_predictions: kick strengths must be positive");
	}
	const int max_x = static_cast<int>(std::ceil(kappa_x / kPi));
	const int max_y = static_cast<int>(std::ceil(kappa_y / kPi));

	std::vector<BoundStatePrediction> out;
	for(int nx = 0; nx <= max_x; ++nx) {
		for(int ny = 0; ny <= max_y; ++ny) {
			const double ax = nx / kappa_x;
			const double ay = ny / kappa_y;
			double radicand = 1.0 - kPi * kPi * (ax * ax + ay * ay);
			if(std::abs(radicand) < kClampTol) {
				radicand = 0.0;
			}
			if(radicand < 0.0) {
				continue;
			}
			const double zmag = std::sqrt(radicand);
			const bool pole = nx == 0 && ny == 0;
			const double c = pole ? 0.0 : ax / std::hypot(ax, ay);

			std::vector<BoundStatePrediction> local;
			for(int sz : {1, -1}) {
				for(int so : {1, -1}) {
					for(int si : {1, -1}) {
						const double z = sz * zmag;
						const double phi = pole ? 0.0 : wrap_angle(so * std::acos(std::clamp(si * c, -1.0, 1.0)));
						bool merged = false;
						for(auto& p : local) {
							if(std::abs(p.z - z) <= kPointTol && (pole || same_angle(p.phi, phi))) {
								++p.multiplicity;
								merged = true;
								break;
							}
						}
						if(!merged) {
							BoundStatePrediction p;
							p.n_x = nx;
							p.n_y = ny;
							p.sign_z = sz;
							p.sign_phi_outer = so;
							p.sign_phi_inner = si;
							p.z = z;
							p.phi = phi;
							p.phi_degenerate = pole;
							local.push_back(p);
						}
					}
				}
			}
			for(auto& p : local) {
				const double eps = mf_quasienergy(std::acos(p.z), p.phi, kappa_x, kappa_y);
				p.target = eps < 0.5 * kPi ? 0.0 : kPi;
				out.push_back(p);
			}
		}
	}
	return out;
}

double topological_count_closed_form(double kappa_x, double kappa_y)
{
	return 2.0 * kappa_x * kappa_y / kPi;
}

std::optional<double> allowed_kappa_x(double z0, double kappa_y, int n_x, int n_y)
{
	if(!(std::abs(z0) < 1.0)) {
		throw ConfigError("allowed_kappa_x: |z0| must be < 1");
	}
	if(!(kappa_y > 0.0)) {
		throw ConfigError("allowed_kappa_x: kappa_y must be positive");
	}
	if(n_x < 1) {
		throw ConfigError("allowed_kappa_x: n_x must be >= 1");
	}
	const double ay = n_y / kappa_y;
	const double radicand = 1.0 - z0 * z0 - kPi * kPi * ay * ay;
	if(!(radicand > 0.0)) {
		return std::nullopt;
	}
	const double kx = kPi * n_x / std::sqrt(radicand);

	const double ax = n_x / kx;
	// Compared as z^2.
	const double z_back_sq = 1.0 - kPi * kPi * (ax * ax + ay * ay);
	if(std::abs(z_back_sq - z0 * z0) > 1e-12) {
		throw NumericalError("allowed_kappa_x: back-substitution mismatch for n_x = " + std::to_string(n_x));
	}
	return kx;
}

} // namespace kicktop
