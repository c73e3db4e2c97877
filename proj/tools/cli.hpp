#pragma once

#include "kicktop/floquet.hpp"

#include "json.hpp"

#include <optional>
#include <string>
#include <vector>

namespace kicktop::cli {

inline constexpr int kSchemaVersion = 1;

struct Range {
	double lo = 0.0;
	double hi = 0.0;
};

/// "lo:hi" or a single value. A token "pi" multiplies the value after it by pi,
/// so "pi:0.5:pi:2" is [pi/2, 2 pi] and "0:pi:1" is [0, pi].
Range parse_range(const std::string& text);
/// A single value with the same "pi:" rule.
double parse_value(const std::string& text);
/// Comma separated values.
std::vector<double> parse_value_list(const std::string& text);
std::vector<int> parse_int_list(const std::string& text);

struct RunConfig {
	std::string subcommand;
	int two_j = 0;
	std::optional<Variant> variant;  ///< unset: sym1 without delta, plain otherwise
	double delta = 0.0;

	std::optional<Range> kxky;       ///< product range (spectrum, rcurve, entropy)
	double ratio = 1.3;              ///< ky / kx along a product range
	int steps = 0;

	std::optional<Range> kx;         ///< rgrid axes, or a symcheck point
	std::optional<Range> ky;
	int kx_steps = 0;
	int ky_steps = 0;

	int n_theta = 32;
	int n_phi = 32;
	double tol_bound = 0.05;

	double kappa_y = 0.0;            ///< dynamics
	double z0 = 0.5;
	std::vector<int> n_x;
	std::vector<double> kx_list;
	int n_y = 0;
	int n_max = 500;

	unsigned workers = 1;
	std::string out;

	[[nodiscard]] Variant effective_variant() const;
	/// Throws ConfigError.
	void validate() const;
};

nlohmann::json to_json(const RunConfig& config);

/// Evenly spaced, both ends included; steps == 1 gives lo.
std::vector<double> linspace(const Range& r, int steps);

/// (kx, ky) with kx ky = product and ky = ratio kx.
std::pair<double, double> split_product(double product, double ratio);

std::string cmd_spectrum(const RunConfig& config);
std::string cmd_rgrid(const RunConfig& config);
std::string cmd_rcurve(const RunConfig& config);
std::string cmd_entropy(const RunConfig& config);
std::string cmd_dynamics(const RunConfig& config);
std::string cmd_symcheck(const RunConfig& config);
std::string cmd_stages(const RunConfig& config);

/// Validates and dispatches on config.subcommand.
std::string run(const RunConfig& config);

} // namespace kicktop::cli
