#include "cli.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

struct RawOptions {
	std::string variant;
	std::string kxky, kx, ky, kappa_y, z0, nx, kx_list;
};

void add_common(CLI::App* sub, kicktop::cli::RunConfig& c, RawOptions& raw)
{
	sub->add_option("--two-j", c.two_j, "Twice the top spin j")->required();
	sub->add_option("--variant", raw.variant, "plain | sym1 | sym2");
	sub->add_option("--delta", c.delta, "Chiral-breaking sigma_z strength (plain only)");
	sub->add_option("--workers", c.workers, "Worker threads (0 = hardware)");
	sub->add_option("--out", c.out, "Output file (default stdout)");
	sub->add_option("--tol-bound", c.tol_bound, "Bound-state quasi-energy tolerance");
}

void add_product(CLI::App* sub, kicktop::cli::RunConfig& c, RawOptions& raw)
{
	sub->add_option("--kxky", raw.kxky, "kx*ky range lo:hi (pi: prefix allowed)")->required();
	sub->add_option("--steps", c.steps, "Points along the range")->required();
	sub->add_option("--ratio", c.ratio, "ky / kx along the range");
}

} // namespace

int main(int argc, char** argv)
{
	using namespace kicktop;
	cli::RunConfig config;
	RawOptions raw;

	CLI::App app{"Kicked top + spin-1/2 Floquet simulations"};
	app.require_subcommand(1);

	auto* spectrum = app.add_subcommand("spectrum", "Quasi-energies along a kx*ky range");
	add_common(spectrum, config, raw);
	add_product(spectrum, config, raw);

	auto* rgrid = app.add_subcommand("rgrid", "Parity-resolved r over a (kx, ky) grid");
	add_common(rgrid, config, raw);
	rgrid->add_option("--kx", raw.kx, "kx range")->required();
	rgrid->add_option("--ky", raw.ky, "ky range")->required();
	rgrid->add_option("--steps", config.steps, "Points per axis");
	rgrid->add_option("--kx-steps", config.kx_steps, "Points along kx");
	rgrid->add_option("--ky-steps", config.ky_steps, "Points along ky");

	auto* rcurve = app.add_subcommand("rcurve", "r along a kx*ky range");
	add_common(rcurve, config, raw);
	add_product(rcurve, config, raw);

	auto* entropy = app.add_subcommand("entropy", "Sphere-averaged S2 along a kx*ky range");
	add_common(entropy, config, raw);
	add_product(entropy, config, raw);
	entropy->add_option("--ntheta", config.n_theta, "Gauss-Legendre nodes in cos(theta)");
	entropy->add_option("--nphi", config.n_phi, "Uniform phi nodes");

	auto* dynamics = app.add_subcommand("dynamics", "Stroboscopic <Jz> scan over kx columns");
	add_common(dynamics, config, raw);
	dynamics->add_option("--kappa-y", raw.kappa_y, "ky (pi: prefix allowed)")->required();
	dynamics->add_option("--z0", raw.z0, "Initial height cos(theta0)");
	dynamics->add_option("--nx", raw.nx, "Comma separated n_x values");
	dynamics->add_option("--ny", config.n_y, "n_y used in the kx inversion");
	dynamics->add_option("--kx-list", raw.kx_list, "Comma separated explicit kx values");
	dynamics->add_option("--n-max", config.n_max, "Number of kicks");

	auto* symcheck = app.add_subcommand("symcheck", "Symmetry relation report (JSON)");
	add_common(symcheck, config, raw);
	symcheck->add_option("--kx", raw.kx, "kx")->required();
	symcheck->add_option("--ky", raw.ky, "ky")->required();

	auto* stages = app.add_subcommand("stages", "Stage border table");
	add_common(stages, config, raw);

	try {
		app.parse(argc, argv);
	} catch(const CLI::CallForHelp& e) {
		return app.exit(e);
	} catch(const CLI::ParseError& e) {
		app.exit(e);
		return 2;
	}

	std::string output;
	const auto t0 = std::chrono::steady_clock::now();
	try {
		config.subcommand = app.get_subcommands().front()->get_name();
		if(!raw.variant.empty()) {
			config.variant = parse_variant(raw.variant);
		}
		if(!raw.kxky.empty()) {
			config.kxky = cli::parse_range(raw.kxky);
		}
		if(!raw.kx.empty()) {
			config.kx = cli::parse_range(raw.kx);
		}
		if(!raw.ky.empty()) {
			config.ky = cli::parse_range(raw.ky);
		}
		if(!raw.kappa_y.empty()) {
			config.kappa_y = cli::parse_value(raw.kappa_y);
		}
		if(!raw.z0.empty()) {
			config.z0 = cli::parse_value(raw.z0);
		}
		if(!raw.nx.empty()) {
			config.n_x = cli::parse_int_list(raw.nx);
		}
		if(!raw.kx_list.empty()) {
			config.kx_list = cli::parse_value_list(raw.kx_list);
		}
		output = cli::run(config);
	} catch(const ConfigError& e) {
		std::cerr << "config error: " << e.what() << '\n';
		return 2;
	} catch(const NumericalError& e) {
		std::cerr << "numerical error: " << e.what() << '\n';
		return 3;
	}

	if(config.out.empty()) {
		std::cout << output;
	} else {
		std::ofstream f(config.out, std::ios::binary);
		if(!f) {
			std::cerr << "cannot open " << config.out << '\n';
			return 2;
		}
		f << output;
	}
	const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
	std::cerr << "wall time: " << secs << " s\n";
	return 0;
}
