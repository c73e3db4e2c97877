#include "cli.hpp"

#include "kicktop/dynamics.hpp"
#include "kicktop/localization.hpp"
#include "kicktop/meanfield.hpp"
#include "kicktop/spectrum.hpp"
#include "kicktop/sweep.hpp"
#include "kicktop/symmetries.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <sstream>

namespace kicktop::cli {

namespace {

std::string num(double x)
{
	char buf[40];
	std::snprintf(buf, sizeof buf, "%.17g", x);
	return buf;
}

std::vector<std::string> split(const std::string& text, char sep)
{
	std::vector<std::string> out;
	std::string cur;
	for(char c : text) {
		if(c == sep) {
			out.push_back(cur);
			cur.clear();
		} else {
			cur.push_back(c);
		}
	}
	out.push_back(cur);
	return out;
}

double to_double(const std::string& token)
{
	if(token.empty()) {
		throw ConfigError("empty number");
	}
	char* end = nullptr;
	const double v = std::strtod(token.c_str(), &end);
	if(end != token.c_str() + token.size() || !std::isfinite(v)) {
		throw ConfigError("not a number: '" + token + "'");
	}
	return v;
}

std::vector<double> parse_tokens(const std::vector<std::string>& tokens)
{
	std::vector<double> values;
	for(std::size_t i = 0; i < tokens.size(); ++i) {
		if(tokens[i] == "pi") {
			if(i + 1 >= tokens.size()) {
				throw ConfigError("'pi:' prefix without a value");
			}
			values.push_back(kPi * to_double(tokens[++i]));
		} else {
			values.push_back(to_double(tokens[i]));
		}
	}
	return values;
}

std::string header(const RunConfig& config)
{
	return "# kicktop schema " + std::to_string(kSchemaVersion) + "\n# config: " + to_json(config).dump() + "\n";
}

KickParams point(const RunConfig& config, double kx, double ky)
{
	KickParams p{kx, ky, config.delta, config.effective_variant()};
	p.validate();
	return p;
}

void require_product_range(const RunConfig& config)
{
	if(!config.kxky) {
		throw ConfigError(config.subcommand + ": --kxky is required");
	}
	if(config.steps < 1) {
		throw ConfigError(config.subcommand + ": --steps must be >= 1");
	}
}

struct CurvePoint {
	double kxky, kx, ky;
};

std::vector<CurvePoint> curve_points(const RunConfig& config)
{
	require_product_range(config);
	std::vector<CurvePoint> pts;
	for(double p : linspace(*config.kxky, config.steps)) {
		const auto [kx, ky] = split_product(p, config.ratio);
		pts.push_back({p, kx, ky});
	}
	return pts;
}

} // namespace

Range parse_range(const std::string& text)
{
	const std::vector<double> v = parse_tokens(split(text, ':'));
	if(v.size() == 1) {
		return {v[0], v[0]};
	}
	if(v.size() != 2) {
		throw ConfigError("range must be 'lo:hi': '" + text + "'");
	}
	return {v[0], v[1]};
}

double parse_value(const std::string& text)
{
	const std::vector<double> v = parse_tokens(split(text, ':'));
	if(v.size() != 1) {
		throw ConfigError("expected a single value: '" + text + "'");
	}
	return v[0];
}

std::vector<double> parse_value_list(const std::string& text)
{
	std::vector<double> out;
	for(const auto& item : split(text, ',')) {
		out.push_back(parse_value(item));
	}
	return out;
}

std::vector<int> parse_int_list(const std::string& text)
{
	std::vector<int> out;
	for(const auto& item : split(text, ',')) {
		const double v = to_double(item);
		if(v != std::floor(v) || std::abs(v) > 1e9) {
			throw ConfigError("not an integer: '" + item + "'");
		}
		out.push_back(static_cast<int>(v));
	}
	return out;
}

Variant RunConfig::effective_variant() const
{
	if(variant) {
		return *variant;
	}
	if(subcommand == "dynamics" || delta != 0.0) {
		return Variant::Plain;
	}
	return Variant::Symmetrized1;
}

void RunConfig::validate() const
{
	static const std::vector<std::string> known{"spectrum", "rgrid", "rcurve", "entropy", "dynamics", "symcheck", "stages"};
	if(std::find(known.begin(), known.end(), subcommand) == known.end()) {
		throw ConfigError("unknown subcommand '" + subcommand + "'");
	}
	if(two_j < 1) {
		throw ConfigError("--two-j must be >= 1");
	}
	if(delta < 0.0) {
		throw ConfigError("--delta must be >= 0");
	}
	if(delta > 0.0 && effective_variant() != Variant::Plain) {
		throw ConfigError("--delta requires --variant plain");
	}
	if(!(ratio > 0.0)) {
		throw ConfigError("--ratio must be positive");
	}
	if(n_theta < 1 || n_phi < 1) {
		throw ConfigError("--ntheta/--nphi must be >= 1");
	}
	if(!(tol_bound > 0.0)) {
		throw ConfigError("--tol-bound must be positive");
	}
	for(const auto* r : {&kxky, &kx, &ky}) {
		if(*r && (r->value().lo < 0.0 || r->value().hi < r->value().lo)) {
			throw ConfigError("ranges need 0 <= lo <= hi");
		}
	}
}

nlohmann::json to_json(const RunConfig& c)
{
	auto range = [](const std::optional<Range>& r) {
		return r ? nlohmann::json::array({r->lo, r->hi}) : nlohmann::json();
	};
	return nlohmann::json{
	    {"subcommand", c.subcommand},
	    {"two_j", c.two_j},
	    {"variant", to_string(c.effective_variant())},
	    {"delta", c.delta},
	    {"kxky", range(c.kxky)},
	    {"ratio", c.ratio},
	    {"steps", c.steps},
	    {"kx", range(c.kx)},
	    {"ky", range(c.ky)},
	    {"kx_steps", c.kx_steps},
	    {"ky_steps", c.ky_steps},
	    {"ntheta", c.n_theta},
	    {"nphi", c.n_phi},
	    {"tol_bound", c.tol_bound},
	    {"kappa_y", c.kappa_y},
	    {"z0", c.z0},
	    {"nx", c.n_x},
	    {"kx_list", c.kx_list},
	    {"ny", c.n_y},
	    {"n_max", c.n_max},
	    {"workers", c.workers},
	};
}

std::vector<double> linspace(const Range& r, int steps)
{
	if(steps < 1) {
		throw ConfigError("steps must be >= 1");
	}
	std::vector<double> out;
	if(steps == 1) {
		out.push_back(r.lo);
		return out;
	}
	for(int i = 0; i < steps; ++i) {
		out.push_back(i == steps - 1 ? r.hi : r.lo + (r.hi - r.lo) * i / (steps - 1));
	}
	return out;
}

std::pair<double, double> split_product(double product, double ratio)
{
	if(product < 0.0 || !(ratio > 0.0)) {
		throw ConfigError("split_product: need product >= 0 and ratio > 0");
	}
	const double kx = std::sqrt(product / ratio);
	return {kx, ratio * kx};
}

std::string cmd_spectrum(const RunConfig& config)
{
	const SpinMagnitude spin(config.two_j);
	const auto pts = curve_points(config);
	for(const auto& p : pts) {
		point(config, p.kx, p.ky);
	}
	const auto rows = parallel_map<std::vector<double>>(pts.size(), config.workers, [&](std::size_t i) {
		const FloquetOperator op = floquet_operator(point(config, pts[i].kx, pts[i].ky), spin);
		std::vector<double> eps;
		for(int s = 0; s < 2; ++s) {
			const auto e = sector_quasienergies(op, s);
			eps.insert(eps.end(), e.begin(), e.end());
		}
		std::sort(eps.begin(), eps.end());
		return eps;
	});

	std::ostringstream os;
	os << header(config) << "kxky";
	for(int n = 1; n <= spin.dim(); ++n) {
		os << ",epsilon_" << n;
	}
	os << '\n';
	for(std::size_t i = 0; i < pts.size(); ++i) {
		os << num(pts[i].kxky);
		for(double e : rows[i]) {
			os << ',' << num(e);
		}
		os << '\n';
	}
	return os.str();
}

std::string cmd_rgrid(const RunConfig& config)
{
	if(!config.kx || !config.ky) {
		throw ConfigError("rgrid: --kx and --ky ranges are required");
	}
	const int nx = config.kx_steps > 0 ? config.kx_steps : config.steps;
	const int ny = config.ky_steps > 0 ? config.ky_steps : config.steps;
	if(nx < 1 || ny < 1) {
		throw ConfigError("rgrid: --steps (or --kx-steps/--ky-steps) must be >= 1");
	}
	const SpinMagnitude spin(config.two_j);
	const auto xs = linspace(*config.kx, nx);
	const auto ys = linspace(*config.ky, ny);
	point(config, xs.back(), ys.back());

	const std::size_t n = xs.size() * ys.size();
	const auto rs = parallel_map<ParityResolvedR>(n, config.workers, [&](std::size_t i) {
		const double kx = xs[i / ys.size()];
		const double ky = ys[i % ys.size()];
		return parity_resolved_r(floquet_operator(point(config, kx, ky), spin));
	});

	std::ostringstream os;
	os << header(config) << "kx,ky,r_mean,r_plus,r_minus,stage\n";
	for(std::size_t i = 0; i < n; ++i) {
		const double kx = xs[i / ys.size()];
		const double ky = ys[i % ys.size()];
		os << num(kx) << ',' << num(ky) << ',' << num(rs[i].r_mean) << ',' << num(rs[i].r_plus) << ','
		   << num(rs[i].r_minus) << ',' << to_string(stage_classify(kx, ky, spin)) << '\n';
	}
	return os.str();
}

std::string cmd_rcurve(const RunConfig& config)
{
	const SpinMagnitude spin(config.two_j);
	const auto pts = curve_points(config);
	for(const auto& p : pts) {
		point(config, p.kx, p.ky);
	}
	struct Row {
		ParityResolvedR r;
		std::size_t bound = 0;
	};
	const auto rows = parallel_map<Row>(pts.size(), config.workers, [&](std::size_t i) {
		const QuasiSpectrum q = quasi_spectrum(floquet_operator(point(config, pts[i].kx, pts[i].ky), spin));
		return Row{parity_resolved_r(q), detect_bound_states(q, config.tol_bound).size()};
	});

	std::ostringstream os;
	os << header(config) << "kxky,kx,ky,value,r_plus,r_minus,bound_states,stage\n";
	for(std::size_t i = 0; i < pts.size(); ++i) {
		os << num(pts[i].kxky) << ',' << num(pts[i].kx) << ',' << num(pts[i].ky) << ',' << num(rows[i].r.r_mean)
		   << ',' << num(rows[i].r.r_plus) << ',' << num(rows[i].r.r_minus) << ',' << rows[i].bound << ','
		   << to_string(stage_classify(pts[i].kx, pts[i].ky, spin)) << '\n';
	}
	return os.str();
}

std::string cmd_entropy(const RunConfig& config)
{
	const SpinMagnitude spin(config.two_j);
	const auto pts = curve_points(config);
	for(const auto& p : pts) {
		point(config, p.kx, p.ky);
	}
	const SphereGrid grid = make_sphere_grid(config.n_theta, config.n_phi);
	const auto rows = parallel_map<LocalizationResult>(pts.size(), config.workers, [&](std::size_t i) {
		return sphere_averaged_s2(floquet_operator(point(config, pts[i].kx, pts[i].ky), spin), grid);
	});

	std::ostringstream os;
	os << header(config) << "kxky,kx,ky,value,baseline_coe,stage\n";
	for(std::size_t i = 0; i < pts.size(); ++i) {
		os << num(pts[i].kxky) << ',' << num(pts[i].kx) << ',' << num(pts[i].ky) << ',' << num(rows[i].mean) << ','
		   << num(rows[i].baseline_coe) << ',' << to_string(stage_classify(pts[i].kx, pts[i].ky, spin)) << '\n';
	}
	return os.str();
}

std::string cmd_dynamics(const RunConfig& config)
{
	if(config.effective_variant() != Variant::Plain || config.delta != 0.0) {
		throw ConfigError("dynamics: only the plain variant without delta is supported");
	}
	if(!(config.kappa_y > 0.0)) {
		throw ConfigError("dynamics: --kappa-y must be positive");
	}
	if(config.n_x.empty() == config.kx_list.empty()) {
		throw ConfigError("dynamics: give exactly one of --nx or --kx-list");
	}
	const SpinMagnitude spin(config.two_j);
	const DynamicalScan scan
	    = config.n_x.empty()
	          ? dynamical_scan_kappa(spin, config.kappa_y, config.z0, config.kx_list, config.n_max, config.workers)
	          : dynamical_scan(spin, config.kappa_y, config.z0, config.n_x, config.n_max, config.n_y, config.workers);

	std::ostringstream os;
	os << header(config);
	os << "# border_kx: " << num(chaotic_border_kappa_x(spin, config.kappa_y)) << '\n';
	os << "n,kx,jz_mean_over_j,jz_std_over_j\n";
	const double j = spin.j();
	for(std::size_t c = 0; c < scan.series.size(); ++c) {
		const auto& s = scan.series[c];
		for(std::size_t n = 0; n < s.jz_mean.size(); ++n) {
			os << n << ',' << num(scan.kappa_x[c]) << ',' << num(s.jz_mean[n] / j) << ',' << num(s.jz_std[n] / j)
			   << '\n';
		}
	}
	return os.str();
}

std::string cmd_symcheck(const RunConfig& config)
{
	if(!config.kx || !config.ky || config.kx->lo != config.kx->hi || config.ky->lo != config.ky->hi) {
		throw ConfigError("symcheck: --kx and --ky must be single values");
	}
	const SpinMagnitude spin(config.two_j);
	const FloquetOperator op = floquet_operator(point(config, config.kx->lo, config.ky->lo), spin);
	const SymmetryReport rep = verify_symmetries(op);

	nlohmann::json j;
	j["schema"] = kSchemaVersion;
	j["config"] = to_json(config);
	j["symmetrized"] = rep.symmetrized;
	j["parity_offblock_norm"] = rep.parity_offblock_norm;
	j["unitarity_defect"] = op.unitarity_defect();
	nlohmann::json rel = nlohmann::json::object();
	for(const auto& r : rep.relations) {
		rel[r.name] = r.residual;
	}
	j["residuals"] = rel;
	nlohmann::json sq = nlohmann::json::object();
	for(const auto& [name, sign] : rep.squared_signs) {
		sq[name] = sign;
	}
	j["squared_signs"] = sq;
	return j.dump(2) + "\n";
}

std::string cmd_stages(const RunConfig& config)
{
	const SpinMagnitude spin(config.two_j);
	const StageBorders b = stage_borders(spin);
	const double j = spin.j();
	std::ostringstream os;
	os << header(config) << "border,exact,approx,approx_formula\n";
	os << "first," << num(b.first) << ',' << num(kPi * j / 2.0) << ",pi*j/2\n";
	os << "second," << num(b.second) << ',' << num(kPi * j) << ",pi*j\n";
	os << "third," << num(b.third) << ',' << num(2.0 * kPi * j) << ",2*pi*j\n";
	return os.str();
}

std::string run(const RunConfig& config)
{
	config.validate();
	const std::string& s = config.subcommand;
	if(s == "spectrum") {
		return cmd_spectrum(config);
	}
	if(s == "rgrid") {
		return cmd_rgrid(config);
	}
	if(s == "rcurve") {
		return cmd_rcurve(config);
	}
	if(s == "entropy") {
		return cmd_entropy(config);
	}
	if(s == "dynamics") {
		return cmd_dynamics(config);
	}
	if(s == "symcheck") {
		return cmd_symcheck(config);
	}
	return cmd_stages(config);
}

} // namespace kicktop::cli
