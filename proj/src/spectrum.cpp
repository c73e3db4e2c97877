#include "kicktop/spectrum.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cmath>
#include <numeric>

namespace kicktop {

namespace {

// Offset phase of the Hermitian surrogate. Generic, so that the chiral pairs
// (eps, -eps) do not collide in cos(eps - a).
constexpr double kSurrogatePhase = 0.5;

double quasienergy_of(const Matrix& u, const Eigen::Ref<const Vector>& v)
{
	return wrap_quasienergy(-std::arg(v.dot(u * v)));
}

/// Runs of consecutive sorted values whose neighbour gap is below tol.
std::vector<std::pair<Eigen::Index, Eigen::Index>> runs(const RealVector& sorted, double tol)
{
	std::vector<std::pair<Eigen::Index, Eigen::Index>> out;
	Eigen::Index start = 0;
	for(Eigen::Index i = 1; i <= sorted.size(); ++i) {
		if(i == sorted.size() || sorted(i) - sorted(i - 1) > tol) {
			if(i - start > 1) {
				out.emplace_back(start, i - start);
			}
			start = i;
		}
	}
	return out;
}

/// Groups of state indices whose quasi-energies agree within tol on the circle.
std::vector<std::vector<Eigen::Index>> degenerate_groups(const std::vector<double>& eps, double tol)
{
	std::vector<Eigen::Index> order(eps.size());
	std::iota(order.begin(), order.end(), 0);
	std::stable_sort(order.begin(), order.end(), [&](auto a, auto b) { return eps[a] < eps[b]; });

	std::vector<std::vector<Eigen::Index>> groups;
	for(std::size_t i = 0; i < order.size(); ++i) {
		if(i > 0 && eps[order[i]] - eps[order[i - 1]] <= tol) {
			groups.back().push_back(order[i]);
		}
		else {
			groups.push_back({order[i]});
		}
	}
	// The branch cut at +-pi is not a physical boundary.
	if(groups.size() > 1) {
		const double wrap_gap = eps[groups.front().front()] + 2.0 * kPi - eps[groups.back().back()];
		if(wrap_gap <= tol) {
			groups.front().insert(groups.front().end(), groups.back().begin(), groups.back().end());
			groups.pop_back();
		}
	}
	std::erase_if(groups, [](const auto& g) { return g.size() < 2; });
	return groups;
}

Matrix gather_columns(const Matrix& m, const std::vector<Eigen::Index>& cols)
{
	Matrix out(m.rows(), static_cast<Eigen::Index>(cols.size()));
	for(std::size_t c = 0; c < cols.size(); ++c) {
		out.col(static_cast<Eigen::Index>(c)) = m.col(cols[c]);
	}
	return out;
}

} // namespace

double wrap_quasienergy(double eps)
{
	double e = std::remainder(eps, 2.0 * kPi);
	if(e <= -kPi) {
		e += 2.0 * kPi;
	}
	return e + 0.0;  // no -0
}

UnitaryEigensystem diagonalize_unitary(const Matrix& u, const RealVector* gauge_diagonal,
                                       const UnitaryEigenOptions& options)
{
	const Eigen::Index n = u.rows();
	if(u.cols() != n) {
		throw ConfigError("diagonalize_unitary: matrix is not square");
	}
	UnitaryEigensystem out;
	if(n == 0) {
		return out;
	}
	const double defect = (u.adjoint() * u - Matrix::Identity(n, n)).cwiseAbs().maxCoeff();
	if(defect > options.unitarity_tol) {
		throw NumericalError("diagonalize_unitary: input is not unitary (defect "
		                     + std::to_string(defect) + ")");
	}

	const cplx rot = std::exp(kI * kSurrogatePhase);
	const Matrix h = (rot * u + std::conj(rot) * u.adjoint()) * 0.5;
	Eigen::SelfAdjointEigenSolver<Matrix> es(h);
	if(es.info() != Eigen::Success) {
		throw NumericalError("diagonalize_unitary: Hermitian eigensolver failed");
	}
	Matrix v = es.eigenvectors();

	// Near-equal surrogate eigenvalues may mix distinct eigenvectors of U.
	for(const auto& [start, len] : runs(es.eigenvalues(), options.cluster_tol)) {
		const Matrix block = v.middleCols(start, len);
		const Matrix projected = block.adjoint() * u * block;
		Eigen::ComplexSchur<Matrix> schur(projected);
		if(schur.info() != Eigen::Success) {
			throw NumericalError("diagonalize_unitary: cluster Schur decomposition failed");
		}
		v.middleCols(start, len) = block * schur.matrixU();
	}

	out.epsilons.resize(static_cast<std::size_t>(n));
	for(Eigen::Index c = 0; c < n; ++c) {
		out.epsilons[c] = quasienergy_of(u, v.col(c));
	}

	if(gauge_diagonal != nullptr) {
		for(const auto& group : degenerate_groups(out.epsilons, options.degeneracy_tol)) {
			const Matrix block = gather_columns(v, group);
			Matrix g = block.adjoint() * gauge_diagonal->cast<cplx>().asDiagonal() * block;
			g = (g + g.adjoint()).eval() * 0.5;
			Eigen::SelfAdjointEigenSolver<Matrix> ges(g);
			if(ges.info() != Eigen::Success) {
				throw NumericalError("diagonalize_unitary: gauge eigensolver failed");
			}
			const Matrix rotated = block * ges.eigenvectors();
			for(std::size_t c = 0; c < group.size(); ++c) {
				v.col(group[c]) = rotated.col(static_cast<Eigen::Index>(c));
				out.epsilons[group[c]] = quasienergy_of(u, v.col(group[c]));
			}
		}
	}

	const Matrix uv = u * v;
	double worst = 0.0;
	for(Eigen::Index c = 0; c < n; ++c) {
		const cplx phase = std::exp(-kI * out.epsilons[c]);
		worst = std::max(worst, (uv.col(c) - phase * v.col(c)).norm());
	}
	if(worst > options.unitarity_tol) {
		throw NumericalError("diagonalize_unitary: eigen-residual " + std::to_string(worst));
	}
	out.max_residual = worst;
	out.vectors = std::move(v);
	return out;
}

namespace {

RealVector sector_sigma_z(const SectorLayout& layout, int sector)
{
	const CoupledBasis basis(layout.spin);
	const auto& idx = layout.indices[sector];
	RealVector d(static_cast<Eigen::Index>(idx.size()));
	for(std::size_t i = 0; i < idx.size(); ++i) {
		d(static_cast<Eigen::Index>(i)) = basis.sigma_z_of(idx[i]);
	}
	return d;
}

} // namespace

QuasiSpectrum quasi_spectrum(const FloquetOperator& op)
{
	const SectorLayout& layout = op.sectors();
	const int dim = op.spin().dim();

	struct Entry {
		double eps;
		int sector;
		Eigen::Index column;
	};
	std::vector<Entry> entries;
	entries.reserve(static_cast<std::size_t>(dim));
	std::array<UnitaryEigensystem, 2> parts;
	double worst = 0.0;
	for(int s = 0; s < 2; ++s) {
		const RealVector gauge = sector_sigma_z(layout, s);
		parts[s] = diagonalize_unitary(op.sector_block(s), &gauge);
		worst = std::max(worst, parts[s].max_residual);
		for(std::size_t c = 0; c < parts[s].epsilons.size(); ++c) {
			entries.push_back({parts[s].epsilons[c], s, static_cast<Eigen::Index>(c)});
		}
	}
	std::stable_sort(entries.begin(), entries.end(), [](const Entry& a, const Entry& b) {
		if(a.eps != b.eps) {
			return a.eps < b.eps;
		}
		return a.sector < b.sector;
	});

	QuasiSpectrum out;
	out.spin = op.spin();
	out.params = op.params();
	out.max_residual = worst;
	out.eigenvectors = Matrix::Zero(dim, dim);
	out.epsilons.reserve(entries.size());
	out.parity.reserve(entries.size());
	for(std::size_t n = 0; n < entries.size(); ++n) {
		const Entry& e = entries[n];
		out.epsilons.push_back(e.eps);
		out.parity.push_back(e.sector == 0 ? 1 : -1);
		const auto& idx = layout.indices[e.sector];
		for(std::size_t r = 0; r < idx.size(); ++r) {
			out.eigenvectors(idx[r], static_cast<Eigen::Index>(n))
			    = parts[e.sector].vectors(static_cast<Eigen::Index>(r), e.column);
		}
	}
	return out;
}

std::vector<double> sector_quasienergies(const FloquetOperator& op, int sector)
{
	std::vector<double> eps = diagonalize_unitary(op.sector_block(sector)).epsilons;
	std::sort(eps.begin(), eps.end());
	return eps;
}

double mean_spacing_ratio(std::span<const double> levels, double degeneracy_tol)
{
	if(levels.size() < 3) {
		throw ConfigError("mean_spacing_ratio: need at least 3 levels");
	}
	std::vector<double> sorted(levels.begin(), levels.end());
	std::sort(sorted.begin(), sorted.end());
	std::vector<double> gaps(sorted.size() - 1);
	for(std::size_t n = 0; n + 1 < sorted.size(); ++n) {
		const double d = sorted[n + 1] - sorted[n];
		gaps[n] = d <= degeneracy_tol ? 0.0 : d;
	}
	double sum = 0.0;
	for(std::size_t n = 0; n + 1 < gaps.size(); ++n) {
		const double lo = std::min(gaps[n], gaps[n + 1]);
		const double hi = std::max(gaps[n], gaps[n + 1]);
		sum += hi == 0.0 ? 1.0 : lo / hi;
	}
	return sum / static_cast<double>(gaps.size() - 1);
}

namespace {

ParityResolvedR combine(const std::vector<double>& plus, const std::vector<double>& minus)
{
	if(plus.size() < 3 || minus.size() < 3) {
		throw ConfigError("parity_resolved_r: each sector needs at least 3 states");
	}
	ParityResolvedR r;
	r.r_plus = mean_spacing_ratio(plus, kSpacingDegeneracyTol);
	r.r_minus = mean_spacing_ratio(minus, kSpacingDegeneracyTol);
	const double wp = static_cast<double>(plus.size() - 2);
	const double wm = static_cast<double>(minus.size() - 2);
	r.r_mean = (wp * r.r_plus + wm * r.r_minus) / (wp + wm);
	return r;
}

} // namespace

ParityResolvedR parity_resolved_r(const FloquetOperator& op)
{
	return combine(sector_quasienergies(op, 0), sector_quasienergies(op, 1));
}

ParityResolvedR parity_resolved_r(const QuasiSpectrum& spectrum)
{
	std::vector<double> plus;
	std::vector<double> minus;
	for(std::size_t n = 0; n < spectrum.epsilons.size(); ++n) {
		(spectrum.parity[n] > 0 ? plus : minus).push_back(spectrum.epsilons[n]);
	}
	return combine(plus, minus);
}

std::string to_string(StageLabel s)
{
	switch(s) {
	case StageLabel::Topological: return "topological";
	case StageLabel::QuasiIntegrable: return "quasi_integrable";
	case StageLabel::Transition: return "transition";
	case StageLabel::Chaotic: return "chaotic";
	}
	return "unknown";
}

StageBorders stage_borders(SpinMagnitude spin)
{
	const double base = kPi * (spin.two_j() + 1);
	return {base / 4.0, base / 2.0, base};
}

StageLabel stage_classify(double kappa_x, double kappa_y, SpinMagnitude spin)
{
	if(!(kappa_x >= 0.0) || !(kappa_y >= 0.0)) {
		throw ConfigError("stage_classify: kick strengths must be non-negative");
	}
	const StageBorders b = stage_borders(spin);
	const double p = kappa_x * kappa_y;
	if(p >= b.third) {
		return StageLabel::Chaotic;
	}
	if(p >= b.second) {
		return StageLabel::Transition;
	}
	if(p >= b.first) {
		return StageLabel::QuasiIntegrable;
	}
	return StageLabel::Topological;
}

double chiral_expectation(const StateVector& state)
{
	const Vector& a = state.amplitudes;
	double value = 0.0;
	for(Eigen::Index i = 0; i < a.size(); ++i) {
		value += (i % 2 == 0 ? 1.0 : -1.0) * std::norm(a(i));
	}
	return value;
}

std::vector<BoundStateRecord> detect_bound_states(const QuasiSpectrum& spectrum, double tol)
{
	if(!(tol > 0.0)) {
		throw ConfigError("detect_bound_states: tol must be positive");
	}
	std::vector<BoundStateRecord> out;
	for(std::size_t n = 0; n < spectrum.epsilons.size(); ++n) {
		const double eps = spectrum.epsilons[n];
		const double to_zero = std::abs(eps);
		const double to_pi = kPi - std::abs(eps);
		const double distance = std::min(to_zero, to_pi);
		if(distance > tol) {
			continue;
		}
		BoundStateRecord rec;
		rec.index = static_cast<int>(n);
		rec.epsilon = eps;
		rec.target = to_zero <= to_pi ? 0.0 : kPi;
		rec.distance = distance;
		rec.chiral = chiral_expectation({spectrum.eigenvectors.col(static_cast<Eigen::Index>(n))});
		out.push_back(rec);
	}
	return out;
}

} // namespace kicktop
