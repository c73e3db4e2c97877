#include "kicktop/symmetries.hpp"

#include "kicktop/floquet.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <map>
#include <mutex>

namespace kicktop {

std::string to_string(SymmetryKind kind)
{
	switch(kind) {
	case SymmetryKind::Parity: return "parity";
	case SymmetryKind::TimeReversal1: return "time_reversal_1";
	case SymmetryKind::TimeReversal2: return "time_reversal_2";
	case SymmetryKind::ParticleHole: return "particle_hole";
	case SymmetryKind::Chiral: return "chiral";
	}
	return "unknown";
}

Matrix SymmetryOperator::conjugate(const Matrix& x) const
{
	if(antiunitary) {
		return unitary * x.conjugate() * unitary.adjoint();
	}
	return unitary * x * unitary.adjoint();
}

Matrix SymmetryOperator::squared() const
{
	return antiunitary ? Matrix(unitary * unitary.conjugate()) : Matrix(unitary * unitary);
}

std::vector<int> parity_labels(SpinMagnitude spin)
{
	const CoupledBasis basis(spin);
	const int two_j = spin.two_j();
	std::vector<int> labels(basis.dim());
	for(int i = 0; i < basis.dim(); ++i) {
		// 2(m + sigma_z/2) = 2k - 2j + sigma_z
		const int twice_q = 2 * basis.k_of(i) - two_j + (basis.s_of(i) == 0 ? 1 : -1);
		// 2j odd: exp(-i pi q) with integer q. 2j even: i exp(-i pi q), q = n + 1/2,
		// which equals (-1)^n.
		const int n = spin.two_j_odd() ? twice_q / 2 : (twice_q - 1) / 2;
		labels[i] = (n % 2 == 0) ? 1 : -1;
	}
	return labels;
}

Matrix SectorLayout::restrict(const Matrix& full, int sector) const
{
	const std::vector<int>& idx = indices[sector];
	const auto n = static_cast<Eigen::Index>(idx.size());
	Matrix out(n, n);
	for(Eigen::Index c = 0; c < n; ++c) {
		for(Eigen::Index r = 0; r < n; ++r) {
			out(r, c) = full(idx[r], idx[c]);
		}
	}
	return out;
}

Vector SectorLayout::restrict(const Vector& full, int sector) const
{
	const std::vector<int>& idx = indices[sector];
	Vector out(static_cast<Eigen::Index>(idx.size()));
	for(std::size_t r = 0; r < idx.size(); ++r) {
		out(static_cast<Eigen::Index>(r)) = full(idx[r]);
	}
	return out;
}

std::shared_ptr<const SectorLayout> sector_layout(SpinMagnitude spin)
{
	static std::mutex mutex;
	static std::map<int, std::shared_ptr<const SectorLayout>> cache;
	std::lock_guard<std::mutex> lock(mutex);
	if(auto it = cache.find(spin.two_j()); it != cache.end()) {
		return it->second;
	}
	SectorLayout layout{spin, {}};
	const std::vector<int> labels = parity_labels(spin);
	for(int i = 0; i < static_cast<int>(labels.size()); ++i) {
		layout.indices[labels[i] > 0 ? 0 : 1].push_back(i);
	}
	auto ptr = std::make_shared<const SectorLayout>(std::move(layout));
	cache.emplace(spin.two_j(), ptr);
	return ptr;
}

namespace {

Matrix total_y_rotation_by_pi(SpinMagnitude spin)
{
	const AngularMomentum am = angular_momentum_matrices(spin);
	const Matrix l = embed_top(am.jy.matrix) + embed_spin(spin, pauli(Axis::Y)) * 0.5;
	Eigen::SelfAdjointEigenSolver<Matrix> es(l);
	if(es.info() != Eigen::Success) {
		throw NumericalError("total-spin eigendecomposition failed");
	}
	const Vector phases = (es.eigenvalues().cast<cplx>() * (-kI * kPi)).array().exp();
	return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double max_abs(const Matrix& m)
{
	return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

int squared_sign_of(const SymmetryOperator& op)
{
	const Matrix sq = op.squared();
	const Eigen::Index d = sq.rows();
	const double sign = sq.trace().real() / static_cast<double>(d) >= 0.0 ? 1.0 : -1.0;
	if(max_abs(sq - sign * Matrix::Identity(d, d)) > 1e-8) {
		throw NumericalError("squared symmetry operator is not +-1: " + to_string(op.kind));
	}
	return static_cast<int>(sign);
}

} // namespace

SymmetryOperator symmetry_operator(SymmetryKind kind, SpinMagnitude spin)
{
	const int d = spin.dim();
	const CoupledBasis basis(spin);
	SymmetryOperator op{kind, Matrix::Identity(d, d), false};
	switch(kind) {
	case SymmetryKind::Parity: {
		const std::vector<int> labels = parity_labels(spin);
		for(int i = 0; i < d; ++i) {
			op.unitary(i, i) = static_cast<double>(labels[i]);
		}
		break;
	}
	case SymmetryKind::TimeReversal1:
		op.antiunitary = true;
		break;
	case SymmetryKind::TimeReversal2:
		op.unitary = total_y_rotation_by_pi(spin);
		op.antiunitary = true;
		break;
	case SymmetryKind::ParticleHole:
		// exp(-i pi/2 sigma_z)
		for(int i = 0; i < d; ++i) {
			op.unitary(i, i) = basis.s_of(i) == 0 ? -kI : kI;
		}
		op.antiunitary = true;
		break;
	case SymmetryKind::Chiral:
		for(int i = 0; i < d; ++i) {
			op.unitary(i, i) = basis.sigma_z_of(i);
		}
		break;
	}
	return op;
}

double SymmetryReport::residual(const std::string& name) const
{
	for(const auto& r : relations) {
		if(r.name == name) {
			return r.residual;
		}
	}
	throw ConfigError("no relation named " + name);
}

int SymmetryReport::squared_sign(const std::string& name) const
{
	for(const auto& [n, s] : squared_signs) {
		if(n == name) {
			return s;
		}
	}
	throw ConfigError("no squared sign named " + name);
}

SymmetryReport verify_symmetries(const FloquetOperator& op)
{
	const SpinMagnitude spin = op.spin();
	// Relations are checked on the dense reference construction so that the
	// parity block structure used by FloquetOperator is itself under test.
	const Matrix u = reference_floquet_matrix(op.params(), spin);
	const Matrix u_inv = u.adjoint();

	const auto parity = symmetry_operator(SymmetryKind::Parity, spin);
	const auto t1 = symmetry_operator(SymmetryKind::TimeReversal1, spin);
	const auto t2 = symmetry_operator(SymmetryKind::TimeReversal2, spin);
	const auto ph = symmetry_operator(SymmetryKind::ParticleHole, spin);
	const auto chiral = symmetry_operator(SymmetryKind::Chiral, spin);
	const Matrix& pi_mat = parity.unitary;

	SymmetryReport report;
	report.spin = spin;
	report.symmetrized = op.params().variant != Variant::Plain;
	report.relations = {
		{"parity", max_abs(parity.conjugate(u) - u)},
		{"time_reversal_1", max_abs(t1.conjugate(u) - u_inv)},
		{"time_reversal_2", max_abs(t2.conjugate(u) - u_inv)},
		{"particle_hole", max_abs(ph.conjugate(u) - u)},
		{"chiral", max_abs(chiral.conjugate(u) - u_inv)},
		{"t1_parity", max_abs(t1.conjugate(pi_mat) - pi_mat)},
		{"t2_parity", max_abs(t2.conjugate(pi_mat) - (spin.two_j_odd() ? 1.0 : -1.0) * pi_mat)},
		{"particle_hole_parity", max_abs(ph.conjugate(pi_mat) - pi_mat)},
		{"chiral_parity", max_abs(chiral.conjugate(pi_mat) - pi_mat)},
	};
	for(const auto* s : {&parity, &t1, &t2, &ph, &chiral}) {
		report.squared_signs.emplace_back(to_string(s->kind), squared_sign_of(*s));
	}

	const std::vector<int> labels = parity_labels(spin);
	double off = 0.0;
	for(Eigen::Index c = 0; c < u.cols(); ++c) {
		for(Eigen::Index r = 0; r < u.rows(); ++r) {
			if(labels[r] != labels[c]) {
				off = std::max(off, std::abs(u(r, c)));
			}
		}
	}
	report.parity_offblock_norm = off;
	report.relations.push_back({"blocked_vs_reference", max_abs(op.matrix() - u)});
	return report;
}

} // namespace kicktop
