#include "kicktop/floquet.hpp"

#include <Eigen/Eigenvalues>

#include <map>
#include <mutex>
#include <utility>

namespace kicktop {

std::string to_string(Variant v)
{
	switch(v) {
	case Variant::Plain: return "plain";
	case Variant::Symmetrized1: return "sym1";
	case Variant::Symmetrized2: return "sym2";
	}
	return "plain";
}

Variant parse_variant(const std::string& name)
{
	if(name == "plain") {
		return Variant::Plain;
	}
	if(name == "sym1") {
		return Variant::Symmetrized1;
	}
	if(name == "sym2") {
		return Variant::Symmetrized2;
	}
	throw ConfigError("unknown variant '" + name + "' (expected plain, sym1, sym2)");
}

void KickParams::validate() const
{
	if(!(kappa_x >= 0.0) || !(kappa_y >= 0.0)) {
		throw ConfigError("kick strengths must be non-negative");
	}
	if(!(delta >= 0.0)) {
		throw ConfigError("delta must be non-negative");
	}
	if(delta > 0.0 && variant != Variant::Plain) {
		throw ConfigError("symmetrized variants require delta = 0");
	}
}

namespace {

GeneratorFactors compute_factors(SpinMagnitude spin, Axis axis)
{
	const auto layout = sector_layout(spin);
	const Matrix g = coupling_operator(axis, spin).matrix / spin.j();
	GeneratorFactors f{spin, axis, {}, {}};
	for(int s = 0; s < 2; ++s) {
		Eigen::SelfAdjointEigenSolver<Matrix> es(layout->restrict(g, s));
		if(es.info() != Eigen::Success) {
			throw NumericalError("generator eigendecomposition failed");
		}
		f.eigenvalues[s] = es.eigenvalues();
		f.eigenvectors[s] = es.eigenvectors();
	}
	return f;
}

/// V diag(exp(-i c lambda)) V^dag.
Matrix spectral_exp(const RealVector& lambda, const Matrix& v, double c)
{
	const Vector phases = (lambda.cast<cplx>() * (-kI * c)).array().exp();
	return v * phases.asDiagonal() * v.adjoint();
}

/// Sector block of exp(-i[(kappa/j) J_a sigma_a + delta sigma_z] * fraction).
Matrix sector_kick(const GeneratorFactors& f, const SectorLayout& layout, int sector, double kappa,
                   double delta, double fraction)
{
	if(delta == 0.0) {
		if(kappa == 0.0) {
			const Eigen::Index n = f.eigenvalues[sector].size();
			return Matrix::Identity(n, n);
		}
		return spectral_exp(f.eigenvalues[sector], f.eigenvectors[sector], kappa * fraction);
	}
	// delta > 0: no kappa-scaling structure, decompose directly.
	const std::vector<int>& idx = layout.indices[sector];
	const CoupledBasis basis(f.spin);
	Matrix h = f.eigenvectors[sector] * (f.eigenvalues[sector] * kappa).asDiagonal()
	           * f.eigenvectors[sector].adjoint();
	for(std::size_t r = 0; r < idx.size(); ++r) {
		h(r, r) += delta * basis.sigma_z_of(idx[r]);
	}
	h = (h + h.adjoint()).eval() * 0.5;
	Eigen::SelfAdjointEigenSolver<Matrix> es(h);
	if(es.info() != Eigen::Success) {
		throw NumericalError("kick eigendecomposition failed");
	}
	return spectral_exp(es.eigenvalues(), es.eigenvectors(), fraction);
}

Matrix scatter(const SectorLayout& layout, const std::array<Matrix, 2>& blocks)
{
	const int d = layout.spin.dim();
	Matrix full = Matrix::Zero(d, d);
	for(int s = 0; s < 2; ++s) {
		const std::vector<int>& idx = layout.indices[s];
		for(std::size_t c = 0; c < idx.size(); ++c) {
			for(std::size_t r = 0; r < idx.size(); ++r) {
				full(idx[r], idx[c]) = blocks[s](r, c);
			}
		}
	}
	return full;
}

} // namespace

std::shared_ptr<const GeneratorFactors> generator_factors(SpinMagnitude spin, Axis axis)
{
	if(axis == Axis::Z) {
		throw ConfigError("kicks are defined for the x and y axes only");
	}
	static std::mutex mutex;
	static std::map<std::pair<int, int>, std::shared_ptr<const GeneratorFactors>> cache;
	const auto key = std::make_pair(spin.two_j(), static_cast<int>(axis));
	{
		std::lock_guard<std::mutex> lock(mutex);
		if(auto it = cache.find(key); it != cache.end()) {
			return it->second;
		}
	}
	// Computed outside the lock; a concurrent duplicate is discarded.
	auto fresh = std::make_shared<const GeneratorFactors>(compute_factors(spin, axis));
	std::lock_guard<std::mutex> lock(mutex);
	return cache.emplace(key, std::move(fresh)).first->second;
}

Matrix kick_unitary(Axis axis, double kappa, SpinMagnitude spin, double delta)
{
	if(!(kappa >= 0.0) || !(delta >= 0.0)) {
		throw ConfigError("kick_unitary: kappa and delta must be non-negative");
	}
	const auto f = generator_factors(spin, axis);
	const auto layout = sector_layout(spin);
	std::array<Matrix, 2> blocks;
	for(int s = 0; s < 2; ++s) {
		blocks[s] = sector_kick(*f, *layout, s, kappa, delta, 1.0);
	}
	return scatter(*layout, blocks);
}

double FloquetOperator::unitarity_defect() const
{
	const Eigen::Index d = full_.rows();
	return (full_.adjoint() * full_ - Matrix::Identity(d, d)).cwiseAbs().maxCoeff();
}

void FloquetOperator::assemble()
{
	const SectorLayout& layout = *layout_;
	const double kx = params_.kappa_x;
	const double ky = params_.kappa_y;
	const double delta = params_.delta;
	for(int s = 0; s < 2; ++s) {
		switch(params_.variant) {
		case Variant::Plain: {
			const Matrix kick_x = sector_kick(*x_factors_, layout, s, kx, delta, 1.0);
			const Matrix kick_y = sector_kick(*y_factors_, layout, s, ky, delta, 1.0);
			blocks_[s] = kick_y * kick_x;
			break;
		}
		case Variant::Symmetrized1: {
			const Matrix half_y = sector_kick(*y_factors_, layout, s, ky, delta, 0.5);
			const Matrix kick_x = sector_kick(*x_factors_, layout, s, kx, delta, 1.0);
			blocks_[s] = half_y * kick_x * half_y;
			break;
		}
		case Variant::Symmetrized2: {
			const Matrix half_x = sector_kick(*x_factors_, layout, s, kx, delta, 0.5);
			const Matrix kick_y = sector_kick(*y_factors_, layout, s, ky, delta, 1.0);
			blocks_[s] = half_x * kick_y * half_x;
			break;
		}
		}
	}
	full_ = scatter(layout, blocks_);
}

FloquetOperator floquet_operator(const KickParams& params, SpinMagnitude spin)
{
	params.validate();
	FloquetOperator op(spin, params);
	op.layout_ = sector_layout(spin);
	op.x_factors_ = generator_factors(spin, Axis::X);
	op.y_factors_ = generator_factors(spin, Axis::Y);
	op.assemble();
	return op;
}

namespace {

Matrix dense_kick(Axis axis, double kappa, SpinMagnitude spin, double delta, double fraction)
{
	Matrix h = coupling_operator(axis, spin).matrix * (kappa / spin.j());
	if(delta != 0.0) {
		h += embed_spin(spin, pauli(Axis::Z)) * delta;
	}
	Eigen::SelfAdjointEigenSolver<Matrix> es(h);
	if(es.info() != Eigen::Success) {
		throw NumericalError("kick eigendecomposition failed");
	}
	return spectral_exp(es.eigenvalues(), es.eigenvectors(), fraction);
}

} // namespace

Matrix reference_floquet_matrix(const KickParams& params, SpinMagnitude spin)
{
	params.validate();
	const double kx = params.kappa_x;
	const double ky = params.kappa_y;
	const double delta = params.delta;
	switch(params.variant) {
	case Variant::Plain:
		return dense_kick(Axis::Y, ky, spin, delta, 1.0) * dense_kick(Axis::X, kx, spin, delta, 1.0);
	case Variant::Symmetrized1: {
		const Matrix half_y = dense_kick(Axis::Y, ky, spin, delta, 0.5);
		return half_y * dense_kick(Axis::X, kx, spin, delta, 1.0) * half_y;
	}
	case Variant::Symmetrized2: {
		const Matrix half_x = dense_kick(Axis::X, kx, spin, delta, 0.5);
		return half_x * dense_kick(Axis::Y, ky, spin, delta, 1.0) * half_x;
	}
	}
	throw ConfigError("unknown variant");
}

FloquetOperator refresh(const FloquetOperator& op, const KickParams& new_params)
{
	new_params.validate();
	if(new_params.variant != op.params_.variant) {
		throw ConfigError("refresh: variant differs from the cached operator");
	}
	if(new_params.delta != op.params_.delta) {
		throw ConfigError("refresh: delta differs from the cached operator");
	}
	if(new_params.kappa_x == op.params_.kappa_x && new_params.kappa_y == op.params_.kappa_y) {
		return op;
	}
	FloquetOperator out(op.spin_, new_params);
	out.layout_ = op.layout_;
	out.x_factors_ = op.x_factors_;
	out.y_factors_ = op.y_factors_;
	out.assemble();
	return out;
}

} // namespace kicktop
