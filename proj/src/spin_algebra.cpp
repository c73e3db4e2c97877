#include "kicktop/spin_algebra.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>

namespace kicktop {

AngularMomentum angular_momentum_matrices(SpinMagnitude spin)
{
	const int d = spin.top_dim();
	const double j = spin.j();

	Matrix jplus = Matrix::Zero(d, d);
	Matrix jz = Matrix::Zero(d, d);
	for(int k = 0; k < d; ++k) {
		const double m = k - j;
		jz(k, k) = m;
		if(k + 1 < d) {
			jplus(k + 1, k) = std::sqrt(j * (j + 1.0) - m * (m + 1.0));
		}
	}
	Matrix jminus = jplus.adjoint();

	AngularMomentum out;
	out.jx = {(jplus + jminus) * 0.5, true};
	out.jy = {(jplus - jminus) / (2.0 * kI), true};
	out.jz = {std::move(jz), true};
	out.jplus = {std::move(jplus), false};
	out.jminus = {std::move(jminus), false};
	return out;
}

Eigen::Matrix2cd pauli(Axis axis)
{
	Eigen::Matrix2cd s;
	switch(axis) {
	case Axis::X: s << 0.0, 1.0, 1.0, 0.0; break;
	case Axis::Y: s << 0.0, -kI, kI, 0.0; break;
	case Axis::Z: s << 1.0, 0.0, 0.0, -1.0; break;
	}
	return s;
}

namespace {

Matrix kron(const Matrix& top, const Eigen::Matrix2cd& s)
{
	const Eigen::Index d = top.rows();
	Matrix out = Matrix::Zero(2 * d, 2 * d);
	for(Eigen::Index c = 0; c < d; ++c) {
		for(Eigen::Index r = 0; r < d; ++r) {
			const cplx a = top(r, c);
			if(a == cplx{}) {
				continue;
			}
			out.block<2, 2>(2 * r, 2 * c) = a * s;
		}
	}
	return out;
}

} // namespace

Matrix embed_top(const Matrix& top_op)
{
	return kron(top_op, Eigen::Matrix2cd::Identity());
}

Matrix embed_spin(SpinMagnitude spin, const Eigen::Matrix2cd& spin_op)
{
	return kron(Matrix::Identity(spin.top_dim(), spin.top_dim()), spin_op);
}

OperatorMatrix coupling_operator(Axis axis, SpinMagnitude spin)
{
	const AngularMomentum am = angular_momentum_matrices(spin);
	const Matrix& ja = axis == Axis::X ? am.jx.matrix : axis == Axis::Y ? am.jy.matrix : am.jz.matrix;
	return {kron(ja, pauli(axis)), true};
}

CoherentStateFactory::CoherentStateFactory(SpinMagnitude spin) : spin_{spin}
{
	const AngularMomentum am = angular_momentum_matrices(spin);
	Eigen::SelfAdjointEigenSolver<Matrix> es(am.jy.matrix);
	if(es.info() != Eigen::Success) {
		throw NumericalError("Jy eigendecomposition failed");
	}
	jy_eigenvalues_ = es.eigenvalues();
	jy_eigenvectors_ = es.eigenvectors();
	// |j, j> is the last Dicke state.
	highest_weight_in_eigenbasis_ = jy_eigenvectors_.row(spin.top_dim() - 1).adjoint();
}

Vector CoherentStateFactory::polar_column(double theta) const
{
	const Vector phases = (jy_eigenvalues_.cast<cplx>() * (-kI * theta)).array().exp();
	return jy_eigenvectors_ * phases.cwiseProduct(highest_weight_in_eigenbasis_);
}

Vector CoherentStateFactory::top_state(double theta, double phi) const
{
	Vector v = polar_column(theta);
	const double j = spin_.j();
	for(Eigen::Index k = 0; k < v.size(); ++k) {
		v(k) *= std::exp(-kI * phi * (static_cast<double>(k) - j));
	}
	return v;
}

StateVector coherent_state(SpinMagnitude spin, double theta, double phi)
{
	if(!(theta >= 0.0 && theta <= kPi)) {
		throw ConfigError("coherent_state: theta must lie in [0, pi]");
	}
	return {CoherentStateFactory(spin).top_state(theta, phi)};
}

Vector product_state(const Vector& top, const Eigen::Vector2cd& spin)
{
	Vector out(2 * top.size());
	for(Eigen::Index k = 0; k < top.size(); ++k) {
		out(2 * k) = top(k) * spin(0);
		out(2 * k + 1) = top(k) * spin(1);
	}
	return out;
}

StateVector probe_state(SpinMagnitude spin, double theta, double phi)
{
	const StateVector top = coherent_state(spin, theta, phi);
	const double h = 1.0 / std::sqrt(2.0);
	return {product_state(top.amplitudes, Eigen::Vector2cd(h, h))};
}

cplx expectation(const OperatorMatrix& op, const StateVector& psi)
{
	if(op.matrix.rows() != psi.size() || op.matrix.cols() != psi.size()) {
		throw ConfigError("expectation: operator and state dimensions differ");
	}
	return psi.amplitudes.dot(op.matrix * psi.amplitudes);
}

} // namespace kicktop
