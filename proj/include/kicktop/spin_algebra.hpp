#pragma once

#include "kicktop/core.hpp"

#include <array>

namespace kicktop {

enum class Axis { X, Y, Z };

struct OperatorMatrix {
	Matrix matrix;
	bool hermitian = false;
};

/// Dense state on the coupled space (dimension D) or on the top alone (2j + 1).
struct StateVector {
	Vector amplitudes;

	[[nodiscard]] Eigen::Index size() const { return amplitudes.size(); }
	[[nodiscard]] double norm() const { return amplitudes.norm(); }
};

struct AngularMomentum {
	OperatorMatrix jx, jy, jz, jplus, jminus;
};

/// J_x, J_y, J_z, J_+, J_- on the Dicke basis |j, m>, m ascending.
AngularMomentum angular_momentum_matrices(SpinMagnitude spin);

/// Pauli matrix in the {up, down} ordering (sigma_z = diag(+1, -1)).
Eigen::Matrix2cd pauli(Axis axis);

/// A (x) 1 on the coupled space.
Matrix embed_top(const Matrix& top_op);
/// 1 (x) sigma on the coupled space.
Matrix embed_spin(SpinMagnitude spin, const Eigen::Matrix2cd& spin_op);

/// J_a sigma_a on the coupled space.
OperatorMatrix coupling_operator(Axis axis, SpinMagnitude spin);

/// Builds |theta, phi> = exp(-i phi Jz) exp(-i theta Jy) |j, j>. The Jy
/// eigen-decomposition is done once, so repeated states on a grid cost O(d^2).
class CoherentStateFactory {
public:
	explicit CoherentStateFactory(SpinMagnitude spin);

	[[nodiscard]] SpinMagnitude spin() const { return spin_; }
	/// Top-only coherent state.
	[[nodiscard]] Vector top_state(double theta, double phi) const;
	/// exp(-i theta Jy)|j, j>, the phi-independent part.
	[[nodiscard]] Vector polar_column(double theta) const;

private:
	SpinMagnitude spin_;
	RealVector jy_eigenvalues_;
	Matrix jy_eigenvectors_;
	Vector highest_weight_in_eigenbasis_;
};

StateVector coherent_state(SpinMagnitude spin, double theta, double phi);

/// |theta, phi> (x) (|up> + |down>)/sqrt(2).
StateVector probe_state(SpinMagnitude spin, double theta, double phi);

/// top (x) spin for a coupled-space product state.
Vector product_state(const Vector& top, const Eigen::Vector2cd& spin);

/// <psi|A|psi>.
cplx expectation(const OperatorMatrix& op, const StateVector& psi);

} // namespace kicktop
