#pragma once

#include <Eigen/Dense>

#include <complex>
#include <stdexcept>
#include <string>

namespace kicktop {

using cplx = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr cplx kI{0.0, 1.0};

/// Invalid input or configuration. Maps to CLI exit code 2.
class ConfigError : public std::invalid_argument {
public:
	using std::invalid_argument::invalid_argument;
};

/// A numerical invariant was violated (non-unitary input, eigensolver failure,
/// norm drift). Maps to CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
	using std::runtime_error::runtime_error;
};

/// Spin length stored as 2j so that half-integer spins are exact.
class SpinMagnitude {
public:
	explicit SpinMagnitude(int two_j) : two_j_{two_j}
	{
		if(two_j < 1) {
			throw ConfigError("two_j must be >= 1, got " + std::to_string(two_j));
		}
	}

	[[nodiscard]] int two_j() const { return two_j_; }
	[[nodiscard]] double j() const { return 0.5 * two_j_; }
	/// Dimension of the Dicke space of the top, 2j + 1.
	[[nodiscard]] int top_dim() const { return two_j_ + 1; }
	/// Dimension of top (x) spin-1/2, 2(2j + 1).
	[[nodiscard]] int dim() const { return 2 * (two_j_ + 1); }
	[[nodiscard]] bool two_j_odd() const { return (two_j_ % 2) != 0; }

	friend bool operator==(SpinMagnitude a, SpinMagnitude b) { return a.two_j_ == b.two_j_; }

private:
	int two_j_;
};

/// Index bookkeeping for |m, s> with m = -j..j ascending and s = 0 (up), 1 (down).
/// Flat index is 2 (j + m) + s.
class CoupledBasis {
public:
	explicit CoupledBasis(SpinMagnitude spin) : spin_{spin} {}

	[[nodiscard]] SpinMagnitude spin() const { return spin_; }
	[[nodiscard]] int dim() const { return spin_.dim(); }

	/// `k` = j + m in 0..2j.
	[[nodiscard]] int index(int k, int s) const { return 2 * k + s; }
	[[nodiscard]] int k_of(int index) const { return index / 2; }
	[[nodiscard]] int s_of(int index) const { return index % 2; }
	[[nodiscard]] double m_of(int index) const { return k_of(index) - spin_.j(); }
	/// Eigenvalue of sigma_z: +1 for up, -1 for down.
	[[nodiscard]] double sigma_z_of(int index) const { return s_of(index) == 0 ? 1.0 : -1.0; }

private:
	SpinMagnitude spin_;
};

} // namespace kicktop
