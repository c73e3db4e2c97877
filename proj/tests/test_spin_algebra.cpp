#include "doctest.h"
#include "oracles.hpp"

#include "kicktop/spin_algebra.hpp"

using namespace kicktop;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

} // namespace

TEST_SUITE("spin_algebra") {

TEST_CASE("spin magnitude rejects 2j < 1")
{
	CHECK_THROWS_AS(SpinMagnitude(0), ConfigError);
	CHECK_THROWS_AS(SpinMagnitude(-3), ConfigError);
	const SpinMagnitude s(11);
	CHECK(s.j() == doctest::Approx(5.5));
	CHECK(s.top_dim() == 12);
	CHECK(s.dim() == 24);
	CHECK(s.two_j_odd());
}

TEST_CASE("j = 1/2 matrices")
{
	const auto am = angular_momentum_matrices(SpinMagnitude(1));
	CHECK(am.jz.matrix(0, 0).real() == doctest::Approx(-0.5));
	CHECK(am.jz.matrix(1, 1).real() == doctest::Approx(0.5));
	CHECK(am.jx.matrix(0, 1).real() == doctest::Approx(0.5));
	CHECK(am.jx.matrix(1, 0).real() == doctest::Approx(0.5));
	CHECK(am.jx.hermitian);
}

TEST_CASE("j = 1 raising operator entries")
{
	const auto am = angular_momentum_matrices(SpinMagnitude(2));
	CHECK(am.jplus.matrix(1, 0).real() == doctest::Approx(std::sqrt(2.0)));
	CHECK(am.jplus.matrix(2, 1).real() == doctest::Approx(std::sqrt(2.0)));
	CHECK(std::abs(am.jplus.matrix(0, 1)) == 0.0);
}

TEST_CASE("commutator [Jx, Jy] = i Jz")
{
	for(int tj : {1, 2, 5, 10, 21, 40}) {
		const auto am = angular_momentum_matrices(SpinMagnitude(tj));
		const Matrix c = am.jx.matrix * am.jy.matrix - am.jy.matrix * am.jx.matrix;
		CHECK(max_abs(c - kI * am.jz.matrix) < 1e-12);
		// Independent construction of Jx, Jy.
		CHECK(max_abs(am.jx.matrix - oracle::jx(tj)) < 1e-13);
		CHECK(max_abs(am.jy.matrix - oracle::jy(tj)) < 1e-13);
	}
}

TEST_CASE("coupling operator ordering and structure")
{
	const OperatorMatrix z = coupling_operator(Axis::Z, SpinMagnitude(1));
	const std::array<double, 4> expect{-0.5, 0.5, 0.5, -0.5};
	for(int i = 0; i < 4; ++i) {
		CHECK(z.matrix(i, i).real() == doctest::Approx(expect[i]));
	}
	CHECK(max_abs(z.matrix - Matrix(z.matrix.diagonal().asDiagonal())) == 0.0);

	for(int tj : {3, 8}) {
		const Matrix x = coupling_operator(Axis::X, SpinMagnitude(tj)).matrix;
		CHECK(max_abs(x - x.adjoint()) < 1e-14);
		CHECK(std::abs(x.trace()) < 1e-13);
		CHECK(max_abs(x - oracle::kron(oracle::jx(tj), oracle::sigma('x'))) < 1e-13);
	}
}

TEST_CASE("x and y couplings related by the pi/2 rotation")
{
	const int tj = 10;
	const SpinMagnitude s(tj);
	const Matrix gen = oracle::kron(oracle::jz(tj), Eigen::Matrix2cd::Identity())
	                   + 0.5 * oracle::kron(Matrix::Identity(tj + 1, tj + 1), oracle::sigma('z'));
	const Matrix r = oracle::expm_minus_i(0.5 * kPi * gen);
	const Matrix x = coupling_operator(Axis::X, s).matrix;
	const Matrix y = coupling_operator(Axis::Y, s).matrix;
	CHECK(max_abs(r * x * r.adjoint() - y) < 1e-10);
}

TEST_CASE("coherent state expectations")
{
	const SpinMagnitude s(20);
	const auto am = angular_momentum_matrices(s);

	const StateVector pole = coherent_state(s, 0.0, 1.234);
	CHECK(std::abs(pole.amplitudes(s.top_dim() - 1)) == doctest::Approx(1.0));

	const StateVector a = coherent_state(s, kPi / 3.0, 0.0);
	CHECK(expectation(am.jz, a).real() == doctest::Approx(s.j() / 2.0).epsilon(1e-12));

	const StateVector b = coherent_state(s, kPi / 2.0, kPi / 2.0);
	CHECK(std::abs(expectation(am.jy, b) - s.j()) < 1e-10);
	CHECK(std::abs(expectation(am.jx, b)) < 1e-10);
	CHECK(std::abs(expectation(am.jz, b)) < 1e-10);

	const SpinMagnitude s10(20);
	const auto am10 = angular_momentum_matrices(s10);
	CHECK(expectation(am10.jx, coherent_state(s10, kPi / 2.0, kPi / 4.0)).real()
	      == doctest::Approx(10.0 * std::sqrt(2.0) / 2.0).epsilon(1e-12));

	CHECK_THROWS_AS(coherent_state(s, -0.1, 0.0), ConfigError);
	CHECK_THROWS_AS(coherent_state(s, 3.2, 0.0), ConfigError);
}

TEST_CASE("coherent state matches the rotation construction on a grid")
{
	const int tj = 7;
	const SpinMagnitude s(tj);
	const auto am = angular_momentum_matrices(s);
	for(int a = 0; a < 5; ++a) {
		for(int b = 0; b < 5; ++b) {
			const double th = kPi * a / 4.0;
			const double ph = 2.0 * kPi * b / 5.0;
			const StateVector c = coherent_state(s, th, ph);
			Vector top = Vector::Zero(tj + 1);
			top(tj) = 1.0;
			const Vector ref = oracle::expm_minus_i(ph * oracle::jz(tj)) * oracle::expm_minus_i(th * oracle::jy(tj)) * top;
			CHECK(std::abs(std::abs(ref.dot(c.amplitudes)) - 1.0) < 1e-10);
			const double j = s.j();
			CHECK(std::abs(expectation(am.jx, c) - j * std::sin(th) * std::cos(ph)) < 1e-10);
			CHECK(std::abs(expectation(am.jy, c) - j * std::sin(th) * std::sin(ph)) < 1e-10);
			CHECK(std::abs(expectation(am.jz, c) - j * std::cos(th)) < 1e-10);
		}
	}
}

TEST_CASE("probe state")
{
	const SpinMagnitude s(100);
	const StateVector p0 = probe_state(s, 0.0, 0.0);
	for(Eigen::Index i = 0; i < p0.size(); ++i) {
		const bool top = i >= p0.size() - 2;
		CHECK(std::abs(p0.amplitudes(i)) == doctest::Approx(top ? 1.0 / std::sqrt(2.0) : 0.0));
	}
	const OperatorMatrix sz{embed_spin(s, pauli(Axis::Z)), true};
	const OperatorMatrix jz{embed_top(angular_momentum_matrices(s).jz.matrix), true};
	const StateVector p = probe_state(s, kPi / 3.0, 0.0);
	CHECK(std::abs(expectation(sz, p)) < 1e-12);
	CHECK(std::abs(expectation(jz, p) - 25.0) < 1e-8);
	CHECK(std::abs(expectation(sz, probe_state(s, 1.1, 2.3))) < 1e-12);
}

TEST_CASE("expectation")
{
	const SpinMagnitude s(6);
	const OperatorMatrix id{Matrix::Identity(s.dim(), s.dim()), true};
	CHECK(std::abs(expectation(id, probe_state(s, 0.4, 0.9)) - 1.0) < 1e-13);
	CHECK_THROWS_AS(expectation(id, coherent_state(s, 0.4, 0.9)), ConfigError);
}

}
