#include "doctest.h"
#include "oracles.hpp"

#include "kicktop/floquet.hpp"
#include "kicktop/symmetries.hpp"

using namespace kicktop;

namespace {

double max_abs(const Matrix& m) { return m.cwiseAbs().maxCoeff(); }

const std::vector<std::string> kRelations{"parity", "time_reversal_1", "time_reversal_2", "particle_hole", "chiral",
                                          "t1_parity", "t2_parity", "particle_hole_parity", "chiral_parity",
                                          "blocked_vs_reference"};

Matrix total_generator(int tj, char axis)
{
	const Matrix j = axis == 'z' ? oracle::jz(tj) : oracle::jy(tj);
	return oracle::kron(j, Eigen::Matrix2cd::Identity())
	       + 0.5 * oracle::kron(Matrix::Identity(tj + 1, tj + 1), oracle::sigma(axis));
}

} // namespace

TEST_SUITE("symmetries") {

TEST_CASE("parity labels for j = 1/2")
{
	const std::vector<int> l = parity_labels(SpinMagnitude(1));
	// (-1/2, up), (-1/2, down), (+1/2, up), (+1/2, down)
	CHECK(l == std::vector<int>{1, -1, -1, 1});
	const auto layout = sector_layout(SpinMagnitude(1));
	CHECK(layout->indices[0] == std::vector<int>{0, 3});
	CHECK(layout->indices[1] == std::vector<int>{1, 2});
}

TEST_CASE("parity labels: sizes and squares")
{
	for(int tj = 1; tj <= 12; ++tj) {
		const SpinMagnitude s(tj);
		const auto l = parity_labels(s);
		int plus = 0;
		for(int x : l) {
			CHECK(x * x == 1);
			plus += x > 0;
		}
		CHECK(plus == s.top_dim());
		CHECK(sector_layout(s)->sector_dim(1) == s.top_dim());
	}
}

TEST_CASE("parity operator agrees with exp(-i pi (Jz + sigma_z / 2)) up to a phase")
{
	for(int tj : {4, 5}) {
		const Matrix ref = oracle::expm_minus_i(kPi * total_generator(tj, 'z'));
		const Matrix pi = symmetry_operator(SymmetryKind::Parity, SpinMagnitude(tj)).unitary;
		const cplx phase = ref(0, 0) / pi(0, 0);
		CHECK(std::abs(std::abs(phase) - 1.0) < 1e-12);
		CHECK(max_abs(ref - phase * pi) < 1e-10);
	}
}

TEST_CASE("chiral operator is sigma_z per m")
{
	const Matrix g = symmetry_operator(SymmetryKind::Chiral, SpinMagnitude(3)).unitary;
	for(int i = 0; i < 8; ++i) {
		CHECK(g(i, i).real() == doctest::Approx(i % 2 == 0 ? 1.0 : -1.0));
	}
	CHECK(!symmetry_operator(SymmetryKind::Chiral, SpinMagnitude(3)).antiunitary);
	CHECK(symmetry_operator(SymmetryKind::TimeReversal2, SpinMagnitude(3)).antiunitary);
}

TEST_CASE("T2 squares to -1 for 2j even and +1 for 2j odd")
{
	CHECK(max_abs(symmetry_operator(SymmetryKind::TimeReversal2, SpinMagnitude(2)).squared()
	              + Matrix::Identity(6, 6))
	      < 1e-10);
	CHECK(max_abs(symmetry_operator(SymmetryKind::TimeReversal2, SpinMagnitude(3)).squared()
	              - Matrix::Identity(8, 8))
	      < 1e-10);
}

TEST_CASE("T2 against an independent construction")
{
	const int tj = 6;
	const Matrix ref = oracle::expm_minus_i(kPi * total_generator(tj, 'y'));
	const Matrix t2 = symmetry_operator(SymmetryKind::TimeReversal2, SpinMagnitude(tj)).unitary;
	CHECK(max_abs(ref - t2) < 1e-10);

	// T2 U* T2^-1 = U^dag on the oracle-built symmetrized operator.
	const Matrix h = oracle::kick('y', 0.5 * 2.1, tj);
	const Matrix u = h * oracle::kick('x', 1.3, tj) * h;
	CHECK(max_abs(ref * u.conjugate() * ref.adjoint() - u.adjoint()) < 1e-10);
}

TEST_CASE("all relations hold for symmetrized operators")
{
	for(int tj : {10, 11}) {
		for(Variant v : {Variant::Symmetrized1, Variant::Symmetrized2}) {
			const SymmetryReport r = verify_symmetries(floquet_operator(KickParams{1.3, 2.1, 0.0, v}, SpinMagnitude(tj)));
			CHECK(r.symmetrized);
			for(const auto& name : kRelations) {
				INFO(name);
				CHECK(r.residual(name) <= 1e-10);
			}
			CHECK(r.parity_offblock_norm <= 1e-12);
			CHECK(r.squared_sign("time_reversal_2") == (tj % 2 == 1 ? 1 : -1));
			CHECK(r.squared_sign("time_reversal_1") == 1);
			CHECK(r.squared_sign("particle_hole") == 1);
			CHECK(r.squared_sign("chiral") == 1);
		}
	}
}

TEST_CASE("plain operator keeps parity and particle-hole only")
{
	const SymmetryReport r = verify_symmetries(floquet_operator(KickParams{1.3, 2.1, 0.0, Variant::Plain}, SpinMagnitude(10)));
	CHECK(!r.symmetrized);
	CHECK(r.residual("parity") <= 1e-10);
	CHECK(r.residual("particle_hole") <= 1e-10);
	CHECK(r.residual("chiral") > 1e-3);
}

TEST_CASE("delta breaks the chiral relation but not parity")
{
	const SymmetryReport r = verify_symmetries(floquet_operator(KickParams{1.3, 2.1, 1.6, Variant::Plain}, SpinMagnitude(10)));
	CHECK(r.residual("chiral") > 1e-6);
	CHECK(r.residual("parity") <= 1e-10);
	CHECK(r.parity_offblock_norm <= 1e-12);
	CHECK_THROWS_AS(static_cast<void>(r.residual("nonexistent")), ConfigError);
}

TEST_CASE("unsymmetric full-space operator has no parity off-block")
{
	// The dense reference path does not use the block structure.
	const Matrix u = oracle::kick('y', 2.4, 9) * oracle::kick('x', 0.7, 9);
	const auto labels = parity_labels(SpinMagnitude(9));
	double off = 0.0;
	for(int r = 0; r < u.rows(); ++r) {
		for(int c = 0; c < u.cols(); ++c) {
			if(labels[r] != labels[c]) {
				off = std::max(off, std::abs(u(r, c)));
			}
		}
	}
	CHECK(off <= 1e-12);
}

}
