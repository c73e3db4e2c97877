#include "doctest.h"
#include "oracles.hpp"

#include "kicktop/dynamics.hpp"
#include "kicktop/meanfield.hpp"

using namespace kicktop;

TEST_SUITE("meanfield_topology") {

TEST_CASE("mean-field quasi-energy values")
{
	CHECK(mf_quasienergy(0.0, 0.7, 3.0, 5.0) == 0.0);
	CHECK(mf_quasienergy(kPi / 2.0, kPi / 4.0, kPi / 2.0, kPi / 2.0) == doctest::Approx(1.3723).epsilon(1e-4));
	CHECK(mf_quasienergy(kPi / 2.0, 0.0, kPi, 0.0) == doctest::Approx(kPi));
	// High precision scalar evaluation.
	const double k = kPi / 2.0 * std::sqrt(0.5);
	CHECK(mf_quasienergy(kPi / 2.0, kPi / 4.0, kPi / 2.0, kPi / 2.0) == doctest::Approx(std::acos(std::cos(k) * std::cos(k))));
}

TEST_CASE("mean-field surface")
{
	const MeanFieldSurface s = mf_surface({0.0, 0.5, 1.0}, {0.0, 1.0}, 2.0, 3.0);
	CHECK(s.values.rows() == 3);
	CHECK(s.values.cols() == 2);
	CHECK(s.values(2, 1) == doctest::Approx(mf_quasienergy(1.0, 1.0, 2.0, 3.0)));
	CHECK(s.values.minCoeff() >= 0.0);
	CHECK(s.values.maxCoeff() <= kPi);
}

TEST_CASE("pole predictions")
{
	const auto p = bound_state_predictions(1.0, 1.0);
	REQUIRE(p.size() == 2);
	for(const auto& x : p) {
		CHECK(x.phi_degenerate);
		CHECK(std::abs(x.z) == doctest::Approx(1.0));
		CHECK(x.target == 0.0);
		CHECK(x.multiplicity == 4);
	}
	CHECK(p[0].z * p[1].z < 0.0);
	CHECK_THROWS_AS(bound_state_predictions(0.0, 1.0), ConfigError);
}

TEST_CASE("kx = ky = 2 pi, (n_x, n_y) = (1, 0)")
{
	int n = 0;
	for(const auto& x : bound_state_predictions(2.0 * kPi, 2.0 * kPi)) {
		if(x.n_x == 1 && x.n_y == 0) {
			++n;
			CHECK(std::abs(x.z) == doctest::Approx(std::sqrt(3.0) / 2.0));
			const bool phi_ok = std::abs(x.phi) < 1e-12 || std::abs(x.phi - kPi) < 1e-12;
			CHECK(phi_ok);
			CHECK(x.target == doctest::Approx(kPi));
		}
	}
	CHECK(n == 4);
}

TEST_CASE("enumeration matches a brute-force signed count")
{
	for(double k : {1.0, 2.0 * kPi, 7.3, 10.0, 17.0}) {
		const int expect = oracle::brute_force_point_count(k, k);
		CHECK(static_cast<int>(bound_state_predictions(k, k).size()) == expect);
	}
	CHECK(static_cast<int>(bound_state_predictions(4.0, 11.0).size()) == oracle::brute_force_point_count(4.0, 11.0));
}

TEST_CASE("predicted points satisfy the mean-field conditions")
{
	for(const auto& p : bound_state_predictions(9.0, 6.5)) {
		const double st = std::sqrt(std::max(0.0, 1.0 - p.z * p.z));
		const double kx = 9.0 * st * std::cos(p.phi);
		const double ky = 6.5 * st * std::sin(p.phi);
		CHECK(std::abs(std::sin(kx)) < 1e-9);
		CHECK(std::abs(std::sin(ky)) < 1e-9);
	}
}

TEST_CASE("closed-form count")
{
	CHECK(topological_count_closed_form(10.0, 10.0) == doctest::Approx(63.66).epsilon(1e-4));
	CHECK(bound_state_predictions(10.0, 10.0).size() == 74);
	const double n30 = static_cast<double>(bound_state_predictions(30.0, 30.0).size());
	CHECK(std::abs(n30 / topological_count_closed_form(30.0, 30.0) - 1.0) <= 0.05);
	const int tj = 100;
	CHECK(topological_count_closed_form(kPi * (tj + 1) / 2.0, 1.0) == doctest::Approx(tj + 1));
	CHECK(topological_count_closed_form(kPi * (tj + 1), 1.0) == doctest::Approx(2 * (tj + 1)));
}

TEST_CASE("allowed kappa_x")
{
	CHECK(*allowed_kappa_x(0.5, 3.0, 1) == doctest::Approx(2.0 * kPi / std::sqrt(3.0)));
	CHECK(*allowed_kappa_x(0.5, 3.0, 1) == doctest::Approx(3.6276).epsilon(1e-4));
	CHECK(*allowed_kappa_x(0.0, 3.0, 1) == doctest::Approx(kPi));
	CHECK(*allowed_kappa_x(0.0, 3.0, 4) == doctest::Approx(4.0 * kPi));
	CHECK(!allowed_kappa_x(0.5, 1.0, 1, 1).has_value());
	CHECK_THROWS_AS(allowed_kappa_x(1.0, 3.0, 1), ConfigError);
	CHECK_THROWS_AS(allowed_kappa_x(0.5, 3.0, 0), ConfigError);

	// With n_y != 0 the (n_x, n_y) state sits at z0.
	const double kx = *allowed_kappa_x(0.3, 20.0, 2, 3);
	bool found = false;
	for(const auto& p : bound_state_predictions(kx, 20.0)) {
		found = found || (p.n_x == 2 && p.n_y == 3 && std::abs(p.z - 0.3) < 1e-9);
	}
	CHECK(found);
}

TEST_CASE("chaotic border column")
{
	CHECK(chaotic_border_kappa_x(SpinMagnitude(1000), 16.4 * kPi) == doctest::Approx(61.0).epsilon(0.01));
}

}
