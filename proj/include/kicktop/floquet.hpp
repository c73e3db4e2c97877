#pragma once

#include "kicktop/core.hpp"
#include "kicktop/spin_algebra.hpp"
#include "kicktop/symmetries.hpp"

#include <array>
#include <memory>
#include <string>

namespace kicktop {

enum class Variant { Plain, Symmetrized1, Symmetrized2 };

std::string to_string(Variant v);
Variant parse_variant(const std::string& name);

struct KickParams {
	double kappa_x = 0.0;
	double kappa_y = 0.0;
	/// Strength of the chiral-breaking sigma_z term added to each kick.
	double delta = 0.0;
	Variant variant = Variant::Plain;

	/// Throws ConfigError on negative strengths or on delta > 0 with a
	/// symmetrized variant.
	void validate() const;
};

/// Eigen-decomposition of G_a = J_a sigma_a / j restricted to each parity sector.
struct GeneratorFactors {
	SpinMagnitude spin;
	Axis axis;
	std::array<RealVector, 2> eigenvalues;
	std::array<Matrix, 2> eigenvectors;
};

/// Process-wide cache keyed by (2j, axis); safe for concurrent use.
std::shared_ptr<const GeneratorFactors> generator_factors(SpinMagnitude spin, Axis axis);

/// exp(-i[(kappa/j) J_a sigma_a + delta sigma_z]) on the full coupled space.
Matrix kick_unitary(Axis axis, double kappa, SpinMagnitude spin, double delta = 0.0);

class FloquetOperator {
public:
	[[nodiscard]] const Matrix& matrix() const { return full_; }
	/// Diagonal block on parity sector 0 (+1) or 1 (-1), rows/cols in
	/// SectorLayout order.
	[[nodiscard]] const Matrix& sector_block(int sector) const { return blocks_[sector]; }
	[[nodiscard]] const KickParams& params() const { return params_; }
	[[nodiscard]] SpinMagnitude spin() const { return spin_; }
	[[nodiscard]] const SectorLayout& sectors() const { return *layout_; }
	/// max |U^dag U - I|.
	[[nodiscard]] double unitarity_defect() const;

private:
	friend FloquetOperator floquet_operator(const KickParams&, SpinMagnitude);
	friend FloquetOperator refresh(const FloquetOperator&, const KickParams&);

	FloquetOperator(SpinMagnitude spin, KickParams params) : spin_{spin}, params_{params} {}
	void assemble();

	SpinMagnitude spin_;
	KickParams params_;
	std::shared_ptr<const SectorLayout> layout_;
	std::shared_ptr<const GeneratorFactors> x_factors_;
	std::shared_ptr<const GeneratorFactors> y_factors_;
	std::array<Matrix, 2> blocks_;
	Matrix full_;
};

/// Plain: U = K_y K_x. Symmetrized1: K_y^{1/2} K_x K_y^{1/2}.
/// Symmetrized2: K_x^{1/2} K_y K_x^{1/2}.
FloquetOperator floquet_operator(const KickParams& params, SpinMagnitude spin);

/// Reference construction of the same unitary on the full coupled space,
/// without using the parity block structure. O(D^3) per kick; meant for
/// verification at single parameter points.
Matrix reference_floquet_matrix(const KickParams& params, SpinMagnitude spin);

/// Rebuilds with new kick strengths, reusing the cached generator factors.
/// The variant, delta and spin must match the source operator.
FloquetOperator refresh(const FloquetOperator& op, const KickParams& new_params);

} // namespace kicktop
