#pragma once

#include "kicktop/core.hpp"
#include "kicktop/spin_algebra.hpp"

#include <array>
#include <memory>
#include <string>
#include <vector>

namespace kicktop {

class FloquetOperator;

enum class SymmetryKind { Parity, TimeReversal1, TimeReversal2, ParticleHole, Chiral };

std::string to_string(SymmetryKind kind);

/// Unitary part of a symmetry; anti-unitary ones are (matrix) * K.
struct SymmetryOperator {
	SymmetryKind kind;
	Matrix unitary;
	bool antiunitary = false;

	/// S X S^{-1}, conjugating X entry-wise first when the symmetry is anti-unitary.
	[[nodiscard]] Matrix conjugate(const Matrix& x) const;
	/// S^2 = unitary * conj(unitary) for anti-unitary, unitary^2 otherwise.
	[[nodiscard]] Matrix squared() const;
};

SymmetryOperator symmetry_operator(SymmetryKind kind, SpinMagnitude spin);

/// Diagonal of the parity operator: +-1 per coupled-basis index.
std::vector<int> parity_labels(SpinMagnitude spin);

/// Basis indices grouped by parity: sector 0 holds label +1, sector 1 label -1,
/// each in ascending basis order.
struct SectorLayout {
	SpinMagnitude spin;
	std::array<std::vector<int>, 2> indices;

	[[nodiscard]] int sector_dim(int sector) const { return static_cast<int>(indices[sector].size()); }
	/// Rows/cols of `full` restricted to a sector.
	[[nodiscard]] Matrix restrict(const Matrix& full, int sector) const;
	[[nodiscard]] Vector restrict(const Vector& full, int sector) const;
};

/// Cached per 2j.
std::shared_ptr<const SectorLayout> sector_layout(SpinMagnitude spin);

struct RelationResidual {
	std::string name;
	double residual = 0.0;
};

struct SymmetryReport {
	SpinMagnitude spin{1};
	/// max-element residual of each symmetry relation.
	std::vector<RelationResidual> relations;
	/// Signs of the squared operators (Pi^2, T1^2, T2^2, P^2, Gamma^2).
	std::vector<std::pair<std::string, int>> squared_signs;
	/// Largest element of U between different parity sectors.
	double parity_offblock_norm = 0.0;
	/// True when U was built as a symmetrized variant, i.e. the
	/// T / P / Gamma relations are expected to hold.
	bool symmetrized = false;

	[[nodiscard]] double residual(const std::string& name) const;
	[[nodiscard]] int squared_sign(const std::string& name) const;
};

SymmetryReport verify_symmetries(const FloquetOperator& op);

} // namespace kicktop
