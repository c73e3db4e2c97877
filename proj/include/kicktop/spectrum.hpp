#pragma once

#include "kicktop/floquet.hpp"

#include <optional>
#include <span>
#include <string>
#include <vector>

namespace kicktop {

/// Eigen-decomposition of a (block of a) unitary, U v = exp(-i eps) v.
struct UnitaryEigensystem {
	std::vector<double> epsilons;  ///< in (-pi, pi], unsorted, aligned with columns
	Matrix vectors;                ///< orthonormal columns
	double max_residual = 0.0;     ///< max_n |U v_n - exp(-i eps_n) v_n|
};

struct UnitaryEigenOptions {
	/// Gap in the spectrum of the Hermitian surrogate below which eigenvectors
	/// are re-diagonalized together against U.
	double cluster_tol = 1e-6;
	/// Quasi-energies closer than this are treated as one degenerate eigenspace.
	double degeneracy_tol = 1e-9;
	/// Largest accepted |U^dag U - I| and eigen-residual.
	double unitarity_tol = 1e-8;
};

/// Diagonalizes a unitary through the Hermitian matrix
/// (e^{ia} U + e^{-ia} U^dag)/2, whose eigenvectors are those of U. Inside
/// exactly degenerate eigenspaces the basis is fixed by diagonalizing
/// `gauge_diagonal` (a Hermitian diagonal operator) when one is given.
UnitaryEigensystem diagonalize_unitary(const Matrix& u, const RealVector* gauge_diagonal = nullptr,
                                       const UnitaryEigenOptions& options = {});

/// Maps a phase to the quasi-energy branch (-pi, pi].
double wrap_quasienergy(double eps);

struct QuasiSpectrum {
	SpinMagnitude spin{1};
	KickParams params;
	std::vector<double> epsilons;  ///< ascending
	Matrix eigenvectors;           ///< column n belongs to epsilons[n]
	std::vector<int> parity;       ///< +-1 per state
	double max_residual = 0.0;
};

/// Diagonalizes each parity block and merges the results, sorted by quasi-energy.
/// Degenerate eigenspaces are resolved into sigma_z eigenstates.
QuasiSpectrum quasi_spectrum(const FloquetOperator& op);

/// Sorted quasi-energies of one parity sector (0 -> +1, 1 -> -1).
std::vector<double> sector_quasienergies(const FloquetOperator& op, int sector);

/// Mean of min(d_n, d_{n+1}) / max(d_n, d_{n+1}) over consecutive spacings of
/// the sorted levels, without wrap-around. 0/0 counts as 1, 0/x as 0. Spacings
/// at or below `degeneracy_tol` are treated as exactly zero.
double mean_spacing_ratio(std::span<const double> levels, double degeneracy_tol = 0.0);

struct ParityResolvedR {
	double r_plus = 0.0;
	double r_minus = 0.0;
	/// Weighted by the number of ratio terms in each sector.
	double r_mean = 0.0;
};

/// Spacing snap used for parity-resolved statistics.
inline constexpr double kSpacingDegeneracyTol = 1e-9;

ParityResolvedR parity_resolved_r(const FloquetOperator& op);
ParityResolvedR parity_resolved_r(const QuasiSpectrum& spectrum);

enum class StageLabel { Topological, QuasiIntegrable, Transition, Chaotic };

std::string to_string(StageLabel s);

struct StageBorders {
	double first;   ///< pi (2j + 1) / 4
	double second;  ///< pi (2j + 1) / 2
	double third;   ///< pi (2j + 1)
};

StageBorders stage_borders(SpinMagnitude spin);

/// Borders are closed on the left: kx ky == third border is Chaotic.
StageLabel stage_classify(double kappa_x, double kappa_y, SpinMagnitude spin);

struct BoundStateRecord {
	int index = 0;
	double epsilon = 0.0;
	double target = 0.0;    ///< 0 or pi
	double distance = 0.0;  ///< |eps - target| on the circle
	double chiral = 0.0;    ///< <sigma_z>
};

inline constexpr double kDefaultBoundTol = 0.05;

std::vector<BoundStateRecord> detect_bound_states(const QuasiSpectrum& spectrum,
                                                  double tol = kDefaultBoundTol);

/// <v|sigma_z|v> on the coupled space.
double chiral_expectation(const StateVector& state);

} // namespace kicktop
