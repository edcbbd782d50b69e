#pragma once

#include "quantum/local_ops.hpp"

namespace dsim::analysis {

struct OptConfig {
	int grid_theta = 24;
	int grid_phi = 48;
	double tol = 1e-6;   // objective tolerance of the local refinement
	int refine_starts = 3;
	int max_iter = 400;
};

/// I(rho) = S(rho_A) + S(rho_B) - S(rho), in bits (in [0, 2]).
double mutual_information(const quantum::Mat4& rho);

/// J_side = S(rho_other) - min over Bloch projectors on `side` of the
/// probability-weighted entropy of the conditioned other-qubit states.
/// Coarse (theta, phi) grid scan followed by simplex refinement from the
/// best grid points. Throws std::runtime_error if refinement ends above the
/// grid incumbent (optimizer failure).
struct ClassicalCorrelation {
	double value = 0.0; // bits
	double theta = 0.0;
	double phi = 0.0;
	double min_conditional_entropy = 0.0;
};
ClassicalCorrelation classical_correlation(const quantum::Mat4& rho, quantum::Subsystem side,
                                           const OptConfig& cfg = {});

/// D_side = I - J_side, clamped to 0 when within -1e-9 (optimizer noise);
/// larger negative values throw (they indicate an optimizer bug, never
/// physics).
double discord(const quantum::Mat4& rho, quantum::Subsystem side, const OptConfig& cfg = {});

/// Grid-only minimum (no refinement) for oracle comparisons in tests.
double discord_brute_force(const quantum::Mat4& rho, quantum::Subsystem side, int n_theta,
                           int n_phi);

} // namespace dsim::analysis
