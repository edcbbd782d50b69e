#pragma once

#include "tomography/simulate.hpp"

namespace dsim::tomography {

struct MleResult {
	quantum::Mat4 rho;
	double log_likelihood = 0.0;
	int iterations = 0;
};

/// Maximum-likelihood reconstruction of a physical state from counts.
///
/// rho is parameterized as T^dagger T / Tr(T^dagger T) with T lower
/// triangular (16 real parameters), so positivity and unit trace hold by
/// construction. The multinomial log-likelihood under the setting/readout
/// model (with add-half smoothing of the counts, applied only inside the
/// likelihood) is maximized by quasi-Newton ascent with an analytic
/// gradient, starting from the PSD-projected linear estimate; a numerical
/// gradient retry backs up the analytic path. A -(ln Tr(T^dagger T))^2
/// penalty pins the parameterization's redundant overall scale (rho is
/// invariant under T -> cT) so the ascent direction stays well conditioned.
/// Monotone ascent: the penalized log-likelihood never decreases across
/// iterations, so the optimum is at least as likely as the projected linear
/// estimate.
///
/// Throws std::runtime_error if the optimizer fails to converge within
/// 5000 iterations (gain tolerance 1e-10).
MleResult mle_reconstruct(const CountsTable& counts, double c_tomo);

/// Log-likelihood of counts for a given state (add-half smoothed), exposed
/// for tests and diagnostics.
double tomo_log_likelihood(const CountsTable& counts, const quantum::Mat4& rho, double c_tomo);

} // namespace dsim::tomography
