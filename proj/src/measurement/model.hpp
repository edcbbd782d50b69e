#pragma once

#include <cstdint>
#include <vector>

namespace dsim::measurement {

/// Calibration parameters of the joint weak measurement.
///
/// i_bar and q_bar are expressed in the same units as sigma_m; with the
/// default sigma_m = 1 they are numerically "units of sigma". All
/// evaluation functions take the measurement strength lambda explicitly and
/// derive the pointer separation as sqrt(2*lambda)*sigma_m, which keeps the
/// sampled mixture and the closed forms consistent by construction; the
/// i_bar field is the config-level record of that separation.
struct ModelParams {
	double c_t2_alice = 0.86;
	double c_t2_bob = 0.85;
	double c_tomo = 0.90;
	double eta_a = 0.53;
	double eta_b = 0.42;
	double xi_a = 0.27; // stark-shift phase rate, rad per unit lambda
	double xi_b = 1.02;
	double q_bar = 0.0;  // mean Q offset of the pointer blobs
	double i_bar = 0.0;  // pointer separation (informational)
	double sigma_m = 1.0; // outcome noise std per quadrature

	/// Throws std::invalid_argument when an invariant is violated.
	void validate() const;
};

/// A single weak-measurement outcome in the (I, Q) plane.
struct Outcome {
	double i_m = 0.0;
	double q_m = 0.0;
};

struct OutcomeBatch {
	std::vector<Outcome> outcomes;
	std::uint64_t seed = 0;
	double lambda = 0.0;
};

/// Total coherence contrast at strength lambda:
/// C = C_T2A * C_T2B * C_Tomo * exp(-((1-eta_A)/eta_A + (1-eta_B)/eta_B) * lambda / 2).
/// Monotone non-increasing in lambda. Throws on lambda < 0.
double contrast(double lambda, const ModelParams& p);

/// lambda = i_bar^2 / (2 sigma_m^2); i_bar and sigma_m in common units.
/// Throws on sigma_m <= 0.
double strength_from_separation(double i_bar, double sigma_m);

} // namespace dsim::measurement
