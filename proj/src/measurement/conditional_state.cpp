#include "measurement/conditional_state.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace dsim::measurement {

using quantum::Complex;
using quantum::Mat4;

quantum::Mat4 conditional_state(double lambda, const Outcome& o, const ModelParams& p) {
	if (lambda < 0.0) throw std::invalid_argument("lambda must be non-negative");
	p.validate();

	const double x = o.i_m / p.sigma_m;
	const double y = o.q_m / p.sigma_m;
	const double q_off = p.q_bar / p.sigma_m;
	const double sep = std::sqrt(2.0 * lambda);

	// Branch pointer means along I and accumulated phases; basis order
	// gg, ge, eg, ee (index 2a+b, first letter Alice).
	const double means[4] = {+sep, 0.0, 0.0, -sep};
	const double chi_a = +0.5 * sep * (y - q_off) - p.xi_a * lambda - std::numbers::pi / 2.0;
	const double chi_b = -0.5 * sep * (y - q_off) - p.xi_b * lambda - std::numbers::pi / 2.0;

	// The common exp factor cancels in normalization; subtracting the max
	// exponent keeps the amplitudes representable for far-out outcomes.
	double expo[4];
	double expo_max = -std::numeric_limits<double>::infinity();
	for (int s = 0; s < 4; ++s) {
		const double dx = x - means[s];
		expo[s] = -dx * dx / 4.0;
		expo_max = std::max(expo_max, expo[s]);
	}
	Eigen::Vector4cd amp;
	for (int s = 0; s < 4; ++s) {
		const double phase = (s / 2 ? chi_a : 0.0) + (s % 2 ? chi_b : 0.0);
		amp[s] = std::exp(expo[s] - expo_max) * std::exp(Complex(0.0, phase));
	}
	Mat4 rho = amp * amp.adjoint();
	rho /= rho.trace().real();

	// Per-qubit Z dephasing: coherences between branches that differ on a
	// qubit shrink by that qubit's keep-factor. CPTP for factors in [0,1].
	const double keep_a = std::exp(-lambda * (1.0 - p.eta_a) / (2.0 * p.eta_a)) * p.c_t2_alice;
	const double keep_b = std::exp(-lambda * (1.0 - p.eta_b) / (2.0 * p.eta_b)) * p.c_t2_bob;
	for (int s = 0; s < 4; ++s) {
		for (int t = 0; t < 4; ++t) {
			double f = 1.0;
			if ((s / 2) != (t / 2)) f *= keep_a;
			if ((s % 2) != (t % 2)) f *= keep_b;
			rho(s, t) *= f;
		}
	}

	// Two-qubit depolarizing channel for the tomography contrast.
	rho = p.c_tomo * rho + (1.0 - p.c_tomo) * Mat4::Identity() / 4.0;

	// Consistency cross-check against the closed forms.
	const FringeComponents want = conditional_pauli_closed_form(lambda, o, p);
	const Complex r23 = rho(1, 2); // (ge, eg)
	const Complex r14 = rho(0, 3); // (gg, ee)
	const double got_xx = 2.0 * r23.real() + 2.0 * r14.real();
	const double got_yy = 2.0 * r23.real() - 2.0 * r14.real();
	const double got_xy = 2.0 * r23.imag() - 2.0 * r14.imag();
	const double got_yx = -2.0 * r23.imag() - 2.0 * r14.imag();
	const double got_zz = (rho(0, 0) - rho(1, 1) - rho(2, 2) + rho(3, 3)).real();
	const double err = std::max({std::abs(got_xx - want.xx), std::abs(got_yy - want.yy),
	                             std::abs(got_xy - want.xy), std::abs(got_yx - want.yx),
	                             std::abs(got_zz - want.zz)});
	if (err > 1e-6)
		throw std::runtime_error("conditional state drifted from closed forms by " + std::to_string(err));

	return rho;
}

} // namespace dsim::measurement
