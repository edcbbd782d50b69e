#include "measurement/closed_form.hpp"

#include <cmath>
#include <stdexcept>

namespace dsim::measurement {

FringeComponents conditional_pauli_closed_form(double lambda, const Outcome& o, const ModelParams& p) {
	if (lambda < 0.0) throw std::invalid_argument("lambda must be non-negative");
	const double c = contrast(lambda, p);
	const double sep = std::sqrt(2.0 * lambda);
	const double big_i = sep * (o.i_m / p.sigma_m);
	const double big_q = sep * (o.q_m / p.sigma_m);
	const double q_off = sep * (p.q_bar / p.sigma_m);
	const double theta_minus = q_off + (p.xi_a - p.xi_b) * lambda;
	const double theta_plus = (p.xi_a + p.xi_b) * lambda;
	const double decay = std::exp(-lambda);
	const double fringe_c = std::cos(big_q - theta_minus);
	const double fringe_s = std::sin(big_q - theta_minus);
	const double even_c = decay * std::cos(theta_plus);
	const double even_s = decay * std::sin(theta_plus);

	// Work with log(e^{-lambda} cosh I) so far-out outcomes cannot overflow
	// cosh; (e^t - 1)/(e^t + 1) == tanh(t/2) exactly.
	const double abs_i = std::abs(big_i);
	const double log_cosh = abs_i + std::log1p(std::exp(-2.0 * abs_i)) - std::log(2.0);
	const double t = -lambda + log_cosh;
	const double inv_denom = 1.0 / (1.0 + std::exp(t));

	FringeComponents f;
	f.xx = c * (-even_c + fringe_c) * inv_denom;
	f.yy = c * (even_c + fringe_c) * inv_denom;
	f.xy = c * (even_s - fringe_s) * inv_denom;
	f.yx = c * (even_s + fringe_s) * inv_denom;
	f.zz = p.c_tomo * std::tanh(t / 2.0);
	return f;
}

} // namespace dsim::measurement
