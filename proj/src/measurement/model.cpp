#include "measurement/model.hpp"

#include <cmath>
#include <stdexcept>

namespace dsim::measurement {

void ModelParams::validate() const {
	auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };
	if (!in01(c_t2_alice) || !in01(c_t2_bob) || !in01(c_tomo))
		throw std::invalid_argument("contrast out of [0,1]");
	if (eta_a <= 0.0 || eta_a > 1.0 || eta_b <= 0.0 || eta_b > 1.0)
		throw std::invalid_argument("efficiency out of (0,1]");
	if (sigma_m <= 0.0) throw std::invalid_argument("sigma_m must be positive");
	if (!std::isfinite(xi_a) || !std::isfinite(xi_b) || !std::isfinite(q_bar) || !std::isfinite(i_bar))
		throw std::invalid_argument("non-finite model parameter");
}

double contrast(double lambda, const ModelParams& p) {
	if (lambda < 0.0) throw std::invalid_argument("lambda must be non-negative");
	const double loss = (1.0 - p.eta_a) / p.eta_a + (1.0 - p.eta_b) / p.eta_b;
	return p.c_t2_alice * p.c_t2_bob * p.c_tomo * std::exp(-loss * lambda / 2.0);
}

double strength_from_separation(double i_bar, double sigma_m) {
	if (sigma_m <= 0.0) throw std::invalid_argument("sigma_m must be positive");
	return i_bar * i_bar / (2.0 * sigma_m * sigma_m);
}

} // namespace dsim::measurement
