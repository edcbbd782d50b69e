#include "pulse/transfer.hpp"

#include <cmath>
#include <stdexcept>

namespace dsim::pulse {

using Complex = std::complex<double>;

void CavityParams::validate() const {
	if (kappa <= 0.0) throw std::invalid_argument("cavity kappa must be positive");
	if (chi == 0.0) throw std::invalid_argument("cavity chi must be nonzero");
	if (eta <= 0.0 || eta > 1.0) throw std::invalid_argument("cavity eta out of (0,1]");
}

void JpcChannel::validate() const {
	if (kappa_jpc <= 0.0) throw std::invalid_argument("jpc kappa must be positive");
	if (gain <= 0.0) throw std::invalid_argument("jpc gain must be positive");
}

Complex cavity_alpha_factor(double w, const CavityParams& c, QubitState s) {
	const double shift = (s == QubitState::G) ? -c.chi / 2.0 : +c.chi / 2.0;
	return (c.kappa / 2.0) / Complex(-c.kappa / 2.0, shift - w);
}

CVec cavity_alpha(const std::vector<double>& w, const CavityParams& c, const CVec& drive_spectrum,
                  QubitState s) {
	if (w.size() != drive_spectrum.size()) throw std::invalid_argument("grid size mismatch");
	CVec out(w.size());
	for (std::size_t k = 0; k < w.size(); ++k)
		out[k] = cavity_alpha_factor(w[k], c, s) * drive_spectrum[k];
	return out;
}

Complex jpc_response(double w, const JpcChannel& ch) {
	const Complex pole(ch.kappa_jpc / 2.0, ch.delta);
	return ch.gain * pole / Complex(ch.kappa_jpc / 2.0, ch.delta + w);
}

CVec jpc_transfer(const std::vector<double>& w, const JpcChannel& ch) {
	CVec out(w.size());
	for (std::size_t k = 0; k < w.size(); ++k) out[k] = jpc_response(w[k], ch);
	return out;
}

CVec normalized_jpc_transfer(const std::vector<double>& w, const JpcChannel& ch, double dt) {
	CVec h = jpc_transfer(w, ch);
	// Parseval: sum |h(t)|^2 dt == sum |H(w)|^2 df, df = 1/(N dt).
	double energy = 0.0;
	for (const auto& v : h) energy += std::norm(v);
	energy /= static_cast<double>(h.size()) * dt;
	if (energy <= 0.0) throw std::invalid_argument("degenerate jpc transfer");
	const double scale = 1.0 / std::sqrt(energy);
	for (auto& v : h) v *= scale;
	return h;
}

} // namespace dsim::pulse
