#pragma once

#include "pulse/fft.hpp"

namespace dsim::pulse {

/// Dispersive readout cavity. All rates are angular (rad/s).
struct CavityParams {
	double kappa = 0.0; // linewidth
	double chi = 0.0;   // dispersive shift (must be nonzero)
	double eta = 1.0;   // collection efficiency in (0,1]

	void validate() const;
};

/// One-pole amplifier channel (phase-preserving converter).
struct JpcChannel {
	double gain = 1.0;      // amplitude gain G
	double kappa_jpc = 0.0; // linewidth (rad/s)
	double delta = 0.0;     // pole detuning (rad/s)

	void validate() const;
};

enum class QubitState { G, E };

/// Intracavity response per unit drive at angular frequency w:
/// alpha/epsilon = (kappa/2) / (-kappa/2 + i(-+chi/2 - w)), minus for G.
std::complex<double> cavity_alpha_factor(double w, const CavityParams& c, QubitState s);

/// Frequency-domain cavity field for a drive spectrum (same grid).
CVec cavity_alpha(const std::vector<double>& w, const CavityParams& c, const CVec& drive_spectrum,
                  QubitState s);

/// One-pole response H(w) = G (kappa/2 + i delta) / (kappa/2 + i (delta + w)).
std::complex<double> jpc_response(double w, const JpcChannel& ch);

/// H evaluated across a frequency grid.
CVec jpc_transfer(const std::vector<double>& w, const JpcChannel& ch);

/// H rescaled so the corresponding impulse response has unit energy on this
/// grid: sum |h(t)|^2 dt = 1 (Parseval-evaluated).
CVec normalized_jpc_transfer(const std::vector<double>& w, const JpcChannel& ch, double dt);

} // namespace dsim::pulse
