#pragma once

#include "pulse/transfer.hpp"

#include <cstdint>

namespace dsim::pulse {

/// Flat-top target envelope: f(t) = (C/2)[tanh((t+td/2)/ts) - tanh((t-td/2)/ts)].
struct EnvelopeSpec {
	double amplitude = 1.0;  // C
	double t_slew = 80e-9;   // seconds
	double t_duration = 800e-9;

	void validate() const;
};

/// Uniformly sampled complex waveform. Sample i sits at t0 + i*dt; the
/// factory functions center the grid so t0 = -(n/2)*dt.
struct Waveform {
	CVec samples;
	double dt = 1.0;
	double t0 = 0.0;

	double time_at(std::size_t i) const { return t0 + static_cast<double>(i) * dt; }
	std::size_t size() const { return samples.size(); }
};

/// Sample the target envelope on a centered n-point grid (n a power of two,
/// grid span must cover [-t_duration, t_duration]).
Waveform target_envelope(const EnvelopeSpec& spec, std::size_t n, double dt);

inline constexpr double kDefaultDt = 2e-9; // 500 MS/s DAC rate
inline constexpr std::size_t kDefaultGrid = 1 << 14;

/// Drive pulse whose output signal difference regenerates the target:
/// spectral division of the target by the combined transfer
/// T(w) = sqrt(eta kappa) Hn(w) (alpha_g - alpha_e)(w), Tikhonov-regularized
/// with floor 1e-6 * max|T|. Throws std::runtime_error when |T| falls below
/// the floor inside the target's spectral support (ill-conditioned).
Waveform synthesize_drive(const Waveform& target, const CavityParams& cavity, const JpcChannel& jpc);

/// Output signal difference S(t) = sqrt(eta kappa) (h * (alpha_g - alpha_e))(t)
/// for a given drive, with h the unit-energy amplifier impulse response.
Waveform signal_difference(const CavityParams& cavity, const JpcChannel& jpc, const Waveform& drive);

/// Complex conjugate of every sample (Bob's channel undergoes conjugation in
/// conversion; apply before matching against Alice).
Waveform conjugated(const Waveform& w);

/// sqrt( sum|a-b|^2 / sum|a+b|^2 ). Throws when the denominator vanishes.
double mismatch(const Waveform& a, const Waveform& b);

/// Trapezoidal integral of |S(t)|^2 dt (the measurement strength).
double strength_integral(const Waveform& s);

/// Monte-Carlo demodulation of the induced outcome distribution: shots with
/// branch signals +-S/2 plus white noise at the single-mode vacuum level
/// sigma_q = 1/2 per quadrature (doubled by phase-preserving amplification),
/// matched-filtered by S. The recovered i_bar^2 / (2 sigma^2) estimates
/// strength_integral(s).
struct DemodulationStats {
	double i_bar = 0.0;
	double sigma = 0.0;
};
DemodulationStats simulate_demodulation(const Waveform& s, std::size_t shots, std::uint64_t seed);

} // namespace dsim::pulse
