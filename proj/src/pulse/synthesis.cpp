#include "pulse/synthesis.hpp"

#include "common/rng.hpp"

#include <cmath>
#include <stdexcept>

namespace dsim::pulse {

using Complex = std::complex<double>;

void EnvelopeSpec::validate() const {
	if (t_slew <= 0.0 || t_duration <= 0.0) throw std::invalid_argument("envelope times must be positive");
}

Waveform target_envelope(const EnvelopeSpec& spec, std::size_t n, double dt) {
	spec.validate();
	if (n < 2 || dt <= 0.0) throw std::invalid_argument("bad grid");
	const double span = static_cast<double>(n) * dt;
	if (span < 2.0 * spec.t_duration) throw std::invalid_argument("grid too short for envelope");

	Waveform w;
	w.dt = dt;
	w.t0 = -0.5 * span;
	w.samples.resize(n);
	for (std::size_t i = 0; i < n; ++i) {
		const double t = w.time_at(i);
		const double up = std::tanh((t + spec.t_duration / 2.0) / spec.t_slew);
		const double dn = std::tanh((t - spec.t_duration / 2.0) / spec.t_slew);
		w.samples[i] = spec.amplitude / 2.0 * (up - dn);
	}
	return w;
}

namespace {

/// Combined target-to-signal transfer sqrt(eta kappa) Hn (alpha_g - alpha_e).
CVec combined_transfer(const std::vector<double>& w, const CavityParams& cavity,
                       const JpcChannel& jpc, double dt) {
	cavity.validate();
	jpc.validate();
	const CVec hn = normalized_jpc_transfer(w, jpc, dt);
	const double gain = std::sqrt(cavity.eta * cavity.kappa);
	CVec t(w.size());
	for (std::size_t k = 0; k < w.size(); ++k) {
		const Complex diff =
		    cavity_alpha_factor(w[k], cavity, QubitState::G) - cavity_alpha_factor(w[k], cavity, QubitState::E);
		t[k] = gain * hn[k] * diff;
	}
	return t;
}

} // namespace

Waveform synthesize_drive(const Waveform& target, const CavityParams& cavity, const JpcChannel& jpc) {
	const auto w = angular_frequencies(target.size(), target.dt);
	const CVec transfer = combined_transfer(w, cavity, jpc, target.dt);
	const CVec f = spectrum_from_time(target.samples, target.dt);

	double t_max = 0.0, f_max = 0.0;
	for (std::size_t k = 0; k < w.size(); ++k) {
		t_max = std::max(t_max, std::abs(transfer[k]));
		f_max = std::max(f_max, std::abs(f[k]));
	}
	const double floor = 1e-6 * t_max;
	CVec eps(w.size());
	for (std::size_t k = 0; k < w.size(); ++k) {
		if (std::abs(f[k]) > 1e-6 * f_max && std::abs(transfer[k]) < floor)
			throw std::runtime_error("ill-conditioned synthesis: transfer below regularization floor in band");
		eps[k] = f[k] * std::conj(transfer[k]) / (std::norm(transfer[k]) + floor * floor);
	}

	Waveform drive;
	drive.dt = target.dt;
	drive.t0 = target.t0;
	drive.samples = time_from_spectrum(eps, target.dt);
	return drive;
}

Waveform signal_difference(const CavityParams& cavity, const JpcChannel& jpc, const Waveform& drive) {
	const auto w = angular_frequencies(drive.size(), drive.dt);
	const CVec transfer = combined_transfer(w, cavity, jpc, drive.dt);
	CVec eps = spectrum_from_time(drive.samples, drive.dt);
	for (std::size_t k = 0; k < w.size(); ++k) eps[k] *= transfer[k];

	Waveform s;
	s.dt = drive.dt;
	s.t0 = drive.t0;
	s.samples = time_from_spectrum(eps, drive.dt);
	return s;
}

Waveform conjugated(const Waveform& w) {
	Waveform out = w;
	for (auto& v : out.samples) v = std::conj(v);
	return out;
}

double mismatch(const Waveform& a, const Waveform& b) {
	if (a.size() != b.size()) throw std::invalid_argument("waveform size mismatch");
	double num = 0.0, den = 0.0;
	for (std::size_t i = 0; i < a.size(); ++i) {
		num += std::norm(a.samples[i] - b.samples[i]);
		den += std::norm(a.samples[i] + b.samples[i]);
	}
	if (den <= 0.0) throw std::invalid_argument("mismatch undefined: signals cancel exactly");
	return std::sqrt(num / den);
}

double strength_integral(const Waveform& s) {
	if (s.size() < 2) return 0.0;
	double acc = 0.0;
	for (std::size_t i = 0; i + 1 < s.size(); ++i)
		acc += 0.5 * (std::norm(s.samples[i]) + std::norm(s.samples[i + 1]));
	return acc * s.dt;
}

DemodulationStats simulate_demodulation(const Waveform& s, std::size_t shots, std::uint64_t seed) {
	if (shots < 2) throw std::invalid_argument("need at least 2 shots");
	const double energy = strength_integral(s);
	if (energy <= 0.0) throw std::invalid_argument("zero-energy signal");

	// Matched filter w = S*/sqrt(E); per-sample complex noise with
	// per-quadrature variance (2 sigma_q^2)/dt, sigma_q = 1/2.
	const double noise_std = std::sqrt(0.5 / s.dt);
	SplitRng root(seed);
	double sum[2] = {0.0, 0.0};
	double sumsq[2] = {0.0, 0.0};
	std::size_t n_of[2] = {0, 0};
	for (std::size_t shot = 0; shot < shots; ++shot) {
		RngStream rng = root.stream(0x0de3, shot);
		const int branch = shot % 2; // alternate +S/2, -S/2
		const double sgn = branch ? -1.0 : 1.0;
		Complex acc(0.0, 0.0);
		for (std::size_t i = 0; i < s.size(); ++i) {
			const Complex y = sgn * 0.5 * s.samples[i] +
			                  Complex(noise_std * rng.next_gaussian(), noise_std * rng.next_gaussian());
			acc += std::conj(s.samples[i]) * y;
		}
		const double m = (acc * s.dt).real() / std::sqrt(energy);
		sum[branch] += m;
		sumsq[branch] += m * m;
		++n_of[branch];
	}
	double mean[2], var[2];
	for (int b = 0; b < 2; ++b) {
		mean[b] = sum[b] / static_cast<double>(n_of[b]);
		var[b] = sumsq[b] / static_cast<double>(n_of[b]) - mean[b] * mean[b];
	}
	DemodulationStats out;
	out.i_bar = mean[0] - mean[1];
	out.sigma = std::sqrt(0.5 * (var[0] + var[1]));
	return out;
}

} // namespace dsim::pulse
