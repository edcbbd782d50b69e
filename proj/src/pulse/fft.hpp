#pragma once

#include <complex>
#include <vector>

namespace dsim::pulse {

using CVec = std::vector<std::complex<double>>;

/// In-place radix-2 FFT. size must be a power of two.
/// inverse == false: X[k] = sum_n x[n] e^{-2 pi i k n / N}
/// inverse == true:  x[n] = sum_k X[k] e^{+2 pi i k n / N} (unscaled).
void fft_radix2(CVec& data, bool inverse);

/// Continuous-time conventions on a uniform grid with sample interval dt:
/// spectrum X(w_k) ~ dt * DFT, waveform x(t_n) ~ IDFT / (N * dt), so that
/// time_from_spectrum(spectrum_from_time(x)) == x and Parseval reads
/// sum |x|^2 dt == sum |X|^2 df with df = 1/(N dt).
CVec spectrum_from_time(const CVec& x, double dt);
CVec time_from_spectrum(const CVec& spectrum, double dt);

/// Angular frequencies matching the DFT bin order (non-negative first,
/// then negative): w[k] = 2 pi k / (N dt) for k < N/2, w[k] - 2 pi / dt after.
std::vector<double> angular_frequencies(std::size_t n, double dt);

} // namespace dsim::pulse
