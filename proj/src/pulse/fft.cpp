#include "pulse/fft.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dsim::pulse {

void fft_radix2(CVec& data, bool inverse) {
	const std::size_t n = data.size();
	if (n == 0 || (n & (n - 1)) != 0) throw std::invalid_argument("fft size must be a power of two");

	// Bit-reversal permutation.
	for (std::size_t i = 1, j = 0; i < n; ++i) {
		std::size_t bit = n >> 1;
		for (; j & bit; bit >>= 1) j ^= bit;
		j ^= bit;
		if (i < j) std::swap(data[i], data[j]);
	}

	const double sign = inverse ? 1.0 : -1.0;
	for (std::size_t len = 2; len <= n; len <<= 1) {
		const double ang = sign * 2.0 * std::numbers::pi / static_cast<double>(len);
		const std::complex<double> wlen(std::cos(ang), std::sin(ang));
		for (std::size_t i = 0; i < n; i += len) {
			std::complex<double> w(1.0, 0.0);
			for (std::size_t k = 0; k < len / 2; ++k) {
				const std::complex<double> u = data[i + k];
				const std::complex<double> v = data[i + k + len / 2] * w;
				data[i + k] = u + v;
				data[i + k + len / 2] = u - v;
				w *= wlen;
			}
		}
	}
}

CVec spectrum_from_time(const CVec& x, double dt) {
	CVec out = x;
	fft_radix2(out, false);
	for (auto& v : out) v *= dt;
	return out;
}

CVec time_from_spectrum(const CVec& spectrum, double dt) {
	CVec out = spectrum;
	fft_radix2(out, true);
	const double scale = 1.0 / (static_cast<double>(out.size()) * dt);
	for (auto& v : out) v *= scale;
	return out;
}

std::vector<double> angular_frequencies(std::size_t n, double dt) {
	std::vector<double> w(n);
	const double base = 2.0 * std::numbers::pi / (static_cast<double>(n) * dt);
	for (std::size_t k = 0; k < n; ++k) {
		const double idx = (k < n / 2) ? static_cast<double>(k)
		                               : static_cast<double>(k) - static_cast<double>(n);
		w[k] = base * idx;
	}
	return w;
}

} // namespace dsim::pulse
