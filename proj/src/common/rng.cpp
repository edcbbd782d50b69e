#include "common/rng.hpp"

#include <cmath>

namespace dsim {

std::uint64_t splitmix64(std::uint64_t x) {
	x += 0x9e3779b97f4a7c15ull;
	x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
	x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
	return x ^ (x >> 31);
}

double RngStream::next_uniform() {
	// 53 usable bits, mapped to (0, 1].
	const std::uint64_t bits = engine_() >> 11;
	return (static_cast<double>(bits) + 1.0) * 0x1.0p-53;
}

double RngStream::next_gaussian() {
	if (have_spare_) {
		have_spare_ = false;
		return spare_;
	}
	const double u1 = next_uniform();
	const double u2 = next_uniform();
	const double r = std::sqrt(-2.0 * std::log(u1));
	const double a = 2.0 * M_PI * u2;
	spare_ = r * std::sin(a);
	have_spare_ = true;
	return r * std::cos(a);
}

std::uint64_t RngStream::next_below(std::uint64_t n) {
	// Rejection sampling keeps the draw unbiased for any n.
	const std::uint64_t limit = ~0ull - (~0ull % n);
	std::uint64_t v = engine_();
	while (v >= limit) v = engine_();
	return v % n;
}

RngStream SplitRng::stream(std::uint64_t a, std::uint64_t b, std::uint64_t c) const {
	std::uint64_t h = splitmix64(seed_ ^ 0x6a09e667f3bcc908ull);
	h = splitmix64(h ^ a);
	h = splitmix64(h ^ b);
	h = splitmix64(h ^ c);
	return RngStream(h);
}

} // namespace dsim
