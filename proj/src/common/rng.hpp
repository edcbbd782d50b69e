#pragma once

#include <cstdint>
#include <random>

namespace dsim {

// Splittable deterministic RNG. Independent streams are derived from a root
// seed plus an arbitrary list of stream tags (shard index, bin index,
// resample index, ...), so parallel workers never share an engine and every
// draw is reproducible from (seed, tags) alone.
class RngStream {
public:
	explicit RngStream(std::uint64_t state) : engine_(state) {}

	std::uint64_t next_u64() { return engine_(); }

	// Uniform double in (0, 1]; never returns 0 so log() stays finite.
	double next_uniform();

	// Standard normal deviate (Box-Muller; stdlib distributions are avoided
	// so that byte-identical output does not depend on the C++ runtime).
	double next_gaussian();

	// Integer in [0, n).
	std::uint64_t next_below(std::uint64_t n);

private:
	std::mt19937_64 engine_;
	bool have_spare_ = false;
	double spare_ = 0.0;
};

// Root generator: mixes (seed, tags...) into an engine seed via splitmix64.
class SplitRng {
public:
	explicit SplitRng(std::uint64_t seed) : seed_(seed) {}

	RngStream stream(std::uint64_t a, std::uint64_t b = 0, std::uint64_t c = 0) const;

	std::uint64_t seed() const { return seed_; }

private:
	std::uint64_t seed_;
};

std::uint64_t splitmix64(std::uint64_t x);

} // namespace dsim
