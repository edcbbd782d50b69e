#include "measurement/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsim::measurement {

BinSpec BinSpec::square(double i_center, double q_center, double half_span, int n) {
	if (n < 1 || half_span <= 0.0) throw std::invalid_argument("bad bin spec");
	BinSpec s;
	s.n_i = s.n_q = n;
	s.width = 2.0 * half_span / n;
	s.i_lo = i_center - half_span;
	s.q_lo = q_center - half_span;
	return s;
}

int BinSpec::index_i(double v) const {
	const int idx = static_cast<int>(std::floor((v - i_lo) / width));
	return std::clamp(idx, 0, n_i - 1);
}

int BinSpec::index_q(double v) const {
	const int idx = static_cast<int>(std::floor((v - q_lo) / width));
	return std::clamp(idx, 0, n_q - 1);
}

bool BinSpec::clamps(const Outcome& o) const {
	const double di = (o.i_m - i_lo) / width;
	const double dq = (o.q_m - q_lo) / width;
	return di < 0.0 || di >= n_i || dq < 0.0 || dq >= n_q;
}

BinSpec default_grid(double lambda, const ModelParams& p, int n) {
	const double sep = std::sqrt(2.0 * lambda) * p.sigma_m;
	const double half = sep + 5.0 * p.sigma_m;
	return BinSpec::square(0.0, p.q_bar, half, n);
}

OutcomeBatch sample_outcomes(double lambda, std::size_t n, const ModelParams& p, std::uint64_t seed) {
	if (lambda < 0.0) throw std::invalid_argument("lambda must be non-negative");
	if (n == 0) throw std::invalid_argument("sample count must be positive");
	p.validate();

	const double sep = std::sqrt(2.0 * lambda) * p.sigma_m;
	const double means[4] = {+sep, 0.0, 0.0, -sep};

	OutcomeBatch batch;
	batch.seed = seed;
	batch.lambda = lambda;
	batch.outcomes.resize(n);

	SplitRng root(seed);
	const std::size_t shards = (n + kSamplerShard - 1) / kSamplerShard;
	for (std::size_t shard = 0; shard < shards; ++shard) {
		RngStream rng = root.stream(kSamplerStreamTag, shard);
		const std::size_t lo = shard * kSamplerShard;
		const std::size_t hi = std::min(n, lo + kSamplerShard);
		for (std::size_t k = lo; k < hi; ++k) {
			const auto branch = rng.next_below(4);
			batch.outcomes[k].i_m = means[branch] + p.sigma_m * rng.next_gaussian();
			batch.outcomes[k].q_m = p.q_bar + p.sigma_m * rng.next_gaussian();
		}
	}
	return batch;
}

Histogram bin_outcomes(const OutcomeBatch& batch, const BinSpec& spec) {
	Histogram h;
	h.spec = spec;
	h.counts.assign(static_cast<std::size_t>(spec.bins()), 0);
	for (const Outcome& o : batch.outcomes) {
		if (spec.clamps(o)) ++h.clamped;
		++h.counts[static_cast<std::size_t>(spec.flat_index(o))];
	}
	h.total = batch.outcomes.size();
	return h;
}

} // namespace dsim::measurement
