#pragma once

#include "common/rng.hpp"
#include "measurement/model.hpp"

#include <cstdint>
#include <vector>

namespace dsim::measurement {

/// Square-bin grid over the (I, Q) outcome plane. Bin intervals are
/// half-open [lo, lo+width); outcomes outside the span clamp to edge bins.
struct BinSpec {
	double i_lo = 0.0;
	double q_lo = 0.0;
	double width = 1.0;
	int n_i = 1;
	int n_q = 1;

	static BinSpec square(double i_center, double q_center, double half_span, int n);

	int index_i(double v) const;
	int index_q(double v) const;
	bool clamps(const Outcome& o) const;
	double i_center(int i) const { return i_lo + (i + 0.5) * width; }
	double q_center(int q) const { return q_lo + (q + 0.5) * width; }
	int bins() const { return n_i * n_q; }
	/// Flat index, I-major: index = index_i * n_q + index_q.
	int flat_index(const Outcome& o) const { return index_i(o.i_m) * n_q + index_q(o.q_m); }
};

/// Default grid for a given strength: n x n square bins spanning the pointer
/// means plus/minus 5 sigma on both axes (equal extents keep bins square),
/// centered on I = 0, Q = q_bar.
BinSpec default_grid(double lambda, const ModelParams& p, int n = 51);

/// i.i.d. draws from the four-branch pointer mixture (equal weights; I-means
/// +sep, 0, 0, -sep with sep = sqrt(2*lambda)*sigma_m; common Q-mean q_bar;
/// per-quadrature std sigma_m). Reproducible from seed and shard-splittable:
/// shot k is produced by the stream (seed, k / kSamplerShard), so any
/// partitioning of shots into shards yields the same batch.
OutcomeBatch sample_outcomes(double lambda, std::size_t n, const ModelParams& p, std::uint64_t seed);

inline constexpr std::size_t kSamplerShard = 1 << 16;
inline constexpr std::uint64_t kSamplerStreamTag = 0x5a01;

struct Histogram {
	BinSpec spec;
	std::vector<std::uint64_t> counts; // flat, I-major
	std::uint64_t clamped = 0;         // outcomes that fell outside the span
	std::uint64_t total = 0;
};

Histogram bin_outcomes(const OutcomeBatch& batch, const BinSpec& spec);

} // namespace dsim::measurement
