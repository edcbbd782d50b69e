#pragma once

#include "common/rng.hpp"
#include "tomography/simulate.hpp"

#include <cstdint>
#include <vector>

namespace dsim::analysis {

struct BootstrapConfig {
	int n_resamples = 2000;
	double percentile = 95.0; // central band width: [(100-p)/2, (100+p)/2]
	std::uint64_t seed = 0;
	std::uint64_t min_records = 50; // bins with fewer records are rejected

	void validate() const;
};

/// Resample records with replacement (same size as the input).
std::vector<tomography::ShotRecord> resample_records(const std::vector<tomography::ShotRecord>& records,
                                                     RngStream& rng);

/// Central percentile band of a sample: for percentile 95, the 2.5th and
/// 97.5th percentiles (linear interpolation between order statistics).
struct PercentileBand {
	double lo = 0.0;
	double hi = 0.0;
};
PercentileBand percentile_band(std::vector<double> values, double percentile);

} // namespace dsim::analysis
