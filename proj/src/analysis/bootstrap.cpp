#include "analysis/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsim::analysis {

void BootstrapConfig::validate() const {
	if (n_resamples < 1) throw std::invalid_argument("n_resamples must be >= 1");
	if (percentile <= 50.0 || percentile >= 100.0)
		throw std::invalid_argument("percentile must lie in (50, 100)");
}

std::vector<tomography::ShotRecord> resample_records(const std::vector<tomography::ShotRecord>& records,
                                                     RngStream& rng) {
	std::vector<tomography::ShotRecord> out(records.size());
	for (auto& r : out) r = records[rng.next_below(records.size())];
	return out;
}

static double percentile_at(const std::vector<double>& sorted, double q) {
	if (sorted.empty()) throw std::invalid_argument("empty sample");
	const double pos = q / 100.0 * static_cast<double>(sorted.size() - 1);
	const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
	const std::size_t hi = std::min(sorted.size() - 1, lo + 1);
	const double frac = pos - static_cast<double>(lo);
	return sorted[lo] * (1.0 - frac) + sorted[hi] * frac;
}

PercentileBand percentile_band(std::vector<double> values, double percentile) {
	if (percentile <= 50.0 || percentile >= 100.0)
		throw std::invalid_argument("percentile must lie in (50, 100)");
	std::sort(values.begin(), values.end());
	const double tail = (100.0 - percentile) / 2.0;
	return {percentile_at(values, tail), percentile_at(values, 100.0 - tail)};
}

} // namespace dsim::analysis
