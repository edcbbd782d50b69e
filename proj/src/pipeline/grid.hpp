#pragma once

#include "analysis/marginal.hpp"
#include "pipeline/config.hpp"
#include "tomography/mle.hpp"

#include <cstdint>
#include <vector>

namespace dsim::pipeline {

/// Everything derived for one measurement strength up to tomography:
/// sampled outcomes, histogram, and the per-bin tomography shot records.
/// Each sampled shot contributes one tomography record to its bin (settings
/// assigned round-robin within the bin, in sampling order); bins with fewer
/// than min_bin_shots outcomes keep their histogram count but no records.
struct LambdaData {
	std::size_t lambda_index = 0;
	double lambda = 0.0;
	measurement::ModelParams params;
	measurement::BinSpec spec;
	measurement::Histogram histogram;
	std::vector<std::vector<tomography::ShotRecord>> records; // per bin, flat I-major
};

/// Sampling-only prefix of derive_lambda_data: fills everything except the
/// tomography records (identical streams, so the histogram matches the full
/// derivation bit for bit). When `batch_out` is given the raw outcomes are
/// kept for further processing.
LambdaData derive_lambda_samples(const RunConfig& cfg, std::size_t lambda_index,
                                 measurement::OutcomeBatch* batch_out = nullptr);

/// Sample, bin, and simulate per-shot tomography for one strength.
/// Deterministic given (cfg.seed, lambda_index); bins are processed by the
/// worker pool with per-bin derived streams.
LambdaData derive_lambda_data(const RunConfig& cfg, std::size_t lambda_index);

/// Per-bin MLE reconstruction of a record grid. Bins whose reconstruction
/// throws are dropped (recorded in `failed_bins`). The result's weights are
/// normalized over reconstructed bins.
struct ReconstructedGrid {
	analysis::ConditionalGrid grid;
	std::vector<tomography::CountsTable> counts;  // per bin (empty table if no records)
	std::vector<int> failed_bins;
	std::uint64_t reconstructed_shots = 0;
};
ReconstructedGrid reconstruct_grid(const LambdaData& data, const RunConfig& cfg);

/// Rebuild the conditional grid from per-bin resampled records (bootstrap
/// path). Keeps the same bin geometry/weights as the base data.
analysis::ConditionalGrid reconstruct_resampled(const LambdaData& data, const RunConfig& cfg,
                                                std::uint64_t resample_index);

} // namespace dsim::pipeline
