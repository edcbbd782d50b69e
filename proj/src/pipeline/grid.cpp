#include "pipeline/grid.hpp"

#include "common/parallel.hpp"
#include "measurement/conditional_state.hpp"

#include <cmath>
#include <stdexcept>
#include <utility>

namespace dsim::pipeline {

using measurement::BinSpec;
using measurement::Outcome;
using tomography::ShotRecord;

namespace {

// Stream-tag bases for deterministic sub-seeding; the lambda index is packed
// into the high bits so every (purpose, lambda) pair gets its own stream.
constexpr std::uint64_t kTagSample = 0x10;
constexpr std::uint64_t kTagTomo = 0x20;
constexpr std::uint64_t kTagBoot = 0x30;

std::uint64_t packed_tag(std::uint64_t base, std::size_t lambda_index) {
	return base | (static_cast<std::uint64_t>(lambda_index) << 8);
}

} // namespace

LambdaData derive_lambda_samples(const RunConfig& cfg, std::size_t lambda_index,
                                 measurement::OutcomeBatch* batch_out) {
	LambdaData data;
	data.lambda_index = lambda_index;
	data.lambda = cfg.lambdas.at(lambda_index);
	data.params = cfg.model_at(data.lambda, lambda_index);

	const double sep = std::sqrt(2.0 * data.lambda) * data.params.sigma_m;
	const double half = sep + cfg.grid_span_sigma * data.params.sigma_m;
	data.spec = BinSpec::square(0.0, data.params.q_bar, half, cfg.grid_n);

	const std::uint64_t sample_seed =
	    SplitRng(cfg.seed).stream(packed_tag(kTagSample, lambda_index)).next_u64();
	measurement::OutcomeBatch batch =
	    measurement::sample_outcomes(data.lambda, cfg.shots_total, data.params, sample_seed);
	data.histogram = measurement::bin_outcomes(batch, data.spec);
	if (batch_out)
		*batch_out = std::move(batch);
	return data;
}

LambdaData derive_lambda_data(const RunConfig& cfg, std::size_t lambda_index) {
	measurement::OutcomeBatch batch;
	LambdaData data = derive_lambda_samples(cfg, lambda_index, &batch);

	// Group outcomes by bin in sampling order.
	std::vector<std::vector<Outcome>> members(static_cast<std::size_t>(data.spec.bins()));
	for (int b = 0; b < data.spec.bins(); ++b)
		members[static_cast<std::size_t>(b)].reserve(data.histogram.counts[static_cast<std::size_t>(b)]);
	for (const Outcome& o : batch.outcomes)
		members[static_cast<std::size_t>(data.spec.flat_index(o))].push_back(o);

	// Per-shot tomography: each outcome's own conditional state, settings
	// round-robin within the bin.
	data.records.resize(members.size());
	SplitRng root(cfg.seed);
	parallel_for(members.size(), cfg.workers, [&](std::size_t b) {
		const auto& list = members[b];
		if (list.size() < cfg.min_bin_shots) return;
		RngStream rng = root.stream(packed_tag(kTagTomo, lambda_index), b);
		auto& recs = data.records[b];
		recs.reserve(list.size());
		for (std::size_t k = 0; k < list.size(); ++k) {
			const auto setting = static_cast<int>(k % tomography::kSettings);
			const quantum::Mat4 rho = measurement::conditional_state(data.lambda, list[k], data.params);
			const auto q = tomography::outcome_probabilities(rho, tomography::setting_at(setting),
			                                                 data.params.c_tomo);
			const double u = rng.next_uniform();
			std::uint8_t o = 3;
			if (u <= q[0])
				o = 0;
			else if (u <= q[0] + q[1])
				o = 1;
			else if (u <= q[0] + q[1] + q[2])
				o = 2;
			recs.push_back({static_cast<std::uint8_t>(setting), o});
		}
	});
	return data;
}

namespace {

analysis::ConditionalGrid reconstruct_from_records(
    const LambdaData& data, const RunConfig& cfg,
    const std::vector<std::vector<ShotRecord>>& records,
    std::vector<tomography::CountsTable>* counts_out, std::vector<int>* failed_out,
    std::uint64_t* shots_out) {
	const std::size_t n_bins = records.size();
	analysis::ConditionalGrid grid;
	grid.spec = data.spec;
	grid.weight.assign(n_bins, 0.0);
	grid.states.assign(n_bins, std::nullopt);
	if (counts_out) counts_out->assign(n_bins, {});

	std::vector<int> failed(n_bins, 0);
	parallel_for(n_bins, cfg.workers, [&](std::size_t b) {
		if (records[b].empty()) return;
		const tomography::CountsTable counts = tomography::counts_from_records(records[b]);
		if (counts_out) (*counts_out)[b] = counts;
		try {
			grid.states[b] = tomography::mle_reconstruct(counts, data.params.c_tomo).rho;
			grid.weight[b] = static_cast<double>(records[b].size());
		} catch (const std::exception&) {
			failed[b] = 1;
		}
	});

	std::uint64_t shots = 0;
	for (std::size_t b = 0; b < n_bins; ++b) {
		if (failed[b] && failed_out) failed_out->push_back(static_cast<int>(b));
		if (grid.states[b]) shots += records[b].size();
	}
	if (shots_out) *shots_out = shots;
	grid.normalize_weights();
	return grid;
}

} // namespace

ReconstructedGrid reconstruct_grid(const LambdaData& data, const RunConfig& cfg) {
	ReconstructedGrid out;
	out.grid = reconstruct_from_records(data, cfg, data.records, &out.counts, &out.failed_bins,
	                                    &out.reconstructed_shots);
	return out;
}

analysis::ConditionalGrid reconstruct_resampled(const LambdaData& data, const RunConfig& cfg,
                                                std::uint64_t resample_index) {
	SplitRng root(cfg.seed);
	std::vector<std::vector<ShotRecord>> resampled(data.records.size());
	for (std::size_t b = 0; b < data.records.size(); ++b) {
		if (data.records[b].empty()) continue;
		RngStream rng = root.stream(packed_tag(kTagBoot, data.lambda_index), resample_index, b);
		resampled[b] = analysis::resample_records(data.records[b], rng);
	}
	return reconstruct_from_records(data, cfg, resampled, nullptr, nullptr, nullptr);
}

} // namespace dsim::pipeline
