#pragma once

#include "pipeline/grid.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dsim::pipeline {

/// Collects emitted files (relative paths) so the manifest can cover
/// exactly what a run wrote.
class ArtifactWriter {
public:
	explicit ArtifactWriter(std::string out_dir) : out_dir_(std::move(out_dir)) {}

	/// Write `content` under out_dir/rel and record it for the manifest.
	void add(const std::string& rel, const std::string& content);

	const std::vector<std::string>& written() const { return written_; }
	const std::vector<std::uint64_t>& hashes() const { return hashes_; }
	const std::string& out_dir() const { return out_dir_; }

private:
	std::string out_dir_;
	std::vector<std::string> written_;
	std::vector<std::uint64_t> hashes_;
};

std::uint64_t fnv1a64(const std::string& bytes);

std::string lambda_dir(double lambda);

void write_histogram_csv(ArtifactWriter& w, const LambdaData& data);
void write_counts_csv(ArtifactWriter& w, const LambdaData& data,
                      const std::vector<tomography::CountsTable>& counts);
void write_tomogram_csv(ArtifactWriter& w, const LambdaData& data, const ReconstructedGrid& rec);
void write_states_json(ArtifactWriter& w, const LambdaData& data, const ReconstructedGrid& rec);
void write_theory_states_json(ArtifactWriter& w, const LambdaData& data,
                              const ReconstructedGrid& rec);
void write_slices_csv(ArtifactWriter& w, const LambdaData& data, const ReconstructedGrid& rec);
void write_waveform_csv(ArtifactWriter& w, const std::string& rel, const pulse::Waveform& wf);

/// Final per-strength analysis record (see discord.json schema in README).
struct DiscordColumn {
	double i_center = 0.0;
	double weight = 0.0;
	double d_alice = 0.0;
	double d_bob = 0.0;
	double d_alice_qavg = 0.0; // Q-weighted average of per-bin discords
	double d_bob_qavg = 0.0;   // (comparison value; no marginalization)
	bool has_ci = false;
	double ci_a_lo = 0.0, ci_a_hi = 0.0;
	double ci_b_lo = 0.0, ci_b_hi = 0.0;
};

struct DiscordRun {
	double lambda = 0.0;
	analysis::XiPair xi_opt;
	double gamma_opt = 0.0;
	double gamma_avg = 0.0;
	double r = 0.0;
	bool flat_objective = false;
	std::vector<DiscordColumn> columns;
};

void write_discord_json(ArtifactWriter& w, const DiscordRun& run);

/// Pulse-stage summary (mismatch, strengths, the degraded comparison).
struct PulseSummary {
	double mismatch_matched = 0.0;
	double mismatch_uncompensated = 0.0;
	double strength_alice = 0.0;
	double strength_bob = 0.0;
	double demod_lambda_alice = 0.0; // Monte-Carlo cross-check of the strength
};
void write_pulse_summary(ArtifactWriter& w, const PulseSummary& s);

void write_manifest(ArtifactWriter& w, const RunConfig& cfg);

} // namespace dsim::pipeline
