#pragma once

#include "pipeline/artifacts.hpp"

#include <iosfwd>
#include <string>
#include <vector>

namespace dsim::pipeline {

/// Options shared by every stage driver. Stages are stateless: each one
/// re-derives its inputs deterministically from (config, seed), so they can
/// be run independently or chained without intermediate files.
struct StageOptions {
	std::vector<double> lambda_filter; // empty = every configured strength
	std::ostream* log = nullptr;       // progress/timing notes (CLI: stderr)
};

struct StageResult {
	std::vector<std::string> files; // written, relative to cfg.output_dir
};

/// Indices into cfg.lambdas selected by the filter (empty filter = all).
/// Throws std::runtime_error when a filter value matches nothing.
std::vector<std::size_t> selected_lambdas(const RunConfig& cfg,
                                          const std::vector<double>& filter);

/// Pulse synthesis for both channels: target, matched drives, output
/// signals, and the mismatch/strength summary.
StageResult run_synth_pulses(const RunConfig& cfg, const StageOptions& opt = {});

/// Outcome sampling + binning; writes per-strength histograms.
StageResult run_sample(const RunConfig& cfg, const StageOptions& opt = {});

/// Sampling + per-shot tomography; writes histograms and raw setting counts.
StageResult run_tomo(const RunConfig& cfg, const StageOptions& opt = {});

/// Everything through per-bin MLE; writes the reconstructed state grid,
/// the model-predicted grid, and the fringe slices.
StageResult run_reconstruct(const RunConfig& cfg, const StageOptions& opt = {});

/// Everything through the discord/bootstrap analysis; writes discord.json
/// per strength.
StageResult run_discord(const RunConfig& cfg, const StageOptions& opt = {});

/// Full pipeline plus config_resolved.json and the hash manifest.
StageResult run_all(const RunConfig& cfg, const StageOptions& opt = {});

/// The per-strength discord/bootstrap analysis on already-derived data
/// (exposed so tests can reach the assembled numbers directly).
DiscordRun analyze_discord(const LambdaData& data, const ReconstructedGrid& rec,
                           const RunConfig& cfg, std::ostream* log = nullptr);

} // namespace dsim::pipeline
