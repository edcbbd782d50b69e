#pragma once

#include "analysis/bootstrap.hpp"
#include "measurement/model.hpp"
#include "pulse/synthesis.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace dsim::pipeline {

/// Full run configuration. Loaded from a JSON file whose keys carry explicit
/// unit suffixes (_hz for cycles/s, _ns for nanoseconds, _rad for radians);
/// angular rates are derived internally. See configs/default.json for the
/// documented schema.
struct RunConfig {
	measurement::ModelParams model;
	// Per-strength Q offsets; either one global value or one per lambda.
	std::vector<double> q_bar_per_lambda;

	pulse::CavityParams cavity_alice;
	pulse::CavityParams cavity_bob;
	pulse::JpcChannel jpc; // one amplifier sums both channels
	pulse::EnvelopeSpec envelope;
	std::size_t pulse_grid_n = pulse::kDefaultGrid;
	double pulse_dt = pulse::kDefaultDt;

	std::vector<double> lambdas{0.0, 0.3, 0.6, 1.0, 1.3, 6.0};
	std::uint64_t shots_total = 4'500'000; // per strength
	int grid_n = 51;
	double grid_span_sigma = 5.0;   // padding beyond the extreme pointer means
	std::uint64_t min_bin_shots = 50;
	analysis::BootstrapConfig bootstrap;

	std::uint64_t seed = 1;
	int workers = 0; // 0 = hardware concurrency
	std::string output_dir = "out";

	/// Q offset for the strength at index `li`.
	double q_bar_at(std::size_t li) const;
	/// ModelParams specialized to one strength (q_bar and i_bar filled in).
	measurement::ModelParams model_at(double lambda, std::size_t lambda_index) const;
};

RunConfig default_config();

/// Parse a JSON config file. Unknown keys are rejected (typo protection).
/// Throws std::runtime_error with a path-qualified message on any error.
RunConfig load_config(const std::string& path);

/// Canonical JSON serialization (sorted keys, stable float formatting) used
/// for hashing and for `config-dump`.
std::string dump_config(const RunConfig& cfg);

struct ConfigViolation {
	std::string path;
	std::string message;
};

/// Structural validation: every violated invariant with its config path.
/// Empty result means the config is runnable.
std::vector<ConfigViolation> validate_config(const RunConfig& cfg);

} // namespace dsim::pipeline
