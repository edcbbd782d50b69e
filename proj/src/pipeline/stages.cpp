#include "pipeline/stages.hpp"

#include "analysis/discord.hpp"
#include "common/csv.hpp"
#include "common/parallel.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

namespace dsim::pipeline {

namespace {

class Timer {
public:
	double elapsed() const {
		return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0_).count();
	}

private:
	std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

void note(std::ostream* log, const std::string& msg) {
	if (log)
		*log << msg << std::endl;
}

std::string fmt_secs(double s) {
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.1f s", s);
	return buf;
}

pulse::Waveform scaled(const pulse::Waveform& w, double factor) {
	pulse::Waveform out = w;
	for (auto& s : out.samples)
		s *= factor;
	return out;
}

void synth_pulses_into(ArtifactWriter& w, const RunConfig& cfg, const StageOptions& opt) {
	Timer t;
	const pulse::Waveform target =
	    pulse::target_envelope(cfg.envelope, cfg.pulse_grid_n, cfg.pulse_dt);
	const pulse::Waveform drive_a = pulse::synthesize_drive(target, cfg.cavity_alice, cfg.jpc);
	const pulse::Waveform drive_b = pulse::synthesize_drive(target, cfg.cavity_bob, cfg.jpc);
	const pulse::Waveform sig_a = pulse::signal_difference(cfg.cavity_alice, cfg.jpc, drive_a);
	const pulse::Waveform sig_b = pulse::signal_difference(cfg.cavity_bob, cfg.jpc, drive_b);
	// The degraded comparison: Bob skips his own compensation and replays
	// Alice's drive into his (different) cavity.
	const pulse::Waveform sig_b_skip = pulse::signal_difference(cfg.cavity_bob, cfg.jpc, drive_a);

	PulseSummary s;
	s.mismatch_matched = pulse::mismatch(sig_a, pulse::conjugated(sig_b));
	s.mismatch_uncompensated = pulse::mismatch(sig_a, pulse::conjugated(sig_b_skip));
	s.strength_alice = pulse::strength_integral(sig_a);
	s.strength_bob = pulse::strength_integral(sig_b);

	// Matched-filter calibration cross-check at a reference strength of 4.
	const double e_ref = 4.0;
	const pulse::Waveform ref = scaled(sig_a, std::sqrt(e_ref / s.strength_alice));
	const std::uint64_t demod_seed = SplitRng(cfg.seed).stream(0xde30).next_u64();
	const auto stats = pulse::simulate_demodulation(ref, 20000, demod_seed);
	s.demod_lambda_alice = stats.i_bar * stats.i_bar / (2.0 * stats.sigma * stats.sigma);

	write_waveform_csv(w, "pulses/target.csv", target);
	write_waveform_csv(w, "pulses/drive_alice.csv", drive_a);
	write_waveform_csv(w, "pulses/drive_bob.csv", drive_b);
	write_waveform_csv(w, "pulses/signal_alice.csv", sig_a);
	write_waveform_csv(w, "pulses/signal_bob.csv", sig_b);
	write_pulse_summary(w, s);
	note(opt.log, "[synth-pulses] mismatch matched " + format_double(s.mismatch_matched) +
	                  ", uncompensated " + format_double(s.mismatch_uncompensated) + " (" +
	                  fmt_secs(t.elapsed()) + ")");
}

struct LambdaProducts {
	LambdaData data;
	ReconstructedGrid rec;
};

LambdaProducts derive_and_reconstruct(const RunConfig& cfg, std::size_t li, std::ostream* log) {
	Timer t;
	LambdaProducts p;
	p.data = derive_lambda_data(cfg, li);
	p.rec = reconstruct_grid(p.data, cfg);
	std::size_t n_rec = 0;
	for (const auto& s : p.rec.grid.states)
		if (s)
			++n_rec;
	note(log, "[reconstruct] lambda " + format_double(p.data.lambda) + ": " +
	              std::to_string(n_rec) + " bins, " + std::to_string(p.rec.failed_bins.size()) +
	              " failed (" + fmt_secs(t.elapsed()) + ")");
	return p;
}

std::vector<tomography::CountsTable> bin_counts(const LambdaData& data) {
	std::vector<tomography::CountsTable> counts(data.records.size());
	for (std::size_t b = 0; b < data.records.size(); ++b)
		if (!data.records[b].empty())
			counts[b] = tomography::counts_from_records(data.records[b]);
	return counts;
}

void emit_reconstruction(ArtifactWriter& w, const LambdaProducts& p) {
	write_histogram_csv(w, p.data);
	write_counts_csv(w, p.data, p.rec.counts);
	write_tomogram_csv(w, p.data, p.rec);
	write_states_json(w, p.data, p.rec);
	write_theory_states_json(w, p.data, p.rec);
	write_slices_csv(w, p.data, p.rec);
}

} // namespace

std::vector<std::size_t> selected_lambdas(const RunConfig& cfg,
                                          const std::vector<double>& filter) {
	std::vector<std::size_t> out;
	if (filter.empty()) {
		for (std::size_t i = 0; i < cfg.lambdas.size(); ++i)
			out.push_back(i);
		return out;
	}
	for (double f : filter) {
		bool found = false;
		for (std::size_t i = 0; i < cfg.lambdas.size(); ++i) {
			if (std::abs(cfg.lambdas[i] - f) <= 1e-12 * std::max(1.0, std::abs(f))) {
				if (std::find(out.begin(), out.end(), i) == out.end())
					out.push_back(i);
				found = true;
				break;
			}
		}
		if (!found)
			throw std::runtime_error("lambda filter value " + format_double(f) +
			                         " is not a configured strength");
	}
	std::sort(out.begin(), out.end());
	return out;
}

StageResult run_synth_pulses(const RunConfig& cfg, const StageOptions& opt) {
	ArtifactWriter w(cfg.output_dir);
	synth_pulses_into(w, cfg, opt);
	return {w.written()};
}

StageResult run_sample(const RunConfig& cfg, const StageOptions& opt) {
	ArtifactWriter w(cfg.output_dir);
	for (std::size_t li : selected_lambdas(cfg, opt.lambda_filter)) {
		Timer t;
		const LambdaData data = derive_lambda_samples(cfg, li);
		write_histogram_csv(w, data);
		note(opt.log, "[sample] lambda " + format_double(data.lambda) + ": " +
		                  std::to_string(data.histogram.total) + " shots (" +
		                  fmt_secs(t.elapsed()) + ")");
	}
	return {w.written()};
}

StageResult run_tomo(const RunConfig& cfg, const StageOptions& opt) {
	ArtifactWriter w(cfg.output_dir);
	for (std::size_t li : selected_lambdas(cfg, opt.lambda_filter)) {
		Timer t;
		const LambdaData data = derive_lambda_data(cfg, li);
		write_histogram_csv(w, data);
		write_counts_csv(w, data, bin_counts(data));
		note(opt.log, "[tomo] lambda " + format_double(data.lambda) + " (" +
		                  fmt_secs(t.elapsed()) + ")");
	}
	return {w.written()};
}

StageResult run_reconstruct(const RunConfig& cfg, const StageOptions& opt) {
	ArtifactWriter w(cfg.output_dir);
	for (std::size_t li : selected_lambdas(cfg, opt.lambda_filter)) {
		const LambdaProducts p = derive_and_reconstruct(cfg, li, opt.log);
		emit_reconstruction(w, p);
	}
	return {w.written()};
}

DiscordRun analyze_discord(const LambdaData& data, const ReconstructedGrid& rec,
                           const RunConfig& cfg, std::ostream* log) {
	DiscordRun run;
	run.lambda = data.lambda;
	const analysis::ConditionalGrid& grid = rec.grid;

	Timer t_opt;
	const analysis::XiOptimum opt = analysis::optimize_xi(grid);
	run.xi_opt = opt.xi;
	run.gamma_opt = opt.gamma;
	run.gamma_avg = analysis::average_bin_purity(grid);
	run.r = run.gamma_avg > 0.0 ? 1.0 - opt.gamma / run.gamma_avg : 0.0;
	run.flat_objective = opt.flat;
	note(log, "[discord] lambda " + format_double(run.lambda) + ": xi_opt=(" +
	              format_double(opt.xi.xi_a) + ", " + format_double(opt.xi.xi_b) + "), r=" +
	              format_double(run.r) + (opt.flat ? " [flat]" : "") + " (" +
	              fmt_secs(t_opt.elapsed()) + ")");

	const auto cols = analysis::marginalize(grid, opt.xi);

	run.columns.resize(cols.size());
	parallel_for(cols.size(), cfg.workers, [&](std::size_t c) {
		DiscordColumn& out = run.columns[c];
		out.i_center = cols[c].i_center;
		out.weight = cols[c].weight;
		out.d_alice = analysis::discord(cols[c].rho, quantum::Subsystem::A);
		out.d_bob = analysis::discord(cols[c].rho, quantum::Subsystem::B);
		// Comparison value: the P(Q|I)-weighted average of the per-bin
		// discords in this column (no marginalization), expected to sit at
		// or above the marginalized value.
		double w_col = 0.0, a_sum = 0.0, b_sum = 0.0;
		for (int q = 0; q < grid.spec.n_q; ++q) {
			const auto b = static_cast<std::size_t>(cols[c].i_index * grid.spec.n_q + q);
			if (!grid.states[b])
				continue;
			w_col += grid.weight[b];
			a_sum += grid.weight[b] * analysis::discord(*grid.states[b], quantum::Subsystem::A);
			b_sum += grid.weight[b] * analysis::discord(*grid.states[b], quantum::Subsystem::B);
		}
		if (w_col > 0.0) {
			out.d_alice_qavg = a_sum / w_col;
			out.d_bob_qavg = b_sum / w_col;
		}
	});

	const int n_res = cfg.bootstrap.n_resamples;
	if (n_res > 0 && !cols.empty()) {
		Timer t_boot;
		// One result slot per resample keeps the output independent of the
		// worker count; resample randomness is indexed, not sequential.
		struct ResampleOut {
			std::vector<int> idx;
			std::vector<double> a, b;
		};
		std::vector<ResampleOut> slots(static_cast<std::size_t>(n_res));
		RunConfig inner = cfg;
		inner.workers = 1; // the pool is already busy at the resample level
		parallel_for(static_cast<std::size_t>(n_res), cfg.workers, [&](std::size_t r) {
			const analysis::ConditionalGrid g = reconstruct_resampled(data, inner, r);
			const analysis::XiOptimum xi_r = analysis::refine_xi(g, opt.xi);
			const auto mc = analysis::marginalize(g, xi_r.xi);
			ResampleOut& slot = slots[r];
			slot.idx.reserve(mc.size());
			slot.a.reserve(mc.size());
			slot.b.reserve(mc.size());
			for (const auto& col : mc) {
				slot.idx.push_back(col.i_index);
				slot.a.push_back(analysis::discord(col.rho, quantum::Subsystem::A));
				slot.b.push_back(analysis::discord(col.rho, quantum::Subsystem::B));
			}
		});

		std::vector<std::vector<double>> da(static_cast<std::size_t>(grid.spec.n_i));
		std::vector<std::vector<double>> db(static_cast<std::size_t>(grid.spec.n_i));
		for (const ResampleOut& slot : slots) {
			for (std::size_t k = 0; k < slot.idx.size(); ++k) {
				da[static_cast<std::size_t>(slot.idx[k])].push_back(slot.a[k]);
				db[static_cast<std::size_t>(slot.idx[k])].push_back(slot.b[k]);
			}
		}
		for (std::size_t c = 0; c < cols.size(); ++c) {
			const auto k = static_cast<std::size_t>(cols[c].i_index);
			if (da[k].empty())
				continue;
			const auto band_a = analysis::percentile_band(da[k], cfg.bootstrap.percentile);
			const auto band_b = analysis::percentile_band(db[k], cfg.bootstrap.percentile);
			run.columns[c].has_ci = true;
			run.columns[c].ci_a_lo = band_a.lo;
			run.columns[c].ci_a_hi = band_a.hi;
			run.columns[c].ci_b_lo = band_b.lo;
			run.columns[c].ci_b_hi = band_b.hi;
		}
		note(log, "[bootstrap] lambda " + format_double(run.lambda) + ": " +
		              std::to_string(n_res) + " resamples (" + fmt_secs(t_boot.elapsed()) + ")");
	}
	return run;
}

StageResult run_discord(const RunConfig& cfg, const StageOptions& opt) {
	ArtifactWriter w(cfg.output_dir);
	for (std::size_t li : selected_lambdas(cfg, opt.lambda_filter)) {
		const LambdaProducts p = derive_and_reconstruct(cfg, li, opt.log);
		write_discord_json(w, analyze_discord(p.data, p.rec, cfg, opt.log));
	}
	return {w.written()};
}

StageResult run_all(const RunConfig& cfg, const StageOptions& opt) {
	ArtifactWriter w(cfg.output_dir);
	w.add("config_resolved.json", dump_config(cfg));
	synth_pulses_into(w, cfg, opt);
	for (std::size_t li : selected_lambdas(cfg, opt.lambda_filter)) {
		const LambdaProducts p = derive_and_reconstruct(cfg, li, opt.log);
		emit_reconstruction(w, p);
		write_discord_json(w, analyze_discord(p.data, p.rec, cfg, opt.log));
	}
	write_manifest(w, cfg);
	StageResult res{w.written()};
	res.files.push_back("manifest.json");
	return res;
}

} // namespace dsim::pipeline
