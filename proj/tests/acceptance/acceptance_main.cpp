// Acceptance suite: each criterion prints [INFO] detail lines and the runner
// emits exactly one [PASS]/[FAIL] line per criterion. Select a single
// criterion with argv[1] (c1..c9) or run everything with "all" (default).
// Exit code 0 iff every selected criterion passed.

#include "analysis/discord.hpp"
#include "analysis/marginal.hpp"
#include "common/csv.hpp"
#include "common/rng.hpp"
#include "measurement/conditional_state.hpp"
#include "pipeline/stages.hpp"
#include "pulse/synthesis.hpp"
#include "quantum/density_matrix.hpp"
#include "testutil.hpp"
#include "tomography/mle.hpp"
#include "tomography/simulate.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <functional>
#include <limits>
#include <map>
#include <string>
#include <vector>

using namespace dsim;
using namespace dsim::quantum;
using namespace dsim::measurement;
using namespace dsim::pipeline;

namespace {

void info(const char* fmt, ...) {
	std::va_list args;
	va_start(args, fmt);
	std::printf("[INFO] ");
	std::vprintf(fmt, args);
	std::printf("\n");
	std::fflush(stdout);
	va_end(args);
}

Mat2 ket2(Complex a, Complex b) {
	Eigen::Vector2cd v;
	v << a, b;
	v.normalize();
	return v * v.adjoint();
}

Mat4 bell_phi_plus() {
	Eigen::Vector4cd psi;
	psi << 1.0, 0.0, 0.0, 1.0;
	psi /= std::sqrt(2.0);
	return psi * psi.adjoint();
}

// ---------------------------------------------------------------------------
// c1: conditional states vs the analytic fringe components.

bool c1() {
	ModelParams p;
	const double lambdas[] = {0.0, 0.3, 0.6, 1.3, 6.0};
	double worst = 0.0;
	int states = 0;
	for (double lam : lambdas) {
		const double sep = std::sqrt(2.0 * lam) * p.sigma_m;
		for (int a = 0; a < 9; ++a) {
			for (int b = 0; b < 9; ++b) {
				const Outcome o{-(sep + 3.0) + a * (2.0 * (sep + 3.0) / 8.0), -3.0 + b * 0.75};
				const PauliVector pv = pauli_expectations(conditional_state(lam, o, p));
				const FringeComponents f = conditional_pauli_closed_form(lam, o, p);
				worst = std::max({worst, std::abs(pv.at("XX") - f.xx), std::abs(pv.at("YY") - f.yy),
				                  std::abs(pv.at("XY") - f.xy), std::abs(pv.at("YX") - f.yx),
				                  std::abs(pv.at("ZZ") - f.zz)});
				++states;
			}
		}
	}
	info("c1: max |simulated - analytic| = %.3e over %d conditional states (5 strengths x 9x9 outcomes, tolerance 1e-6)",
	     worst, states);
	return worst < 1e-6;
}

// ---------------------------------------------------------------------------
// c2: known-value discord suite + the separable-but-discordant mixture.

bool c2() {
	bool ok = true;
	const Mat2 plus = ket2(1.0, 1.0);
	const Mat2 minus = ket2(1.0, -1.0);
	const Mat2 g = ket2(1.0, 0.0);
	const Mat2 e = ket2(0.0, 1.0);

	const double d_pp = analysis::discord(kron(plus, plus), Subsystem::A);
	info("c2: discord(|++>) = %.2e (expect 0 within 1e-4)", d_pp);
	ok = ok && std::abs(d_pp) < 1e-4;

	const double d_bell = analysis::discord(bell_phi_plus(), Subsystem::A);
	info("c2: discord(Bell) = %.6f (expect 1 within 1e-4)", d_bell);
	ok = ok && std::abs(d_bell - 1.0) < 1e-4;

	const Mat4 classical = 0.5 * kron(g, e) + 0.5 * kron(e, g);
	const double d_cl = analysis::discord(classical, Subsystem::A);
	info("c2: discord(1/2(|ge><ge| + |eg><eg|)) = %.2e (expect 0 within 1e-4)", d_cl);
	ok = ok && std::abs(d_cl) < 1e-4;

	// Separable four-term mixture: no entanglement, strictly positive discord.
	const Mat4 mix = 0.25 * (kron(g, e) + kron(e, g) + kron(minus, plus) + kron(plus, minus));
	for (Subsystem side : {Subsystem::A, Subsystem::B}) {
		const double refined = analysis::discord(mix, side);
		const double brute = analysis::discord_brute_force(mix, side, 64, 128);
		info("c2: four-term mixture side %c: discord = %.6f, projector-grid oracle = %.6f, |diff| = %.2e",
		     side == Subsystem::A ? 'A' : 'B', refined, brute, std::abs(refined - brute));
		ok = ok && refined > 1e-3 && std::abs(refined - brute) <= 1e-3;
	}
	return ok;
}

// ---------------------------------------------------------------------------
// c3: mode matching of the synthesized pulses.

bool c3() {
	const RunConfig cfg = default_config();
	const pulse::Waveform target = pulse::target_envelope(cfg.envelope, cfg.pulse_grid_n, cfg.pulse_dt);
	const pulse::Waveform drive_a = pulse::synthesize_drive(target, cfg.cavity_alice, cfg.jpc);
	const pulse::Waveform drive_b = pulse::synthesize_drive(target, cfg.cavity_bob, cfg.jpc);
	const pulse::Waveform sig_a = pulse::signal_difference(cfg.cavity_alice, cfg.jpc, drive_a);
	const pulse::Waveform sig_b = pulse::signal_difference(cfg.cavity_bob, cfg.jpc, drive_b);
	const double matched = pulse::mismatch(sig_a, pulse::conjugated(sig_b));
	// Skipping Bob's compensation: Bob's channel replays Alice's drive.
	const pulse::Waveform sig_b_skip = pulse::signal_difference(cfg.cavity_bob, cfg.jpc, drive_a);
	const double uncompensated = pulse::mismatch(sig_a, pulse::conjugated(sig_b_skip));
	info("c3: matched mismatch = %.4f%% (require < 0.1%%)", 100.0 * matched);
	info("c3: uncompensated mismatch = %.2f%% (require > 2%%; measured reference point 2.3%%)",
	     100.0 * uncompensated);
	return matched < 0.001 && uncompensated > 0.02;
}

// ---------------------------------------------------------------------------
// c4: <ZZ> of the pooled central I column at lambda = 1.3.

double central_column_zz(std::uint64_t shots, std::uint64_t* pooled_out) {
	RunConfig cfg = default_config();
	cfg.lambdas = {1.3};
	cfg.shots_total = shots;
	cfg.grid_n = 25;
	cfg.bootstrap.n_resamples = 0;
	const LambdaData data = derive_lambda_data(cfg, 0);
	std::vector<tomography::ShotRecord> pooled;
	const int ic = cfg.grid_n / 2;
	for (int q = 0; q < data.spec.n_q; ++q) {
		const auto& recs = data.records[static_cast<std::size_t>(ic * data.spec.n_q + q)];
		pooled.insert(pooled.end(), recs.begin(), recs.end());
	}
	if (pooled_out) *pooled_out = pooled.size();
	const auto mle = tomography::mle_reconstruct(tomography::counts_from_records(pooled),
	                                             data.params.c_tomo);
	return pauli_expectations(mle.rho).at("ZZ");
}

bool c4() {
	const double expected = 0.90 * (std::exp(-1.3) - 1.0) / (std::exp(-1.3) + 1.0);
	std::uint64_t pooled = 0;
	const double zz = central_column_zz(100000, &pooled);
	info("c4: pooled central-column <ZZ> = %.4f from %llu shots at 1e5 total "
	     "(analytic %.4f, require |diff| <= 0.02)",
	     zz, static_cast<unsigned long long>(pooled), expected);
	info("c4: note: the ZZ-basis share of %llu shots puts the estimator sigma near 0.03, "
	     "comparable to the +-0.02 window",
	     static_cast<unsigned long long>(pooled));
	const bool ok = std::abs(zz - expected) <= 0.02;

	std::uint64_t pooled_hi = 0;
	const double zz_hi = central_column_zz(1000000, &pooled_hi);
	info("c4: supplement at 1e6 shots: <ZZ> = %.4f from %llu pooled shots (|diff| = %.4f)",
	     zz_hi, static_cast<unsigned long long>(pooled_hi), std::abs(zz_hi - expected));
	return ok;
}

// ---------------------------------------------------------------------------
// c5: Xi recovery by the marginalization optimizer.

bool c5() {
	RunConfig cfg = default_config();
	cfg.lambdas = {1.3};
	cfg.shots_total = 100000;
	cfg.grid_n = 25;
	cfg.bootstrap.n_resamples = 0;
	const LambdaData data = derive_lambda_data(cfg, 0);
	const ReconstructedGrid rec = reconstruct_grid(data, cfg);
	const analysis::XiOptimum opt = analysis::optimize_xi(rec.grid);
	info("c5: optimize_xi on 25x25 / 1e5 shots at lambda 1.3: Xi = (%.4f, %.4f), gamma = %.4f",
	     opt.xi.xi_a, opt.xi.xi_b, opt.gamma);

	// Literal target: the configured Stark-shift rates (0.27, 1.02) rad.
	const double lit_a = std::abs(opt.xi.xi_a - 0.27) / 0.27;
	const double lit_b = std::abs(opt.xi.xi_b - 1.02) / 1.02;
	info("c5: vs configured Stark rates (0.27, 1.02): errors (%.1f%%, %.1f%%) -- require both <= 5%%",
	     100.0 * lit_a, 100.0 * lit_b);

	// Model target: the fringe phase slopes the optimizer can actually see.
	// The generator's outcome-dependent phases are +-(sep/2) q per qubit, so
	// the purity objective peaks at (sep/4, -sep/4); the Stark rates only
	// shift fringe offsets (Theta+/Theta-), never the Q slope, which the
	// closed forms verified by c1 pin down exactly.
	const double sep = std::sqrt(2.0 * 1.3);
	const double mod_a = std::abs(opt.xi.xi_a - sep / 4.0) / (sep / 4.0);
	const double mod_b = std::abs(opt.xi.xi_b + sep / 4.0) / (sep / 4.0);
	info("c5: vs model fringe slopes (%.4f, %.4f): errors (%.1f%%, %.1f%%) -- the 5%% "
	     "model-consistency check this procedure can satisfy",
	     sep / 4.0, -sep / 4.0, 100.0 * mod_a, 100.0 * mod_b);
	if (lit_a > 0.05 || lit_b > 0.05)
		info("c5: the literal target is unattainable for this estimator: the marginalization "
		     "unwinds coherence phase slopes in Q_m, and those slopes are set by the pointer "
		     "separation, not by the Stark rates (see README, known-red criterion)");

	cfg.shots_total = 1000000;
	const LambdaData data_hi = derive_lambda_data(cfg, 0);
	const ReconstructedGrid rec_hi = reconstruct_grid(data_hi, cfg);
	const analysis::XiOptimum opt_hi = analysis::optimize_xi(rec_hi.grid);
	info("c5: supplement at 1e6 shots: Xi = (%.4f, %.4f), model-slope errors (%.1f%%, %.1f%%)",
	     opt_hi.xi.xi_a, opt_hi.xi.xi_b,
	     100.0 * std::abs(opt_hi.xi.xi_a - sep / 4.0) / (sep / 4.0),
	     100.0 * std::abs(opt_hi.xi.xi_b + sep / 4.0) / (sep / 4.0));

	return lit_a <= 0.05 && lit_b <= 0.05;
}

// ---------------------------------------------------------------------------
// c6: purity reduction r at lambda = 0 and lambda = 1.3, paper scale.

bool c6() {
	RunConfig cfg = default_config();
	cfg.lambdas = {0.0, 1.3};
	cfg.bootstrap.n_resamples = 0;
	double r[2] = {0.0, 0.0};
	for (std::size_t li = 0; li < 2; ++li) {
		const LambdaData data = derive_lambda_data(cfg, li);
		const ReconstructedGrid rec = reconstruct_grid(data, cfg);
		const analysis::XiOptimum opt = analysis::optimize_xi(rec.grid);
		r[li] = analysis::purity_reduction(rec.grid, opt.xi);
		info("c6: lambda %.1f: gamma_opt = %.4f, gamma_avg = %.4f, r = %.2f%%%s",
		     cfg.lambdas[li], opt.gamma, analysis::average_bin_purity(rec.grid), 100.0 * r[li],
		     opt.flat ? " (flat objective)" : "");
	}
	const bool ok_zero = r[0] < 0.02;
	const bool ok_13 = std::abs(r[1] - 0.06) <= 0.02;
	if (!ok_13)
		info("c6: note: in this noise-free-model synthetic the optimal unwinding makes the "
		     "column members nearly identical, so r at lambda 1.3 reflects reconstruction "
		     "noise rather than residual fringe decoherence; the measured-data reference "
		     "value of 6%% includes apparatus effects the generator does not model");
	info("c6: require r(0) < 2%% [%s] and r(1.3) in [4%%, 8%%] [%s]",
	     ok_zero ? "ok" : "violated", ok_13 ? "ok" : "violated");
	return ok_zero && ok_13;
}

// ---------------------------------------------------------------------------
// c7: discord-vs-strength shape with bootstrap coverage at lambda = 0.6.

struct TheoryProfile {
	std::map<int, double> d_alice;
	std::map<int, double> d_bob;
};

TheoryProfile theory_profile(double lambda, const ModelParams& p, const BinSpec& spec) {
	const analysis::ConditionalGrid grid = testutil::theory_conditional_grid(lambda, p, spec);
	const analysis::XiOptimum opt = analysis::optimize_xi(grid);
	TheoryProfile out;
	for (const analysis::MarginalColumn& col : analysis::marginalize(grid, opt.xi)) {
		out.d_alice[col.i_index] = analysis::discord(col.rho, Subsystem::A);
		out.d_bob[col.i_index] = analysis::discord(col.rho, Subsystem::B);
	}
	return out;
}

struct C7Outcome {
	bool flat_ends_ok = true;
	bool peak_ok = false;
	bool coverage_ok = false;
};

// Weighted least-squares vertex of d(I) = p0 + p1 I + p2 I^2; NaN if the fit
// has no maximum.
double profile_vertex(const std::vector<double>& is, const std::vector<double>& ws,
                      const std::vector<double>& ds) {
	Eigen::Matrix3d ata = Eigen::Matrix3d::Zero();
	Eigen::Vector3d atb = Eigen::Vector3d::Zero();
	for (std::size_t k = 0; k < is.size(); ++k) {
		const Eigen::Vector3d row(1.0, is[k], is[k] * is[k]);
		ata += ws[k] * row * row.transpose();
		atb += ws[k] * ds[k] * row;
	}
	const Eigen::Vector3d p = ata.ldlt().solve(atb);
	if (p[2] >= 0.0) return std::numeric_limits<double>::quiet_NaN();
	return -p[1] / (2.0 * p[2]);
}

// One full profile analysis: flat ends at lambda 0 and 6, then shape and
// bootstrap coverage against the theory profile at lambda 0.6. The binning is
// chosen up front to keep the full-scale per-bin occupancy (~1.7k shots/bin)
// at the given budget; per-bin MLE noise otherwise inflates the non-negative
// discord estimates.
C7Outcome c7_run(const char* tag, std::uint64_t shots, int grid_n, double span_sigma) {
	constexpr double kMinWeight = 0.02;
	C7Outcome out;
	RunConfig base = default_config();
	base.shots_total = shots;
	base.grid_n = grid_n;
	base.grid_span_sigma = span_sigma;
	base.min_bin_shots = 200;

	// Flat ends: lambda 0 and 6 should be discord-free within 0.02 bits.
	{
		RunConfig cfg = base;
		cfg.lambdas = {0.0, 6.0};
		cfg.bootstrap.n_resamples = 0;
		for (std::size_t li = 0; li < 2; ++li) {
			const LambdaData data = derive_lambda_data(cfg, li);
			const ReconstructedGrid rec = reconstruct_grid(data, cfg);
			const DiscordRun run = analyze_discord(data, rec, cfg);
			double worst = 0.0;
			for (const DiscordColumn& col : run.columns) {
				if (col.weight < kMinWeight) continue;
				worst = std::max({worst, col.d_alice, col.d_bob});
			}
			info("c7%s: lambda %.0f: max marginal discord over columns with weight >= 2%% = %.4f "
			     "bits (require < 0.02)",
			     tag, cfg.lambdas[li], worst);
			out.flat_ends_ok = out.flat_ends_ok && worst < 0.02;
		}
	}

	// Shape and coverage at lambda 0.6.
	RunConfig cfg = base;
	cfg.lambdas = {0.6};
	cfg.bootstrap.n_resamples = 200;
	const LambdaData data = derive_lambda_data(cfg, 0);
	const ReconstructedGrid rec = reconstruct_grid(data, cfg);
	const DiscordRun run = analyze_discord(data, rec, cfg);
	const TheoryProfile theory = theory_profile(0.6, data.params, data.spec);

	// analyze_discord's columns are 1:1 (same order) with this marginal set.
	const auto mcols = analysis::marginalize(rec.grid, run.xi_opt);

	int peak_a = -1, peak_b = -1;
	double best_a = -1.0, best_b = -1.0;
	int covered = 0, total = 0;
	std::vector<double> fit_i, fit_w, fit_da, fit_db;
	for (std::size_t c = 0; c < run.columns.size(); ++c) {
		const DiscordColumn& col = run.columns[c];
		if (col.weight < kMinWeight) continue;
		const int i_index = mcols[c].i_index;
		if (col.d_alice > best_a) {
			best_a = col.d_alice;
			peak_a = i_index;
		}
		if (col.d_bob > best_b) {
			best_b = col.d_bob;
			peak_b = i_index;
		}
		fit_i.push_back(col.i_center);
		fit_w.push_back(col.weight);
		fit_da.push_back(col.d_alice);
		fit_db.push_back(col.d_bob);
		if (!col.has_ci) continue;
		const auto ta = theory.d_alice.find(i_index);
		const auto tb = theory.d_bob.find(i_index);
		if (ta != theory.d_alice.end()) {
			total++;
			covered += ta->second >= col.ci_a_lo - 1e-9 && ta->second <= col.ci_a_hi + 1e-9;
		}
		if (tb != theory.d_bob.end()) {
			total++;
			covered += tb->second >= col.ci_b_lo - 1e-9 && tb->second <= col.ci_b_hi + 1e-9;
		}
		info("c7%s: I = %+.3f w = %.3f  dA = %.4f [%.4f, %.4f] theory %.4f | dB = %.4f [%.4f, %.4f] theory %.4f",
		     tag, col.i_center, col.weight, col.d_alice, col.ci_a_lo, col.ci_a_hi,
		     ta != theory.d_alice.end() ? ta->second : -1.0, col.d_bob, col.ci_b_lo, col.ci_b_hi,
		     tb != theory.d_bob.end() ? tb->second : -1.0);
	}
	const int center = grid_n / 2;
	info("c7%s: lambda 0.6 profile peaks: Alice at column %d, Bob at column %d (central column %d)",
	     tag, peak_a, peak_b, center);
	out.peak_ok = peak_a == center && peak_b == center;
	// The argmax above is decided by per-column noise whenever the center-vs-
	// neighbor contrast of the theory curve (~0.002 bits here) is below the
	// column noise floor; the fitted vertex shows where the profile as a whole
	// actually peaks.
	info("c7%s: weighted quadratic fit of the measured profile has its vertex at I = %+.2f (Alice) "
	     "/ %+.2f (Bob), bin width %.2f",
	     tag, profile_vertex(fit_i, fit_w, fit_da), profile_vertex(fit_i, fit_w, fit_db),
	     fit_i.size() > 1 ? fit_i[1] - fit_i[0] : 0.0);
	const double coverage = total > 0 ? static_cast<double>(covered) / total : 0.0;
	info("c7%s: theory inside the 95%% bootstrap band at %d/%d column-sides = %.0f%% (require >= 80%%)",
	     tag, covered, total, 100.0 * coverage);
	out.coverage_ok = coverage >= 0.80;
	return out;
}

bool c7() {
	// Verdict run at the stated scale. 1e5 shots spread over a grid with
	// paper-like per-bin occupancy leaves only ~5k-20k shots per I column, so
	// the column noise floor (~0.005-0.015 bits) is comparable to the 0.0134-
	// bit theory peak; the outcome at this scale is statistically marginal by
	// construction, which the supplement below quantifies at 10x the budget.
	const C7Outcome main_run = c7_run("", 100000, 9, 2.5);
	const bool ok = main_run.flat_ends_ok && main_run.peak_ok && main_run.coverage_ok;
	if (!ok)
		info("c7: verdict sub-gates at the 1e5 scale: flat ends %s, peak %s, coverage %s",
		     main_run.flat_ends_ok ? "ok" : "violated", main_run.peak_ok ? "ok" : "violated",
		     main_run.coverage_ok ? "ok" : "violated");
	const C7Outcome supp = c7_run(" [1e6 supplement]", 1000000, 25, 5.0);
	info("c7: supplement sub-gates at 1e6 shots: flat ends %s, peak %s, coverage %s (not gated)",
	     supp.flat_ends_ok ? "ok" : "violated", supp.peak_ok ? "ok" : "violated",
	     supp.coverage_ok ? "ok" : "violated");
	return ok;
}

// ---------------------------------------------------------------------------
// c8: MLE physicality and fidelity at 500 shots per setting.

bool c8() {
	ModelParams p;
	RngStream pick = SplitRng(default_config().seed).stream(0x0c8);
	const double lambdas[] = {0.0, 0.3, 0.6, 1.3, 6.0};
	int psd = 0;
	double fid_sum = 0.0, fid_min = 1.0;
	const int trials = 100;
	for (int t = 0; t < trials; ++t) {
		const double lam = lambdas[t % 5];
		const double sep = std::sqrt(2.0 * lam) * p.sigma_m;
		const Outcome o{(2.0 * pick.next_uniform() - 1.0) * (sep + 2.0),
		                (2.0 * pick.next_uniform() - 1.0) * 2.5};
		const Mat4 truth = conditional_state(lam, o, p);
		const auto counts = tomography::simulate_tomography(truth, 9 * 500, p.c_tomo,
		                                                    1000 + static_cast<std::uint64_t>(t));
		Mat4 rho;
		try {
			rho = tomography::mle_reconstruct(counts, p.c_tomo).rho;
		} catch (const std::exception& e) {
			info("c8: trial %d (lambda %.1f, I %.3f, Q %.3f): %s", t, lam, o.i_m, o.q_m, e.what());
			return false;
		}
		psd += DensityMatrix::is_valid(rho);
		const double f = fidelity(rho, truth);
		fid_sum += f;
		fid_min = std::min(fid_min, f);
	}
	info("c8: %d/%d reconstructions physical; fidelity mean %.4f, min %.4f "
	     "(require 100%% physical and mean >= 0.98)",
	     psd, trials, fid_sum / trials, fid_min);
	return psd == trials && fid_sum / trials >= 0.98;
}

// ---------------------------------------------------------------------------
// c9: byte-identical artifacts for identical config + seed.

std::map<std::string, std::string> snapshot(const std::string& dir,
                                            const std::vector<std::string>& files) {
	std::map<std::string, std::string> out;
	for (const std::string& rel : files) out[rel] = read_file(dir + "/" + rel);
	return out;
}

bool c9() {
	RunConfig cfg = default_config();
	cfg.lambdas = {0.0, 0.6};
	cfg.shots_total = 20000;
	cfg.grid_n = 11;
	cfg.min_bin_shots = 25;
	cfg.bootstrap.n_resamples = 8;
	cfg.output_dir = (std::filesystem::temp_directory_path() / "dsim_acceptance_c9").string();
	std::filesystem::remove_all(cfg.output_dir);

	const StageResult first = run_all(cfg);
	const auto snap1 = snapshot(cfg.output_dir, first.files);
	std::filesystem::remove_all(cfg.output_dir);
	const StageResult second = run_all(cfg);
	const auto snap2 = snapshot(cfg.output_dir, second.files);

	bool identical = first.files == second.files;
	std::size_t bytes = 0;
	for (const auto& [rel, content] : snap1) {
		const auto it = snap2.find(rel);
		identical = identical && it != snap2.end() && it->second == content;
		bytes += content.size();
	}
	info("c9: run-all twice with identical config+seed: %zu artifacts, %zu bytes, identical: %s",
	     snap1.size(), bytes, identical ? "yes" : "NO");

	// Supplement: the schedule must not leak into the data artifacts.
	RunConfig wide = cfg;
	wide.workers = 5;
	std::filesystem::remove_all(wide.output_dir);
	const StageResult third = run_all(wide);
	const auto snap3 = snapshot(wide.output_dir, third.files);
	bool schedule_free = true;
	for (const auto& [rel, content] : snap1) {
		if (rel == "config_resolved.json" || rel == "manifest.json") continue; // embed `workers`
		const auto it = snap3.find(rel);
		schedule_free = schedule_free && it != snap3.end() && it->second == content;
	}
	info("c9: supplement: 5-worker rerun matches every data artifact byte for byte: %s",
	     schedule_free ? "yes" : "NO");
	std::filesystem::remove_all(cfg.output_dir);
	return identical && schedule_free;
}

// ---------------------------------------------------------------------------

struct Criterion {
	const char* name;
	const char* title;
	std::function<bool()> fn;
	double budget_s; // 0 = no budget stated
};

const Criterion kCriteria[] = {
    {"c1", "closed-form oracle match of the conditional states", c1, 10.0},
    {"c2", "known-value discord suite", c2, 60.0},
    {"c3", "pulse mode matching with and without Bob's compensation", c3, 5.0},
    {"c4", "<ZZ> endpoint of the binned estimate at lambda 1.3", c4, 120.0},
    {"c5", "Xi recovery by the marginalization optimizer", c5, 300.0},
    {"c6", "purity reduction r at lambda 0 and 1.3", c6, 300.0},
    {"c7", "discord-vs-strength shape and bootstrap coverage", c7, 1800.0},
    {"c8", "MLE physicality and fidelity", c8, 300.0},
    {"c9", "byte-identical artifacts across reruns", c9, 0.0},
};

} // namespace

int main(int argc, char** argv) {
	const std::string selection = argc > 1 ? argv[1] : "all";
	bool matched = false;
	bool all_pass = true;
	for (const Criterion& c : kCriteria) {
		if (selection != "all" && selection != c.name) continue;
		matched = true;
		const auto t0 = std::chrono::steady_clock::now();
		bool pass = false;
		std::string error;
		try {
			pass = c.fn();
		} catch (const std::exception& e) {
			error = e.what();
		}
		const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
		const bool in_budget = c.budget_s <= 0.0 || secs <= c.budget_s;
		if (!error.empty()) info("%s: unhandled error: %s", c.name, error.c_str());
		if (!in_budget) info("%s: runtime %.1f s exceeded the %.0f s budget", c.name, secs, c.budget_s);
		const bool ok = pass && in_budget && error.empty();
		std::printf("[%s] %s: %s (%.1f s)\n", ok ? "PASS" : "FAIL", c.name, c.title, secs);
		std::fflush(stdout);
		all_pass = all_pass && ok;
	}
	if (!matched) {
		std::fprintf(stderr, "unknown selection '%s' (use c1..c9 or all)\n", selection.c_str());
		return 2;
	}
	return all_pass ? 0 : 1;
}
