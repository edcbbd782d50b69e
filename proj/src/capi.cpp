#include "discordsim.h"

#include "analysis/discord.hpp"
#include "measurement/closed_form.hpp"
#include "measurement/conditional_state.hpp"
#include "pipeline/stages.hpp"
#include "quantum/density_matrix.hpp"

#include <cctype>
#include <cstring>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

struct dsim_config {
	dsim::pipeline::RunConfig cfg;
	std::vector<double> lambda_filter;
};

namespace {

thread_local std::string g_last_error;

dsim_status fail(dsim_status code, const std::string& msg) {
	g_last_error = msg;
	return code;
}

template <typename F>
dsim_status guarded(F&& f) {
	try {
		f();
		g_last_error.clear();
		return DSIM_OK;
	} catch (const std::invalid_argument& e) {
		return fail(DSIM_ERR_INVALID_ARGUMENT, e.what());
	} catch (const std::exception& e) {
		return fail(DSIM_ERR_RUNTIME, e.what());
	} catch (...) {
		return fail(DSIM_ERR_RUNTIME, "unknown error");
	}
}

dsim_status bad_handle(const char* what) {
	return fail(DSIM_ERR_BAD_HANDLE, std::string("NULL ") + what);
}

char* copy_string(const std::string& s) {
	char* out = new char[s.size() + 1];
	std::memcpy(out, s.c_str(), s.size() + 1);
	return out;
}

dsim::measurement::ModelParams params_from_array(const double p[10]) {
	dsim::measurement::ModelParams m;
	m.c_t2_alice = p[0];
	m.c_t2_bob = p[1];
	m.c_tomo = p[2];
	m.eta_a = p[3];
	m.eta_b = p[4];
	m.xi_a = p[5];
	m.xi_b = p[6];
	m.q_bar = p[7];
	m.i_bar = p[8];
	m.sigma_m = p[9];
	m.validate();
	return m;
}

dsim::quantum::Mat4 rho_from_array(const double v[32]) {
	dsim::quantum::Mat4 m;
	for (int r = 0; r < 4; ++r)
		for (int c = 0; c < 4; ++c) {
			const int k = 2 * (4 * r + c);
			m(r, c) = dsim::quantum::Complex(v[k], v[k + 1]);
		}
	std::string why;
	if (!dsim::quantum::DensityMatrix::is_valid(m, &why))
		throw std::invalid_argument("not a density matrix: " + why);
	return m;
}

dsim::pipeline::StageOptions stage_options(const dsim_config* cfg, int verbose) {
	dsim::pipeline::StageOptions opt;
	opt.lambda_filter = cfg->lambda_filter;
	opt.log = verbose ? &std::cerr : nullptr;
	return opt;
}

using StageFn = dsim::pipeline::StageResult (*)(const dsim::pipeline::RunConfig&,
                                                const dsim::pipeline::StageOptions&);

dsim_status run_stage(const dsim_config* cfg, int verbose, StageFn fn) {
	if (!cfg)
		return bad_handle("config");
	return guarded([&] { fn(cfg->cfg, stage_options(cfg, verbose)); });
}

} // namespace

extern "C" {

const char* dsim_last_error(void) {
	return g_last_error.c_str();
}

const char* dsim_version(void) {
	return "1.0.0";
}

dsim_status dsim_config_default(dsim_config** out) {
	if (!out)
		return bad_handle("output pointer");
	return guarded([&] { *out = new dsim_config{dsim::pipeline::default_config(), {}}; });
}

dsim_status dsim_config_load(const char* path, dsim_config** out) {
	if (!out)
		return bad_handle("output pointer");
	if (!path)
		return bad_handle("path");
	return guarded([&] { *out = new dsim_config{dsim::pipeline::load_config(path), {}}; });
}

void dsim_config_free(dsim_config* cfg) {
	delete cfg;
}

dsim_status dsim_config_set_seed(dsim_config* cfg, uint64_t seed) {
	if (!cfg)
		return bad_handle("config");
	cfg->cfg.seed = seed;
	g_last_error.clear();
	return DSIM_OK;
}

dsim_status dsim_config_set_output_dir(dsim_config* cfg, const char* dir) {
	if (!cfg)
		return bad_handle("config");
	if (!dir)
		return bad_handle("dir");
	cfg->cfg.output_dir = dir;
	g_last_error.clear();
	return DSIM_OK;
}

dsim_status dsim_config_set_workers(dsim_config* cfg, int workers) {
	if (!cfg)
		return bad_handle("config");
	cfg->cfg.workers = workers;
	g_last_error.clear();
	return DSIM_OK;
}

dsim_status dsim_config_set_lambda_filter(dsim_config* cfg, const char* csv) {
	if (!cfg)
		return bad_handle("config");
	return guarded([&] {
		std::vector<double> values;
		if (csv && *csv) {
			std::stringstream ss(csv);
			std::string item;
			while (std::getline(ss, item, ',')) {
				std::size_t used = 0;
				const double v = std::stod(item, &used);
				while (used < item.size() && std::isspace(static_cast<unsigned char>(item[used])))
					++used;
				if (used != item.size())
					throw std::invalid_argument("bad lambda filter entry: '" + item + "'");
				values.push_back(v);
			}
		}
		// Resolve now so typos fail at set time, not mid-run.
		dsim::pipeline::selected_lambdas(cfg->cfg, values);
		cfg->lambda_filter = std::move(values);
	});
}

dsim_status dsim_config_dump(const dsim_config* cfg, char** out) {
	if (!cfg)
		return bad_handle("config");
	if (!out)
		return bad_handle("output pointer");
	return guarded([&] { *out = copy_string(dsim::pipeline::dump_config(cfg->cfg)); });
}

void dsim_string_free(char* s) {
	delete[] s;
}

dsim_status dsim_validate(const dsim_config* cfg, int* n_violations, char** report) {
	if (!cfg)
		return bad_handle("config");
	if (!n_violations)
		return bad_handle("violation count pointer");
	return guarded([&] {
		const auto violations = dsim::pipeline::validate_config(cfg->cfg);
		*n_violations = static_cast<int>(violations.size());
		if (report) {
			std::string text;
			for (const auto& v : violations)
				text += v.path + ": " + v.message + "\n";
			*report = copy_string(text);
		}
	});
}

dsim_status dsim_run_synth_pulses(const dsim_config* cfg, int verbose) {
	return run_stage(cfg, verbose, &dsim::pipeline::run_synth_pulses);
}

dsim_status dsim_run_sample(const dsim_config* cfg, int verbose) {
	return run_stage(cfg, verbose, &dsim::pipeline::run_sample);
}

dsim_status dsim_run_tomo(const dsim_config* cfg, int verbose) {
	return run_stage(cfg, verbose, &dsim::pipeline::run_tomo);
}

dsim_status dsim_run_reconstruct(const dsim_config* cfg, int verbose) {
	return run_stage(cfg, verbose, &dsim::pipeline::run_reconstruct);
}

dsim_status dsim_run_discord(const dsim_config* cfg, int verbose) {
	return run_stage(cfg, verbose, &dsim::pipeline::run_discord);
}

dsim_status dsim_run_all(const dsim_config* cfg, int verbose) {
	return run_stage(cfg, verbose, &dsim::pipeline::run_all);
}

dsim_status dsim_default_model(double out_params[10]) {
	if (!out_params)
		return bad_handle("output pointer");
	const dsim::measurement::ModelParams m;
	out_params[0] = m.c_t2_alice;
	out_params[1] = m.c_t2_bob;
	out_params[2] = m.c_tomo;
	out_params[3] = m.eta_a;
	out_params[4] = m.eta_b;
	out_params[5] = m.xi_a;
	out_params[6] = m.xi_b;
	out_params[7] = m.q_bar;
	out_params[8] = m.i_bar;
	out_params[9] = m.sigma_m;
	g_last_error.clear();
	return DSIM_OK;
}

dsim_status dsim_closed_form(double lambda, double i_m, double q_m, const double params[10],
                             double out[5]) {
	if (!params)
		return bad_handle("params");
	if (!out)
		return bad_handle("output pointer");
	return guarded([&] {
		const auto p = params_from_array(params);
		const auto f = dsim::measurement::conditional_pauli_closed_form(lambda, {i_m, q_m}, p);
		out[0] = f.xx;
		out[1] = f.yy;
		out[2] = f.xy;
		out[3] = f.yx;
		out[4] = f.zz;
	});
}

dsim_status dsim_conditional_state(double lambda, double i_m, double q_m,
                                   const double params[10], double out_rho[32]) {
	if (!params)
		return bad_handle("params");
	if (!out_rho)
		return bad_handle("output pointer");
	return guarded([&] {
		const auto p = params_from_array(params);
		const auto rho = dsim::measurement::conditional_state(lambda, {i_m, q_m}, p);
		for (int r = 0; r < 4; ++r)
			for (int c = 0; c < 4; ++c) {
				const int k = 2 * (4 * r + c);
				out_rho[k] = rho(r, c).real();
				out_rho[k + 1] = rho(r, c).imag();
			}
	});
}

dsim_status dsim_discord(const double rho[32], int side, double* out) {
	if (!rho)
		return bad_handle("rho");
	if (!out)
		return bad_handle("output pointer");
	if (side != 0 && side != 1)
		return fail(DSIM_ERR_INVALID_ARGUMENT, "side must be 0 (A) or 1 (B)");
	return guarded([&] {
		const auto m = rho_from_array(rho);
		*out = dsim::analysis::discord(m, side == 0 ? dsim::quantum::Subsystem::A
		                                            : dsim::quantum::Subsystem::B);
	});
}

dsim_status dsim_mutual_information(const double rho[32], double* out) {
	if (!rho)
		return bad_handle("rho");
	if (!out)
		return bad_handle("output pointer");
	return guarded([&] { *out = dsim::analysis::mutual_information(rho_from_array(rho)); });
}

dsim_status dsim_strength_from_separation(double i_bar, double sigma_m, double* out) {
	if (!out)
		return bad_handle("output pointer");
	return guarded([&] { *out = dsim::measurement::strength_from_separation(i_bar, sigma_m); });
}

} // extern "C"
