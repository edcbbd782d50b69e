#include "discordsim.h"

#include "CLI11.hpp"

#include <cstdint>
#include <cstdio>
#include <memory>
#include <string>

namespace {

struct CommonOpts {
	std::string config_path;
	std::uint64_t seed = 0;
	std::string out_dir;
	int workers = 0;
	std::string lambda_filter;
	bool quiet = false;
};

void add_common(CLI::App* sub, CommonOpts& o) {
	sub->add_option("-c,--config", o.config_path,
	                "JSON config file (built-in defaults when omitted)");
	sub->add_option("--seed", o.seed, "Override the run seed");
	sub->add_option("-o,--out", o.out_dir, "Override the output directory");
	sub->add_option("--workers", o.workers, "Worker threads (<= 0: hardware concurrency)");
	sub->add_option("--lambda-filter", o.lambda_filter,
	                "Comma-separated strengths to process, e.g. '0.3,1.3'");
	sub->add_flag("-q,--quiet", o.quiet, "Suppress progress logging");
}

int report_error(dsim_status st, const char* what) {
	std::fprintf(stderr, "error: %s: %s\n", what, dsim_last_error());
	return st == DSIM_ERR_INVALID_ARGUMENT ? 2 : 1;
}

using ConfigPtr = std::unique_ptr<dsim_config, void (*)(dsim_config*)>;

/// Build a config from the common options. Returns 0 and fills `out` on
/// success, a process exit code otherwise.
int make_config(const CLI::App& sub, const CommonOpts& o, ConfigPtr& out) {
	dsim_config* cfg = nullptr;
	dsim_status st = o.config_path.empty() ? dsim_config_default(&cfg)
	                                       : dsim_config_load(o.config_path.c_str(), &cfg);
	if (st != DSIM_OK)
		return report_error(st, "loading config");
	out = ConfigPtr(cfg, &dsim_config_free);

	if (sub.count("--seed") && (st = dsim_config_set_seed(cfg, o.seed)) != DSIM_OK)
		return report_error(st, "setting seed");
	if (sub.count("--out") && (st = dsim_config_set_output_dir(cfg, o.out_dir.c_str())) != DSIM_OK)
		return report_error(st, "setting output directory");
	if (sub.count("--workers") && (st = dsim_config_set_workers(cfg, o.workers)) != DSIM_OK)
		return report_error(st, "setting workers");
	if (sub.count("--lambda-filter") &&
	    (st = dsim_config_set_lambda_filter(cfg, o.lambda_filter.c_str())) != DSIM_OK)
		return report_error(st, "setting lambda filter");
	return 0;
}

/// Validate and print violations; returns 0 when clean, 3 otherwise.
int check_config(const dsim_config* cfg, bool print_ok) {
	int n = 0;
	char* report = nullptr;
	const dsim_status st = dsim_validate(cfg, &n, &report);
	if (st != DSIM_OK)
		return report_error(st, "validating config");
	if (n > 0) {
		std::fprintf(stderr, "invalid configuration (%d violation%s):\n%s", n, n == 1 ? "" : "s",
		             report ? report : "");
		dsim_string_free(report);
		return 3;
	}
	dsim_string_free(report);
	if (print_ok)
		std::printf("configuration ok\n");
	return 0;
}

int run_stage_cmd(const CLI::App& sub, const CommonOpts& o,
                  dsim_status (*fn)(const dsim_config*, int)) {
	ConfigPtr cfg(nullptr, &dsim_config_free);
	if (int rc = make_config(sub, o, cfg))
		return rc;
	if (int rc = check_config(cfg.get(), false))
		return rc;
	const dsim_status st = fn(cfg.get(), o.quiet ? 0 : 1);
	if (st != DSIM_OK)
		return report_error(st, "running stage");
	return 0;
}

int run_validate_cmd(const CLI::App& sub, const CommonOpts& o) {
	ConfigPtr cfg(nullptr, &dsim_config_free);
	if (int rc = make_config(sub, o, cfg))
		return rc;
	return check_config(cfg.get(), true);
}

int run_dump_cmd(const CLI::App& sub, const CommonOpts& o) {
	ConfigPtr cfg(nullptr, &dsim_config_free);
	if (int rc = make_config(sub, o, cfg))
		return rc;
	char* text = nullptr;
	const dsim_status st = dsim_config_dump(cfg.get(), &text);
	if (st != DSIM_OK)
		return report_error(st, "dumping config");
	std::fputs(text, stdout);
	dsim_string_free(text);
	return 0;
}

} // namespace

int main(int argc, char** argv) {
	CLI::App app{"discordsim — two-qubit joint weak measurement simulator"};
	app.require_subcommand(1);
	app.set_version_flag("--version", std::string(dsim_version()));

	CommonOpts o;
	int ret = 0;

	const struct {
		const char* name;
		const char* desc;
		dsim_status (*fn)(const dsim_config*, int);
	} stages[] = {
	    {"synth-pulses", "Synthesize matched readout pulses and emit waveforms",
	     &dsim_run_synth_pulses},
	    {"sample", "Sample weak-measurement outcomes and emit histograms", &dsim_run_sample},
	    {"tomo", "Simulate conditional tomography and emit setting counts", &dsim_run_tomo},
	    {"reconstruct", "MLE-reconstruct the conditional state grid", &dsim_run_reconstruct},
	    {"discord", "Run the marginalization/discord/bootstrap analysis", &dsim_run_discord},
	    {"run-all", "Run the whole pipeline and write the manifest", &dsim_run_all},
	};
	for (const auto& s : stages) {
		CLI::App* sub = app.add_subcommand(s.name, s.desc);
		add_common(sub, o);
		auto fn = s.fn;
		sub->callback([&, sub, fn] { ret = run_stage_cmd(*sub, o, fn); });
	}

	CLI::App* val = app.add_subcommand("validate", "Check a config and report violations");
	add_common(val, o);
	val->callback([&, val] { ret = run_validate_cmd(*val, o); });

	CLI::App* dump = app.add_subcommand("config-dump", "Print the resolved config as canonical JSON");
	add_common(dump, o);
	dump->callback([&, dump] { ret = run_dump_cmd(*dump, o); });

	CLI11_PARSE(app, argc, argv);
	return ret;
}
