#include "doctest.h"

#include "pipeline/config.hpp"

#include "common/csv.hpp"

#include <cmath>
#include <filesystem>
#include <string>

using namespace dsim;
using namespace dsim::pipeline;

namespace {

std::string temp_path(const std::string& name) {
	const auto dir = std::filesystem::temp_directory_path() / "dsim_config_test";
	std::filesystem::create_directories(dir);
	return (dir / name).string();
}

std::string write_temp(const std::string& name, const std::string& content) {
	const std::string path = temp_path(name);
	write_file(path, content);
	return path;
}

} // namespace

TEST_CASE("dump -> load -> dump is the identity") {
	const RunConfig cfg = default_config();
	const std::string once = dump_config(cfg);
	const std::string path = write_temp("roundtrip.json", once);
	const RunConfig back = load_config(path);
	CHECK(dump_config(back) == once);
}

TEST_CASE("the checked-in default config matches the built-in defaults") {
	const RunConfig cfg = load_config(std::string(TEST_SOURCE_DIR) + "/configs/default.json");
	CHECK(dump_config(cfg) == dump_config(default_config()));
	CHECK(validate_config(cfg).empty());
}

TEST_CASE("unknown keys are rejected with a path-qualified message") {
	const std::string path = write_temp(
	    "unknown.json", R"({"model": {"c_t2_alice": 0.9, "mystery_knob": 1.0}, "seed": 3})");
	bool threw = false;
	try {
		(void)load_config(path);
	} catch (const std::runtime_error& e) {
		threw = true;
		const std::string msg = e.what();
		CHECK(msg.find("mystery_knob") != std::string::npos);
	}
	CHECK(threw);
}

TEST_CASE("unit-suffixed keys are converted to angular rates and seconds") {
	const std::string path = write_temp("units.json", R"({
		"cavities": {"alice": {"kappa_hz": 1.0e6, "chi_hz": 0.5e6, "eta": 0.5}},
		"envelope": {"t_slew_ns": 40.0, "t_duration_ns": 400.0}
	})");
	const RunConfig cfg = load_config(path);
	CHECK(cfg.cavity_alice.kappa == doctest::Approx(2.0 * M_PI * 1.0e6));
	CHECK(cfg.cavity_alice.chi == doctest::Approx(2.0 * M_PI * 0.5e6));
	CHECK(cfg.cavity_alice.eta == doctest::Approx(0.5));
	CHECK(cfg.envelope.t_slew == doctest::Approx(40e-9));
	CHECK(cfg.envelope.t_duration == doctest::Approx(400e-9));
	// Untouched sections keep their defaults.
	CHECK(cfg.cavity_bob.kappa == doctest::Approx(default_config().cavity_bob.kappa));
}

TEST_CASE("q_bar accepts a scalar or one entry per strength") {
	const std::string scalar = write_temp("qbar_scalar.json", R"({"model": {"q_bar": 0.3}})");
	const RunConfig a = load_config(scalar);
	CHECK(a.model.q_bar == doctest::Approx(0.3));
	CHECK(a.q_bar_at(3) == doctest::Approx(0.3));

	const std::string arr = write_temp(
	    "qbar_array.json",
	    R"({"lambdas": [0.0, 1.3], "model": {"q_bar": [0.1, 0.2]}})");
	const RunConfig b = load_config(arr);
	CHECK(b.q_bar_at(0) == doctest::Approx(0.1));
	CHECK(b.q_bar_at(1) == doctest::Approx(0.2));

	const std::string bad = write_temp(
	    "qbar_bad.json", R"({"lambdas": [0.0, 1.3], "model": {"q_bar": [0.1, 0.2, 0.3]}})");
	const RunConfig c = load_config(bad); // length mismatch is a validation issue
	const auto violations = validate_config(c);
	bool flagged = false;
	for (const auto& v : violations) flagged = flagged || v.path.find("q_bar") != std::string::npos;
	CHECK(flagged);
}

TEST_CASE("model_at fills the per-strength separation and offset") {
	RunConfig cfg = default_config();
	cfg.q_bar_per_lambda = {0.0, 0.5, 0.0, 0.0, 0.0, 0.0};
	const auto p = cfg.model_at(1.3, 1);
	CHECK(p.q_bar == doctest::Approx(0.5));
	CHECK(p.i_bar == doctest::Approx(std::sqrt(2.0 * 1.3)));
	CHECK(p.c_tomo == doctest::Approx(cfg.model.c_tomo));
}

TEST_CASE("validate_config reports structural violations with paths") {
	RunConfig cfg = default_config();
	cfg.grid_n = 0;
	cfg.shots_total = 0;
	cfg.lambdas = {1.3, 0.0}; // unsorted
	cfg.bootstrap.percentile = 150.0;
	const auto violations = validate_config(cfg);
	CHECK(violations.size() >= 4);
	auto has = [&](const std::string& frag) {
		for (const auto& v : violations)
			if (v.path.find(frag) != std::string::npos) return true;
		return false;
	};
	CHECK(has("grid"));
	CHECK(has("shots_total"));
	CHECK(has("lambdas"));
	CHECK(has("percentile"));
	CHECK(validate_config(default_config()).empty());
}

TEST_CASE("malformed JSON fails cleanly") {
	const std::string path = write_temp("broken.json", "{ not json");
	CHECK_THROWS_AS((void)load_config(path), std::runtime_error);
	CHECK_THROWS_AS((void)load_config("/nonexistent/dsim.json"), std::runtime_error);
}

TEST_CASE("workers and output settings load") {
	const std::string path = write_temp(
	    "run.json", R"({"seed": 777, "workers": 3, "output_dir": "results", "grid": {"n": 31}})");
	const RunConfig cfg = load_config(path);
	CHECK(cfg.seed == 777);
	CHECK(cfg.workers == 3);
	CHECK(cfg.output_dir == "results");
	CHECK(cfg.grid_n == 31);
	// The bootstrap seed rides on the run seed.
	CHECK(cfg.bootstrap.seed == 777);
	CHECK(cfg.bootstrap.min_records == cfg.min_bin_shots);
}
