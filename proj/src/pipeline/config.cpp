#include "pipeline/config.hpp"

#include "common/csv.hpp"

#include "json.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <set>
#include <sstream>
#include <stdexcept>

namespace dsim::pipeline {

using nlohmann::json;

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

[[noreturn]] void fail(const std::string& path, const std::string& msg) {
	throw std::runtime_error("config error at " + path + ": " + msg);
}

/// Unit-scaled fields (rad/s <-> _hz, s <-> _ns) pick up 1-2 ulp of noise per
/// conversion; canonicalizing them to 12 significant digits keeps
/// dump -> load -> dump byte-stable.
double canonical_scaled(double v) {
	if (v == 0.0 || !std::isfinite(v)) return v;
	char buf[32];
	std::snprintf(buf, sizeof buf, "%.12g", v);
	return std::strtod(buf, nullptr);
}

/// Strict object reader: every key must be consumed, unknown keys throw.
class Reader {
public:
	Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
		if (!j_.is_object()) fail(path_, "expected an object");
	}
	~Reader() = default;

	bool has(const char* key) const { return j_.contains(key); }

	double num(const char* key, double def) {
		mark(key);
		if (!j_.contains(key)) return def;
		const json& v = j_.at(key);
		if (!v.is_number()) fail(path_ + "." + key, "expected a number");
		return v.get<double>();
	}

	std::uint64_t count(const char* key, std::uint64_t def) {
		mark(key);
		if (!j_.contains(key)) return def;
		const json& v = j_.at(key);
		if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
			fail(path_ + "." + key, "expected a non-negative integer");
		return v.get<std::uint64_t>();
	}

	int integer(const char* key, int def) {
		mark(key);
		if (!j_.contains(key)) return def;
		const json& v = j_.at(key);
		if (!v.is_number_integer()) fail(path_ + "." + key, "expected an integer");
		return v.get<int>();
	}

	std::string text(const char* key, const std::string& def) {
		mark(key);
		if (!j_.contains(key)) return def;
		const json& v = j_.at(key);
		if (!v.is_string()) fail(path_ + "." + key, "expected a string");
		return v.get<std::string>();
	}

	const json* object(const char* key) {
		mark(key);
		if (!j_.contains(key)) return nullptr;
		return &j_.at(key);
	}

	void finish() const {
		for (auto it = j_.begin(); it != j_.end(); ++it) {
			if (!seen_.count(it.key())) fail(path_ + "." + it.key(), "unknown key");
		}
	}

	const json& raw() const { return j_; }
	const std::string& path() const { return path_; }

private:
	void mark(const char* key) { seen_.insert(key); }
	const json& j_;
	std::string path_;
	std::set<std::string> seen_;
};

pulse::CavityParams read_cavity(const json& j, const std::string& path, const pulse::CavityParams& def) {
	Reader r(j, path);
	pulse::CavityParams c;
	c.kappa = kTwoPi * r.num("kappa_hz", def.kappa / kTwoPi);
	c.chi = kTwoPi * r.num("chi_hz", def.chi / kTwoPi);
	c.eta = r.num("eta", def.eta);
	r.finish();
	return c;
}

} // namespace

double RunConfig::q_bar_at(std::size_t li) const {
	if (q_bar_per_lambda.empty()) return model.q_bar;
	if (q_bar_per_lambda.size() == 1) return q_bar_per_lambda[0];
	if (li >= q_bar_per_lambda.size()) throw std::out_of_range("lambda index out of range for q_bar");
	return q_bar_per_lambda[li];
}

measurement::ModelParams RunConfig::model_at(double lambda, std::size_t lambda_index) const {
	measurement::ModelParams p = model;
	p.q_bar = q_bar_at(lambda_index);
	p.i_bar = std::sqrt(2.0 * lambda) * p.sigma_m;
	return p;
}

RunConfig default_config() {
	RunConfig cfg;
	// model defaults live in ModelParams itself.
	cfg.cavity_alice.kappa = kTwoPi * 5.1e6;
	cfg.cavity_alice.chi = kTwoPi * 3.8e6;
	cfg.cavity_alice.eta = cfg.model.eta_a;
	cfg.cavity_bob.kappa = kTwoPi * 3.8e6;
	cfg.cavity_bob.chi = kTwoPi * 1.8e6;
	cfg.cavity_bob.eta = cfg.model.eta_b;
	cfg.jpc.gain = 1.0;
	cfg.jpc.kappa_jpc = kTwoPi * 10.0e6;
	cfg.jpc.delta = 0.0;
	cfg.envelope = pulse::EnvelopeSpec{};
	cfg.seed = 20260815;
	return cfg;
}

RunConfig load_config(const std::string& path) {
	json j;
	try {
		j = json::parse(read_file(path));
	} catch (const json::parse_error& e) {
		throw std::runtime_error("config parse error in " + path + ": " + e.what());
	}

	RunConfig cfg = default_config();
	Reader root(j, "$");

	if (const json* jm = root.object("model")) {
		Reader r(*jm, "$.model");
		cfg.model.c_t2_alice = r.num("c_t2_alice", cfg.model.c_t2_alice);
		cfg.model.c_t2_bob = r.num("c_t2_bob", cfg.model.c_t2_bob);
		cfg.model.c_tomo = r.num("c_tomo", cfg.model.c_tomo);
		cfg.model.eta_a = r.num("eta_a", cfg.model.eta_a);
		cfg.model.eta_b = r.num("eta_b", cfg.model.eta_b);
		cfg.model.xi_a = r.num("xi_a_rad", cfg.model.xi_a);
		cfg.model.xi_b = r.num("xi_b_rad", cfg.model.xi_b);
		cfg.model.sigma_m = r.num("sigma_m", cfg.model.sigma_m);
		if (r.has("q_bar")) {
			const json& q = *r.object("q_bar");
			if (q.is_number()) {
				cfg.model.q_bar = q.get<double>();
				cfg.q_bar_per_lambda.clear();
			} else if (q.is_array()) {
				cfg.q_bar_per_lambda.clear();
				for (const auto& v : q) {
					if (!v.is_number()) fail("$.model.q_bar", "expected numbers");
					cfg.q_bar_per_lambda.push_back(v.get<double>());
				}
			} else {
				fail("$.model.q_bar", "expected a number or an array");
			}
		}
		r.finish();
	}

	if (const json* jc = root.object("cavities")) {
		Reader r(*jc, "$.cavities");
		if (const json* a = r.object("alice")) cfg.cavity_alice = read_cavity(*a, "$.cavities.alice", cfg.cavity_alice);
		if (const json* b = r.object("bob")) cfg.cavity_bob = read_cavity(*b, "$.cavities.bob", cfg.cavity_bob);
		r.finish();
	}

	if (const json* jj = root.object("jpc")) {
		Reader r(*jj, "$.jpc");
		cfg.jpc.gain = r.num("gain", cfg.jpc.gain);
		cfg.jpc.kappa_jpc = kTwoPi * r.num("kappa_hz", cfg.jpc.kappa_jpc / kTwoPi);
		cfg.jpc.delta = kTwoPi * r.num("delta_hz", cfg.jpc.delta / kTwoPi);
		r.finish();
	}

	if (const json* je = root.object("envelope")) {
		Reader r(*je, "$.envelope");
		cfg.envelope.amplitude = r.num("amplitude", cfg.envelope.amplitude);
		cfg.envelope.t_slew = 1e-9 * r.num("t_slew_ns", cfg.envelope.t_slew * 1e9);
		cfg.envelope.t_duration = 1e-9 * r.num("t_duration_ns", cfg.envelope.t_duration * 1e9);
		r.finish();
	}

	if (const json* jp = root.object("pulse_grid")) {
		Reader r(*jp, "$.pulse_grid");
		cfg.pulse_grid_n = r.count("n", cfg.pulse_grid_n);
		cfg.pulse_dt = 1e-9 * r.num("dt_ns", cfg.pulse_dt * 1e9);
		r.finish();
	}

	if (const json* jl = root.object("lambdas")) {
		if (!jl->is_array() || jl->empty()) fail("$.lambdas", "expected a non-empty array");
		cfg.lambdas.clear();
		for (const auto& v : *jl) {
			if (!v.is_number()) fail("$.lambdas", "expected numbers");
			cfg.lambdas.push_back(v.get<double>());
		}
	}

	cfg.shots_total = root.count("shots_total", cfg.shots_total);

	if (const json* jg = root.object("grid")) {
		Reader r(*jg, "$.grid");
		cfg.grid_n = r.integer("n", cfg.grid_n);
		cfg.grid_span_sigma = r.num("span_sigma", cfg.grid_span_sigma);
		r.finish();
	}

	if (const json* jt = root.object("tomo")) {
		Reader r(*jt, "$.tomo");
		cfg.min_bin_shots = r.count("min_bin_shots", cfg.min_bin_shots);
		r.finish();
	}

	if (const json* jb = root.object("bootstrap")) {
		Reader r(*jb, "$.bootstrap");
		cfg.bootstrap.n_resamples = r.integer("n_resamples", cfg.bootstrap.n_resamples);
		cfg.bootstrap.percentile = r.num("percentile", cfg.bootstrap.percentile);
		r.finish();
	}

	cfg.seed = root.count("seed", cfg.seed);
	cfg.workers = root.integer("workers", cfg.workers);
	cfg.output_dir = root.text("output_dir", cfg.output_dir);
	root.finish();

	cfg.bootstrap.seed = cfg.seed;
	cfg.bootstrap.min_records = cfg.min_bin_shots;
	return cfg;
}

std::string dump_config(const RunConfig& cfg) {
	json j;
	j["model"] = {{"c_t2_alice", cfg.model.c_t2_alice}, {"c_t2_bob", cfg.model.c_t2_bob},
	              {"c_tomo", cfg.model.c_tomo},         {"eta_a", cfg.model.eta_a},
	              {"eta_b", cfg.model.eta_b},           {"xi_a_rad", cfg.model.xi_a},
	              {"xi_b_rad", cfg.model.xi_b},         {"sigma_m", cfg.model.sigma_m}};
	if (cfg.q_bar_per_lambda.empty())
		j["model"]["q_bar"] = cfg.model.q_bar;
	else
		j["model"]["q_bar"] = cfg.q_bar_per_lambda;
	j["cavities"] = {{"alice",
	                  {{"kappa_hz", canonical_scaled(cfg.cavity_alice.kappa / kTwoPi)},
	                   {"chi_hz", canonical_scaled(cfg.cavity_alice.chi / kTwoPi)},
	                   {"eta", cfg.cavity_alice.eta}}},
	                 {"bob",
	                  {{"kappa_hz", canonical_scaled(cfg.cavity_bob.kappa / kTwoPi)},
	                   {"chi_hz", canonical_scaled(cfg.cavity_bob.chi / kTwoPi)},
	                   {"eta", cfg.cavity_bob.eta}}}};
	j["jpc"] = {{"gain", cfg.jpc.gain},
	            {"kappa_hz", canonical_scaled(cfg.jpc.kappa_jpc / kTwoPi)},
	            {"delta_hz", canonical_scaled(cfg.jpc.delta / kTwoPi)}};
	j["envelope"] = {{"amplitude", cfg.envelope.amplitude},
	                 {"t_slew_ns", canonical_scaled(cfg.envelope.t_slew * 1e9)},
	                 {"t_duration_ns", canonical_scaled(cfg.envelope.t_duration * 1e9)}};
	j["pulse_grid"] = {{"n", cfg.pulse_grid_n}, {"dt_ns", canonical_scaled(cfg.pulse_dt * 1e9)}};
	j["lambdas"] = cfg.lambdas;
	j["shots_total"] = cfg.shots_total;
	j["grid"] = {{"n", cfg.grid_n}, {"span_sigma", cfg.grid_span_sigma}};
	j["tomo"] = {{"min_bin_shots", cfg.min_bin_shots}};
	j["bootstrap"] = {{"n_resamples", cfg.bootstrap.n_resamples}, {"percentile", cfg.bootstrap.percentile}};
	j["seed"] = cfg.seed;
	j["workers"] = cfg.workers;
	j["output_dir"] = cfg.output_dir;
	return j.dump(2) + "\n";
}

std::vector<ConfigViolation> validate_config(const RunConfig& cfg) {
	std::vector<ConfigViolation> out;
	auto check = [&out](bool ok, const std::string& path, const std::string& msg) {
		if (!ok) out.push_back({path, msg});
	};
	auto in01 = [](double v) { return v >= 0.0 && v <= 1.0; };

	check(in01(cfg.model.c_t2_alice), "model.c_t2_alice", "must lie in [0,1]");
	check(in01(cfg.model.c_t2_bob), "model.c_t2_bob", "must lie in [0,1]");
	check(in01(cfg.model.c_tomo), "model.c_tomo", "must lie in [0,1]");
	check(cfg.model.eta_a > 0.0 && cfg.model.eta_a <= 1.0, "model.eta_a", "must lie in (0,1]");
	check(cfg.model.eta_b > 0.0 && cfg.model.eta_b <= 1.0, "model.eta_b", "must lie in (0,1]");
	check(cfg.model.sigma_m > 0.0, "model.sigma_m", "must be positive");
	check(cfg.q_bar_per_lambda.empty() || cfg.q_bar_per_lambda.size() == 1 ||
	          cfg.q_bar_per_lambda.size() == cfg.lambdas.size(),
	      "model.q_bar", "array length must be 1 or match lambdas");

	check(cfg.cavity_alice.kappa > 0.0, "cavities.alice.kappa_hz", "must be positive");
	check(cfg.cavity_alice.chi != 0.0, "cavities.alice.chi_hz", "must be nonzero");
	check(cfg.cavity_alice.eta > 0.0 && cfg.cavity_alice.eta <= 1.0, "cavities.alice.eta", "must lie in (0,1]");
	check(cfg.cavity_bob.kappa > 0.0, "cavities.bob.kappa_hz", "must be positive");
	check(cfg.cavity_bob.chi != 0.0, "cavities.bob.chi_hz", "must be nonzero");
	check(cfg.cavity_bob.eta > 0.0 && cfg.cavity_bob.eta <= 1.0, "cavities.bob.eta", "must lie in (0,1]");
	check(cfg.jpc.gain > 0.0, "jpc.gain", "must be positive");
	check(cfg.jpc.kappa_jpc > 0.0, "jpc.kappa_hz", "must be positive");

	check(cfg.envelope.amplitude != 0.0, "envelope.amplitude", "must be nonzero");
	check(cfg.envelope.t_slew > 0.0, "envelope.t_slew_ns", "must be positive");
	check(cfg.envelope.t_duration > 0.0, "envelope.t_duration_ns", "must be positive");
	check(cfg.pulse_grid_n >= 2 && (cfg.pulse_grid_n & (cfg.pulse_grid_n - 1)) == 0, "pulse_grid.n",
	      "must be a power of two >= 2");
	check(cfg.pulse_dt > 0.0, "pulse_grid.dt_ns", "must be positive");
	if (cfg.pulse_dt > 0.0)
		check(static_cast<double>(cfg.pulse_grid_n) * cfg.pulse_dt >= 2.0 * cfg.envelope.t_duration,
		      "pulse_grid", "grid span must cover twice the envelope duration");

	check(!cfg.lambdas.empty(), "lambdas", "must be non-empty");
	bool sorted = true, nonneg = true;
	for (std::size_t i = 0; i < cfg.lambdas.size(); ++i) {
		if (cfg.lambdas[i] < 0.0) nonneg = false;
		if (i > 0 && cfg.lambdas[i] < cfg.lambdas[i - 1]) sorted = false;
	}
	check(nonneg, "lambdas", "must be non-negative");
	if (!sorted) {
		std::vector<double> s = cfg.lambdas;
		std::sort(s.begin(), s.end());
		std::ostringstream hint;
		hint << "must be sorted ascending; suggestion: [";
		for (std::size_t i = 0; i < s.size(); ++i) hint << (i ? ", " : "") << format_double(s[i]);
		hint << "]";
		out.push_back({"lambdas", hint.str()});
	}

	check(cfg.shots_total >= 1, "shots_total", "must be >= 1");
	check(cfg.grid_n >= 1, "grid.n", "must be >= 1");
	check(cfg.grid_span_sigma > 0.0, "grid.span_sigma", "must be positive");
	check(cfg.bootstrap.n_resamples >= 0, "bootstrap.n_resamples",
	      "must be >= 0 (0 disables the bootstrap)");
	check(cfg.bootstrap.percentile > 50.0 && cfg.bootstrap.percentile < 100.0, "bootstrap.percentile",
	      "must lie in (50, 100)");
	check(cfg.workers >= 0, "workers", "must be >= 0");
	check(!cfg.output_dir.empty(), "output_dir", "must be non-empty");
	return out;
}

} // namespace dsim::pipeline
