#include "pipeline/artifacts.hpp"

#include "common/csv.hpp"
#include "measurement/closed_form.hpp"
#include "measurement/conditional_state.hpp"

#include "json.hpp"

#include <Eigen/Dense>

#include <cstdio>

namespace dsim::pipeline {

using nlohmann::json;

void ArtifactWriter::add(const std::string& rel, const std::string& content) {
	write_file(out_dir_ + "/" + rel, content);
	written_.push_back(rel);
	hashes_.push_back(fnv1a64(content));
}

std::uint64_t fnv1a64(const std::string& bytes) {
	std::uint64_t h = 0xcbf29ce484222325ull;
	for (unsigned char c : bytes) {
		h ^= c;
		h *= 0x100000001b3ull;
	}
	return h;
}

std::string lambda_dir(double lambda) {
	return "lambda_" + format_double(lambda);
}

namespace {

std::string hex64(std::uint64_t v) {
	char buf[17];
	std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(v));
	return buf;
}

const char* rot_label(tomography::Rot r) {
	switch (r) {
	case tomography::Rot::I: return "I";
	case tomography::Rot::X90: return "X90";
	case tomography::Rot::Y90: return "Y90";
	}
	return "?";
}

json pauli_json(const quantum::PauliVector& pv) {
	json j = json::object();
	for (int k = 0; k < 16; ++k)
		j[quantum::pauli_label(k)] = pv[k];
	return j;
}

json eigenvalues_json(const quantum::Mat4& rho) {
	Eigen::SelfAdjointEigenSolver<quantum::Mat4> es(rho, Eigen::EigenvaluesOnly);
	json j = json::array();
	for (int k = 0; k < 4; ++k)
		j.push_back(es.eigenvalues()(k));
	return j;
}

} // namespace

void write_histogram_csv(ArtifactWriter& w, const LambdaData& data) {
	CsvWriter csv({"bin_i_center", "bin_q_center", "count"});
	const auto& spec = data.spec;
	for (int i = 0; i < spec.n_i; ++i)
		for (int q = 0; q < spec.n_q; ++q)
			csv.add_row({format_double(spec.i_center(i)), format_double(spec.q_center(q)),
			             std::to_string(data.histogram.counts[static_cast<std::size_t>(i * spec.n_q + q)])});
	w.add(lambda_dir(data.lambda) + "/histogram.csv", csv.str());
}

void write_counts_csv(ArtifactWriter& w, const LambdaData& data,
                      const std::vector<tomography::CountsTable>& counts) {
	CsvWriter csv({"bin_i_center", "bin_q_center", "setting_a", "setting_b",
	               "n_gg", "n_ge", "n_eg", "n_ee"});
	const auto& spec = data.spec;
	for (int b = 0; b < spec.bins(); ++b) {
		const auto& table = counts[static_cast<std::size_t>(b)];
		if (table.total() == 0)
			continue;
		const double ic = spec.i_center(b / spec.n_q);
		const double qc = spec.q_center(b % spec.n_q);
		for (int s = 0; s < tomography::kSettings; ++s) {
			const auto setting = tomography::setting_at(s);
			const auto& row = table.counts[static_cast<std::size_t>(s)];
			csv.add_row({format_double(ic), format_double(qc),
			             rot_label(setting.rot_a), rot_label(setting.rot_b),
			             std::to_string(row[0]), std::to_string(row[1]),
			             std::to_string(row[2]), std::to_string(row[3])});
		}
	}
	w.add(lambda_dir(data.lambda) + "/counts.csv", csv.str());
}

void write_tomogram_csv(ArtifactWriter& w, const LambdaData& data, const ReconstructedGrid& rec) {
	std::vector<std::string> header{"bin_i_center", "bin_q_center", "shots"};
	for (int k = 0; k < 16; ++k)
		header.push_back(quantum::pauli_label(k));
	CsvWriter csv(std::move(header));
	const auto& spec = data.spec;
	for (int b = 0; b < spec.bins(); ++b) {
		const auto& state = rec.grid.states[static_cast<std::size_t>(b)];
		if (!state)
			continue;
		const auto pv = quantum::pauli_expectations(*state);
		std::vector<std::string> row{format_double(spec.i_center(b / spec.n_q)),
		                             format_double(spec.q_center(b % spec.n_q)),
		                             std::to_string(rec.counts[static_cast<std::size_t>(b)].total())};
		for (int k = 0; k < 16; ++k)
			row.push_back(format_double(pv[k]));
		csv.add_row(std::move(row));
	}
	w.add(lambda_dir(data.lambda) + "/tomogram.csv", csv.str());
}

void write_states_json(ArtifactWriter& w, const LambdaData& data, const ReconstructedGrid& rec) {
	json bins = json::array();
	const auto& spec = data.spec;
	for (int b = 0; b < spec.bins(); ++b) {
		const auto& state = rec.grid.states[static_cast<std::size_t>(b)];
		if (!state)
			continue;
		json entry = json::object();
		entry["bin_i_center"] = spec.i_center(b / spec.n_q);
		entry["bin_q_center"] = spec.q_center(b % spec.n_q);
		entry["shots"] = rec.counts[static_cast<std::size_t>(b)].total();
		entry["weight"] = rec.grid.weight[static_cast<std::size_t>(b)];
		entry["pauli"] = pauli_json(quantum::pauli_expectations(*state));
		entry["eigenvalues"] = eigenvalues_json(*state);
		bins.push_back(std::move(entry));
	}
	json doc = json::object();
	doc["lambda"] = data.lambda;
	doc["failed_bins"] = rec.failed_bins;
	doc["bins"] = std::move(bins);
	w.add(lambda_dir(data.lambda) + "/states.json", doc.dump(2) + "\n");
}

void write_theory_states_json(ArtifactWriter& w, const LambdaData& data,
                              const ReconstructedGrid& rec) {
	json bins = json::array();
	const auto& spec = data.spec;
	for (int b = 0; b < spec.bins(); ++b) {
		if (!rec.grid.states[static_cast<std::size_t>(b)])
			continue;
		const measurement::Outcome o{spec.i_center(b / spec.n_q), spec.q_center(b % spec.n_q)};
		const auto rho = measurement::conditional_state(data.lambda, o, data.params);
		json entry = json::object();
		entry["bin_i_center"] = o.i_m;
		entry["bin_q_center"] = o.q_m;
		entry["pauli"] = pauli_json(quantum::pauli_expectations(rho));
		entry["eigenvalues"] = eigenvalues_json(rho);
		bins.push_back(std::move(entry));
	}
	json doc = json::object();
	doc["lambda"] = data.lambda;
	doc["model_completed"] = true; // states are built from the full generative model
	doc["bins"] = std::move(bins);
	w.add(lambda_dir(data.lambda) + "/theory_states.json", doc.dump(2) + "\n");
}

void write_slices_csv(ArtifactWriter& w, const LambdaData& data, const ReconstructedGrid& rec) {
	CsvWriter csv({"scan", "bin_i_center", "bin_q_center", "shots",
	               "xx", "yy", "xy", "yx", "zz",
	               "xx_pred", "yy_pred", "xy_pred", "yx_pred", "zz_pred"});
	const auto& spec = data.spec;
	const int q_cut = spec.index_q(0.0);
	const int i_cut = spec.index_i(0.0);
	auto emit = [&](const char* scan, int b) {
		const auto& state = rec.grid.states[static_cast<std::size_t>(b)];
		if (!state)
			return;
		const double ic = spec.i_center(b / spec.n_q);
		const double qc = spec.q_center(b % spec.n_q);
		const auto pv = quantum::pauli_expectations(*state);
		const auto pred =
		    measurement::conditional_pauli_closed_form(data.lambda, {ic, qc}, data.params);
		csv.add_row({scan, format_double(ic), format_double(qc),
		             std::to_string(rec.counts[static_cast<std::size_t>(b)].total()),
		             format_double(pv.at("XX")), format_double(pv.at("YY")),
		             format_double(pv.at("XY")), format_double(pv.at("YX")),
		             format_double(pv.at("ZZ")),
		             format_double(pred.xx), format_double(pred.yy), format_double(pred.xy),
		             format_double(pred.yx), format_double(pred.zz)});
	};
	for (int i = 0; i < spec.n_i; ++i)
		emit("i", i * spec.n_q + q_cut);
	for (int q = 0; q < spec.n_q; ++q)
		emit("q", i_cut * spec.n_q + q);
	w.add(lambda_dir(data.lambda) + "/slices.csv", csv.str());
}

void write_waveform_csv(ArtifactWriter& w, const std::string& rel, const pulse::Waveform& wf) {
	CsvWriter csv({"t_seconds", "re", "im"});
	for (std::size_t i = 0; i < wf.size(); ++i)
		csv.add_row({format_double(wf.time_at(i)), format_double(wf.samples[i].real()),
		             format_double(wf.samples[i].imag())});
	w.add(rel, csv.str());
}

void write_discord_json(ArtifactWriter& w, const DiscordRun& run) {
	json cols = json::array();
	for (const auto& c : run.columns) {
		json entry = json::object();
		entry["i_center"] = c.i_center;
		entry["weight"] = c.weight;
		entry["d_alice"] = c.d_alice;
		entry["d_bob"] = c.d_bob;
		entry["d_alice_qavg"] = c.d_alice_qavg;
		entry["d_bob_qavg"] = c.d_bob_qavg;
		if (c.has_ci) {
			entry["ci_alice"] = json::array({c.ci_a_lo, c.ci_a_hi});
			entry["ci_bob"] = json::array({c.ci_b_lo, c.ci_b_hi});
		} else {
			entry["ci_alice"] = nullptr;
			entry["ci_bob"] = nullptr;
		}
		cols.push_back(std::move(entry));
	}
	json doc = json::object();
	doc["lambda"] = run.lambda;
	doc["xi_opt"] = json::array({run.xi_opt.xi_a, run.xi_opt.xi_b});
	doc["gamma_opt"] = run.gamma_opt;
	doc["gamma_avg"] = run.gamma_avg;
	doc["purity_reduction"] = run.r;
	doc["flat_objective"] = run.flat_objective;
	doc["columns"] = std::move(cols);
	w.add(lambda_dir(run.lambda) + "/discord.json", doc.dump(2) + "\n");
}

void write_pulse_summary(ArtifactWriter& w, const PulseSummary& s) {
	json doc = json::object();
	doc["mismatch_matched"] = s.mismatch_matched;
	doc["mismatch_uncompensated"] = s.mismatch_uncompensated;
	doc["strength_alice"] = s.strength_alice;
	doc["strength_bob"] = s.strength_bob;
	doc["demod_lambda_alice"] = s.demod_lambda_alice;
	w.add("pulses/summary.json", doc.dump(2) + "\n");
}

void write_manifest(ArtifactWriter& w, const RunConfig& cfg) {
	json files = json::object();
	for (std::size_t i = 0; i < w.written().size(); ++i)
		files[w.written()[i]] = hex64(w.hashes()[i]);
	json doc = json::object();
	doc["config_hash"] = hex64(fnv1a64(dump_config(cfg)));
	doc["seed"] = cfg.seed;
	doc["files"] = std::move(files);
	write_file(w.out_dir() + "/manifest.json", doc.dump(2) + "\n");
}

} // namespace dsim::pipeline
