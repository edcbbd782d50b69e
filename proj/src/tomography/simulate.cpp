#include "tomography/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsim::tomography {

using quantum::Mat4;

std::uint64_t CountsTable::setting_shots(int s) const {
	std::uint64_t n = 0;
	for (const auto c : counts[static_cast<std::size_t>(s)]) n += c;
	return n;
}

std::uint64_t CountsTable::total() const {
	std::uint64_t n = 0;
	for (int s = 0; s < kSettings; ++s) n += setting_shots(s);
	return n;
}

CountsTable counts_from_records(const std::vector<ShotRecord>& records) {
	CountsTable t;
	for (const ShotRecord& r : records) ++t.counts[r.setting][r.outcome];
	return t;
}

std::array<double, 4> outcome_probabilities(const Mat4& rho, const TomoSetting& s, double c_tomo) {
	if (c_tomo < 0.0 || c_tomo > 1.0) throw std::invalid_argument("c_tomo out of [0,1]");
	const Mat4 u = setting_unitary(s);
	const Mat4 rotated = u * rho * u.adjoint();
	double p[4];
	for (int o = 0; o < 4; ++o) p[o] = std::max(0.0, rotated(o, o).real());

	const double flip = (1.0 - c_tomo) / 2.0;
	const double keep = 1.0 - flip;
	// F (x) F applied to the diagonal (bit 1 = Alice, bit 0 = Bob).
	std::array<double, 4> q{};
	for (int o = 0; o < 4; ++o) {
		for (int j = 0; j < 4; ++j) {
			const double fa = ((o ^ j) & 2) ? flip : keep;
			const double fb = ((o ^ j) & 1) ? flip : keep;
			q[o] += fa * fb * p[j];
		}
	}
	// Guard against rounding: renormalize exactly.
	const double sum = q[0] + q[1] + q[2] + q[3];
	for (auto& v : q) v /= sum;
	return q;
}

std::vector<ShotRecord> simulate_tomography_records(const Mat4& rho, std::uint64_t shots,
                                                    double c_tomo, RngStream& rng) {
	if (shots == 0) throw std::invalid_argument("shots must be positive");
	std::vector<ShotRecord> records;
	records.reserve(shots);
	for (int s = 0; s < kSettings; ++s) {
		const std::uint64_t n = shots / kSettings + (static_cast<std::uint64_t>(s) < shots % kSettings ? 1 : 0);
		if (n == 0) continue;
		const auto q = outcome_probabilities(rho, setting_at(s), c_tomo);
		const double c1 = q[0], c2 = c1 + q[1], c3 = c2 + q[2];
		for (std::uint64_t k = 0; k < n; ++k) {
			const double u = rng.next_uniform();
			const std::uint8_t o = u <= c1 ? 0 : u <= c2 ? 1 : u <= c3 ? 2 : 3;
			records.push_back({static_cast<std::uint8_t>(s), o});
		}
	}
	return records;
}

CountsTable simulate_tomography(const Mat4& rho, std::uint64_t shots, double c_tomo,
                                std::uint64_t seed) {
	SplitRng root(seed);
	RngStream rng = root.stream(0x70e0);
	return counts_from_records(simulate_tomography_records(rho, shots, c_tomo, rng));
}

} // namespace dsim::tomography
