#include "tomography/estimate.hpp"

#include <array>
#include <stdexcept>

namespace dsim::tomography {

using quantum::PauliVector;

PauliVector linear_estimate(const CountsTable& counts, double c_tomo) {
	if (c_tomo <= 0.0 || c_tomo > 1.0)
		throw std::invalid_argument("c_tomo must lie in (0,1] for inversion");
	const double flip = (1.0 - c_tomo) / 2.0;
	const double keep = 1.0 - flip;
	// Inverse of the symmetric flip matrix [[keep, flip], [flip, keep]].
	const double det = keep - flip; // == c_tomo
	const double inv_keep = keep / det, inv_flip = -flip / det;

	PauliVector pv;
	pv[0] = 1.0;
	std::array<double, 16> weight{};
	weight[0] = 1.0;

	for (int s = 0; s < kSettings; ++s) {
		const auto n = counts.counts[static_cast<std::size_t>(s)];
		const double total = static_cast<double>(n[0] + n[1] + n[2] + n[3]);
		if (total == 0.0) continue;

		double q[4];
		for (int o = 0; o < 4; ++o) q[o] = static_cast<double>(n[o]) / total;
		// p = (F^-1 (x) F^-1) q.
		double p[4] = {0, 0, 0, 0};
		for (int o = 0; o < 4; ++o) {
			for (int j = 0; j < 4; ++j) {
				const double fa = ((o ^ j) & 2) ? inv_flip : inv_keep;
				const double fb = ((o ^ j) & 1) ? inv_flip : inv_keep;
				p[o] += fa * fb * q[j];
			}
		}

		const TomoSetting st = setting_at(s);
		const MeasuredAxis ax_a = measured_axis(st.rot_a);
		const MeasuredAxis ax_b = measured_axis(st.rot_b);
		// Parities over the corrected probabilities; outcome bit 0 is +1.
		const double par_a = p[0] + p[1] - p[2] - p[3];
		const double par_b = p[0] - p[1] + p[2] - p[3];
		const double par_ab = p[0] - p[1] - p[2] + p[3];

		const int idx_a = 4 * ax_a.axis;          // <sigma_a (x) I>
		const int idx_b = ax_b.axis;              // <I (x) sigma_b>
		const int idx_ab = 4 * ax_a.axis + ax_b.axis;
		pv[idx_a] += ax_a.sign * par_a;
		weight[static_cast<std::size_t>(idx_a)] += 1.0;
		pv[idx_b] += ax_b.sign * par_b;
		weight[static_cast<std::size_t>(idx_b)] += 1.0;
		pv[idx_ab] += ax_a.sign * ax_b.sign * par_ab;
		weight[static_cast<std::size_t>(idx_ab)] += 1.0;
	}

	for (int k = 1; k < 16; ++k) {
		if (weight[static_cast<std::size_t>(k)] > 0.0) pv[k] /= weight[static_cast<std::size_t>(k)];
	}
	return pv;
}

} // namespace dsim::tomography
