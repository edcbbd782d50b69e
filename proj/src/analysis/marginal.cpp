#include "analysis/marginal.hpp"

#include "common/optim.hpp"
#include "quantum/density_matrix.hpp"

#include <cmath>
#include <complex>
#include <stdexcept>

namespace dsim::analysis {

using quantum::Complex;
using quantum::Mat4;

void ConditionalGrid::normalize_weights() {
	if (weight.size() != static_cast<std::size_t>(bins()) || states.size() != weight.size())
		throw std::invalid_argument("conditional grid arrays do not match bin spec");
	double total = 0.0;
	for (int b = 0; b < bins(); ++b) {
		if (!states[static_cast<std::size_t>(b)]) weight[static_cast<std::size_t>(b)] = 0.0;
		total += weight[static_cast<std::size_t>(b)];
	}
	if (total <= 0.0) throw std::invalid_argument("conditional grid has no reconstructed weight");
	for (auto& w : weight) w /= total;
}

Mat4 rotate_by_xi(const Mat4& rho, double q_m, const XiPair& xi) {
	// e^{i Z xi q}: |g> picks +xi q, |e> picks -xi q.
	const double sa[2] = {+xi.xi_a * q_m, -xi.xi_a * q_m};
	const double sb[2] = {+xi.xi_b * q_m, -xi.xi_b * q_m};
	Complex u[4];
	for (int a = 0; a < 2; ++a)
		for (int b = 0; b < 2; ++b) u[2 * a + b] = std::exp(Complex(0.0, sa[a] + sb[b]));
	Mat4 out;
	for (int k = 0; k < 4; ++k)
		for (int l = 0; l < 4; ++l) out(k, l) = u[k] * rho(k, l) * std::conj(u[l]);
	return out;
}

std::vector<MarginalColumn> marginalize(const ConditionalGrid& grid, const XiPair& xi) {
	std::vector<MarginalColumn> out;
	for (int i = 0; i < grid.spec.n_i; ++i) {
		Mat4 acc = Mat4::Zero();
		double wsum = 0.0;
		for (int q = 0; q < grid.spec.n_q; ++q) {
			const std::size_t b = static_cast<std::size_t>(i * grid.spec.n_q + q);
			if (!grid.states[b] || grid.weight[b] <= 0.0) continue;
			acc += grid.weight[b] * rotate_by_xi(*grid.states[b], grid.spec.q_center(q), xi);
			wsum += grid.weight[b];
		}
		if (wsum <= 0.0) continue;
		MarginalColumn col;
		col.i_index = i;
		col.i_center = grid.spec.i_center(i);
		col.weight = wsum;
		col.rho = acc / wsum;
		out.push_back(col);
	}
	return out;
}

double purity_objective(const ConditionalGrid& grid, const XiPair& xi) {
	double gamma = 0.0;
	for (const MarginalColumn& col : marginalize(grid, xi))
		gamma += col.weight * quantum::purity(col.rho);
	return gamma;
}

XiOptimum optimize_xi(const ConditionalGrid& grid, double span, double step) {
	const int n = static_cast<int>(std::round(2.0 * span / step)) + 1;
	XiOptimum best;
	best.gamma = -1.0;
	double worst = 2.0;
	for (int i = 0; i < n; ++i) {
		for (int j = 0; j < n; ++j) {
			const XiPair xi{-span + i * step, -span + j * step};
			const double g = purity_objective(grid, xi);
			if (g > best.gamma) {
				best.gamma = g;
				best.xi = xi;
			}
			worst = std::min(worst, g);
		}
	}
	if (best.gamma - worst < 1e-9) {
		// No fringes to unwind; the caller's convention is Xi = (0,0).
		best.flat = true;
		best.xi = {0.0, 0.0};
		best.gamma = purity_objective(grid, best.xi);
		return best;
	}

	auto negative_gamma = [&grid](const std::vector<double>& x) {
		return -purity_objective(grid, XiPair{x[0], x[1]});
	};
	const NelderMeadResult r =
	    nelder_mead(negative_gamma, {best.xi.xi_a, best.xi.xi_b}, step, 1e-10, 400);
	if (-r.value >= best.gamma) {
		best.gamma = -r.value;
		best.xi = {r.x[0], r.x[1]};
	}
	return best;
}

XiOptimum refine_xi(const ConditionalGrid& grid, const XiPair& start, double step) {
	auto negative_gamma = [&grid](const std::vector<double>& x) {
		return -purity_objective(grid, XiPair{x[0], x[1]});
	};
	const NelderMeadResult r = nelder_mead(negative_gamma, {start.xi_a, start.xi_b}, step, 1e-10, 400);
	XiOptimum out;
	out.xi = {r.x[0], r.x[1]};
	out.gamma = -r.value;
	return out;
}

double average_bin_purity(const ConditionalGrid& grid) {
	double gamma = 0.0;
	for (int b = 0; b < grid.bins(); ++b) {
		const auto bi = static_cast<std::size_t>(b);
		if (!grid.states[bi] || grid.weight[bi] <= 0.0) continue;
		gamma += grid.weight[bi] * quantum::purity(*grid.states[bi]);
	}
	return gamma;
}

double purity_reduction(const ConditionalGrid& grid, const XiPair& xi_opt) {
	const double gamma_avg = average_bin_purity(grid);
	if (gamma_avg <= 0.0) throw std::invalid_argument("empty conditional grid");
	return 1.0 - purity_objective(grid, xi_opt) / gamma_avg;
}

} // namespace dsim::analysis
