#include "analysis/discord.hpp"

#include "common/optim.hpp"
#include "quantum/density_matrix.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace dsim::analysis {

using quantum::Complex;
using quantum::Mat2;
using quantum::Mat4;
using quantum::Subsystem;

namespace {

double entropy_bit(double p) {
	if (p <= 1e-10 || p >= 1.0 - 1e-10) return 0.0;
	return -p * std::log2(p) - (1.0 - p) * std::log2(1.0 - p);
}

/// Entropy of an unnormalized PSD 2x2 block with trace p, weighted by p:
/// p * S(M/p), which -> 0 as p -> 0.
double weighted_entropy(const Mat2& m) {
	const double p = m.trace().real();
	if (p <= 1e-12) return 0.0;
	// Eigenvalues of M/p via the closed 2x2 form.
	const double det = (m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0)).real() / (p * p);
	const double disc = std::sqrt(std::max(0.0, 0.25 - det));
	return p * entropy_bit(0.5 + disc);
}

/// Measurement-side context: marginal of the unmeasured qubit and the three
/// correlation blocks K_k = Tr_side[(sigma_k on side) rho], so that the
/// unnormalized conditioned states are (rho_other +- n.K)/2.
struct SideContext {
	Mat2 other_marginal;
	Mat2 k[3];

	SideContext(const Mat4& rho, Subsystem side) {
		using quantum::kron;
		using quantum::partial_trace;
		using quantum::sigma;
		const Subsystem other = (side == Subsystem::A) ? Subsystem::B : Subsystem::A;
		other_marginal = partial_trace(rho, other);
		for (int i = 0; i < 3; ++i) {
			const Mat4 op = (side == Subsystem::A) ? kron(sigma(i + 1), sigma(0)) : kron(sigma(0), sigma(i + 1));
			k[i] = partial_trace(op * rho, other);
		}
	}

	double conditional_entropy(double theta, double phi) const {
		const double nx = std::sin(theta) * std::cos(phi);
		const double ny = std::sin(theta) * std::sin(phi);
		const double nz = std::cos(theta);
		const Mat2 corr = nx * k[0] + ny * k[1] + nz * k[2];
		const Mat2 plus = 0.5 * (other_marginal + corr);
		const Mat2 minus = 0.5 * (other_marginal - corr);
		return weighted_entropy(plus) + weighted_entropy(minus);
	}
};

} // namespace

double mutual_information(const Mat4& rho) {
	using quantum::partial_trace;
	using quantum::von_neumann_entropy;
	return von_neumann_entropy(partial_trace(rho, Subsystem::A)) +
	       von_neumann_entropy(partial_trace(rho, Subsystem::B)) - von_neumann_entropy(rho);
}

ClassicalCorrelation classical_correlation(const Mat4& rho, Subsystem side, const OptConfig& cfg) {
	const SideContext ctx(rho, side);

	struct GridPoint {
		double value, theta, phi;
	};
	std::vector<GridPoint> points;
	points.reserve(static_cast<std::size_t>(cfg.grid_theta) * static_cast<std::size_t>(cfg.grid_phi));
	for (int i = 0; i < cfg.grid_theta; ++i) {
		const double theta = (i + 0.5) * std::numbers::pi / cfg.grid_theta;
		for (int j = 0; j < cfg.grid_phi; ++j) {
			const double phi = j * 2.0 * std::numbers::pi / cfg.grid_phi;
			points.push_back({ctx.conditional_entropy(theta, phi), theta, phi});
		}
	}
	std::partial_sort(points.begin(), points.begin() + cfg.refine_starts, points.end(),
	                  [](const GridPoint& a, const GridPoint& b) { return a.value < b.value; });

	const double incumbent = points.front().value;
	GridPoint best = points.front();
	const double step = std::numbers::pi / cfg.grid_theta;
	for (int s = 0; s < cfg.refine_starts; ++s) {
		auto obj = [&ctx](const std::vector<double>& x) { return ctx.conditional_entropy(x[0], x[1]); };
		const NelderMeadResult r =
		    nelder_mead(obj, {points[static_cast<std::size_t>(s)].theta, points[static_cast<std::size_t>(s)].phi},
		                step, cfg.tol, cfg.max_iter);
		if (r.value < best.value) best = {r.value, r.x[0], r.x[1]};
	}
	if (best.value > incumbent + 1e-12)
		throw std::runtime_error("classical-correlation refinement stalled above grid incumbent");

	ClassicalCorrelation out;
	out.min_conditional_entropy = best.value;
	out.theta = best.theta;
	out.phi = best.phi;
	const Subsystem other = (side == Subsystem::A) ? Subsystem::B : Subsystem::A;
	out.value = quantum::von_neumann_entropy(quantum::partial_trace(rho, other)) - best.value;
	return out;
}

double discord(const Mat4& rho, Subsystem side, const OptConfig& cfg) {
	const double d = mutual_information(rho) - classical_correlation(rho, side, cfg).value;
	if (d < -1e-9) throw std::runtime_error("negative discord beyond tolerance: optimizer failure");
	return std::max(0.0, d);
}

double discord_brute_force(const Mat4& rho, Subsystem side, int n_theta, int n_phi) {
	const SideContext ctx(rho, side);
	double min_entropy = std::numeric_limits<double>::infinity();
	for (int i = 0; i < n_theta; ++i) {
		const double theta = (i + 0.5) * std::numbers::pi / n_theta;
		for (int j = 0; j < n_phi; ++j) {
			const double phi = j * 2.0 * std::numbers::pi / n_phi;
			min_entropy = std::min(min_entropy, ctx.conditional_entropy(theta, phi));
		}
	}
	const Subsystem other = (side == Subsystem::A) ? Subsystem::B : Subsystem::A;
	const double j_val = quantum::von_neumann_entropy(quantum::partial_trace(rho, other)) - min_entropy;
	return std::max(0.0, mutual_information(rho) - j_val);
}

} // namespace dsim::analysis
