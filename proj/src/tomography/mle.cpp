#include "tomography/mle.hpp"

#include "common/optim.hpp"
#include "quantum/density_matrix.hpp"
#include "tomography/estimate.hpp"

#include <Eigen/Cholesky>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dsim::tomography {

using quantum::Complex;
using quantum::Mat4;

namespace {

constexpr double kGainTol = 1e-10;
constexpr int kMaxIter = 5000;
constexpr double kProbFloor = 1e-15;

struct Workspace {
	// Observation operators W[s*4+o] = U_s^dagger diag((F(x)F)_{o,:}) U_s,
	// so the modeled outcome probability is p = Tr(rho W).
	std::array<Mat4, kSettings * 4> w;
	std::array<std::array<double, 4>, kSettings> n; // add-half smoothed counts
	double n_total = 0.0;

	Workspace(const CountsTable& counts, double c_tomo) {
		const double flip = (1.0 - c_tomo) / 2.0;
		const double keep = 1.0 - flip;
		for (int s = 0; s < kSettings; ++s) {
			const Mat4 u = setting_unitary(setting_at(s));
			for (int o = 0; o < 4; ++o) {
				Mat4 d = Mat4::Zero();
				for (int j = 0; j < 4; ++j) {
					const double fa = ((o ^ j) & 2) ? flip : keep;
					const double fb = ((o ^ j) & 1) ? flip : keep;
					d(j, j) = fa * fb;
				}
				w[static_cast<std::size_t>(4 * s + o)] = u.adjoint() * d * u;
				n[static_cast<std::size_t>(s)][static_cast<std::size_t>(o)] =
				    static_cast<double>(counts.counts[static_cast<std::size_t>(s)][static_cast<std::size_t>(o)]) + 0.5;
				n_total += n[static_cast<std::size_t>(s)][static_cast<std::size_t>(o)];
			}
		}
	}
};

double real_trace_product(const Mat4& a, const Mat4& b) {
	return a.transpose().cwiseProduct(b).sum().real();
}

// 16 real parameters <-> lower-triangular T (diagonal real).
Mat4 t_from_params(const std::vector<double>& x) {
	Mat4 t = Mat4::Zero();
	std::size_t k = 0;
	for (int a = 0; a < 4; ++a) {
		for (int b = 0; b <= a; ++b) {
			if (a == b) {
				t(a, b) = x[k++];
			} else {
				const double re = x[k++];
				const double im = x[k++];
				t(a, b) = Complex(re, im);
			}
		}
	}
	return t;
}

std::vector<double> params_from_t(const Mat4& t) {
	std::vector<double> x(16);
	std::size_t k = 0;
	for (int a = 0; a < 4; ++a) {
		for (int b = 0; b <= a; ++b) {
			if (a == b) {
				x[k++] = t(a, b).real();
			} else {
				x[k++] = t(a, b).real();
				x[k++] = t(a, b).imag();
			}
		}
	}
	return x;
}

double log_likelihood_of(const Workspace& ws, const Mat4& rho) {
	double ll = 0.0;
	for (int s = 0; s < kSettings; ++s) {
		for (int o = 0; o < 4; ++o) {
			const double p = std::max(kProbFloor, real_trace_product(rho, ws.w[static_cast<std::size_t>(4 * s + o)]));
			ll += ws.n[static_cast<std::size_t>(s)][static_cast<std::size_t>(o)] * std::log(p);
		}
	}
	return ll;
}

Mat4 rho_from_params(const std::vector<double>& x, double* tau_out = nullptr) {
	const Mat4 t = t_from_params(x);
	const Mat4 tt = t.adjoint() * t;
	const double tau = tt.trace().real();
	if (tau_out) *tau_out = tau;
	if (tau <= 0.0) return Mat4::Identity() / 4.0;
	return tt / tau;
}

/// T lower-triangular with T^dagger T = rho, via Cholesky of the
/// index-reversed matrix (rho must be positive definite).
Mat4 lower_factor(const Mat4& rho) {
	Mat4 rev;
	for (int i = 0; i < 4; ++i)
		for (int j = 0; j < 4; ++j) rev(i, j) = rho(3 - i, 3 - j);
	Eigen::LLT<Mat4> llt(rev);
	if (llt.info() != Eigen::Success) throw std::runtime_error("cholesky of start state failed");
	const Mat4 l = llt.matrixL();
	Mat4 upper;
	for (int i = 0; i < 4; ++i)
		for (int j = 0; j < 4; ++j) upper(i, j) = l(3 - i, 3 - j);
	return upper.adjoint();
}

} // namespace

double tomo_log_likelihood(const CountsTable& counts, const Mat4& rho, double c_tomo) {
	const Workspace ws(counts, c_tomo);
	return log_likelihood_of(ws, rho);
}

MleResult mle_reconstruct(const CountsTable& counts, double c_tomo) {
	if (c_tomo <= 0.0 || c_tomo > 1.0) throw std::invalid_argument("c_tomo must lie in (0,1]");
	const Workspace ws(counts, c_tomo);

	// Start from the PSD-projected linear estimate, nudged into the
	// interior so the Cholesky factor exists.
	Mat4 rho0 = quantum::project_to_physical(quantum::state_from_pauli(linear_estimate(counts, c_tomo)));
	rho0 = (1.0 - 1e-6) * rho0 + 1e-6 * Mat4::Identity() / 4.0;
	const std::vector<double> start = params_from_t(lower_factor(rho0));

	// rho(x) is invariant under x -> c x, and that exactly flat direction
	// destabilizes the quasi-Newton Hessian (it amplifies gradient round-off
	// into an endless micro-ascent). The -(ln tau)^2 term pins the redundant
	// scale at tau = 1 without moving rho or the attained likelihood.
	auto objective = [&ws](const std::vector<double>& x) {
		double tau = 0.0;
		const Mat4 rho = rho_from_params(x, &tau);
		if (tau <= 0.0) return -1e300;
		const double lt = std::log(tau);
		return log_likelihood_of(ws, rho) - lt * lt;
	};
	auto gradient = [&ws](const std::vector<double>& x, std::vector<double>& g) {
		double tau = 0.0;
		const Mat4 t = t_from_params(x);
		const Mat4 tt = t.adjoint() * t;
		tau = tt.trace().real();
		const Mat4 rho = tt / tau;
		Mat4 big_g = Mat4::Zero();
		for (int s = 0; s < kSettings; ++s) {
			for (int o = 0; o < 4; ++o) {
				const Mat4& w = ws.w[static_cast<std::size_t>(4 * s + o)];
				const double p = std::max(kProbFloor, real_trace_product(rho, w));
				big_g += (ws.n[static_cast<std::size_t>(s)][static_cast<std::size_t>(o)] / p) * w;
			}
		}
		// d/dT of sum n log Tr(T^dagger T W / tau): M = G - Tr(G rho) I.
		const Mat4 m = big_g - real_trace_product(big_g, rho) * Mat4::Identity();
		const Mat4 tm = t * m;
		std::size_t k = 0;
		for (int a = 0; a < 4; ++a) {
			for (int b = 0; b <= a; ++b) {
				if (a == b) {
					g[k++] = 2.0 / tau * tm(a, b).real();
				} else {
					g[k++] = 2.0 / tau * tm(a, b).real();
					g[k++] = 2.0 / tau * tm(a, b).imag();
				}
			}
		}
		// Scale penalty: tau = sum x_k^2, d/dx_k of -(ln tau)^2.
		const double pen = -4.0 * std::log(tau) / tau;
		for (std::size_t i = 0; i < x.size(); ++i) g[i] += pen * x[i];
	};

	BfgsResult res = bfgs_maximize(objective, gradient, start, kGainTol, kMaxIter);
	if (!res.converged) {
		// Numerical-gradient retry.
		auto numeric_gradient = [&objective](const std::vector<double>& x, std::vector<double>& g) {
			std::vector<double> xp = x;
			for (std::size_t i = 0; i < x.size(); ++i) {
				const double h = 1e-6 * (1.0 + std::abs(x[i]));
				xp[i] = x[i] + h;
				const double fp = objective(xp);
				xp[i] = x[i] - h;
				const double fm = objective(xp);
				xp[i] = x[i];
				g[i] = (fp - fm) / (2.0 * h);
			}
		};
		res = bfgs_maximize(objective, numeric_gradient, res.x, kGainTol, kMaxIter);
		if (!res.converged) throw std::runtime_error("mle did not converge within iteration cap");
	}

	MleResult out;
	out.rho = rho_from_params(res.x);
	// Clean tiny Hermiticity rounding so downstream invariant checks pass.
	out.rho = 0.5 * (out.rho + out.rho.adjoint().eval());
	out.rho /= out.rho.trace().real();
	out.log_likelihood = log_likelihood_of(ws, out.rho); // without the scale penalty
	out.iterations = res.iterations;
	return out;
}

} // namespace dsim::tomography
