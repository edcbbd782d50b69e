#include "common/optim.hpp"

#include <algorithm>
#include <cmath>

namespace dsim {

NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& start,
                             double step,
                             double tol,
                             int max_iter) {
	const std::size_t n = start.size();
	const double alpha = 1.0, gamma = 2.0, rho = 0.5, sigma = 0.5;

	struct Vertex {
		std::vector<double> x;
		double v;
	};
	std::vector<Vertex> s;
	s.reserve(n + 1);
	int evals = 0;
	auto eval = [&](const std::vector<double>& x) {
		++evals;
		return f(x);
	};

	s.push_back({start, eval(start)});
	for (std::size_t i = 0; i < n; ++i) {
		std::vector<double> x = start;
		x[i] += step;
		s.push_back({x, eval(x)});
	}

	auto order = [&] { std::sort(s.begin(), s.end(), [](const Vertex& a, const Vertex& b) { return a.v < b.v; }); };
	order();

	for (int it = 0; it < max_iter; ++it) {
		if (std::abs(s.back().v - s.front().v) < tol) break;

		std::vector<double> centroid(n, 0.0);
		for (std::size_t i = 0; i < n; ++i) {
			for (std::size_t j = 0; j < n; ++j) centroid[j] += s[i].x[j];
		}
		for (double& c : centroid) c /= static_cast<double>(n);

		auto blend = [&](double t, const std::vector<double>& from) {
			std::vector<double> x(n);
			for (std::size_t j = 0; j < n; ++j) x[j] = centroid[j] + t * (centroid[j] - from[j]);
			return x;
		};

		const std::vector<double> xr = blend(alpha, s.back().x);
		const double vr = eval(xr);
		if (vr < s.front().v) {
			const std::vector<double> xe = blend(gamma, s.back().x);
			const double ve = eval(xe);
			s.back() = ve < vr ? Vertex{xe, ve} : Vertex{xr, vr};
		} else if (vr < s[n - 1].v) {
			s.back() = {xr, vr};
		} else {
			const std::vector<double> xc = blend(-rho, s.back().x);
			const double vc = eval(xc);
			if (vc < s.back().v) {
				s.back() = {xc, vc};
			} else {
				for (std::size_t i = 1; i <= n; ++i) {
					for (std::size_t j = 0; j < n; ++j) s[i].x[j] = s[0].x[j] + sigma * (s[i].x[j] - s[0].x[j]);
					s[i].v = eval(s[i].x);
				}
			}
		}
		order();
	}
	return {s.front().x, s.front().v, evals};
}

namespace {

double dot(const std::vector<double>& a, const std::vector<double>& b) {
	double s = 0.0;
	for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
	return s;
}

} // namespace

BfgsResult bfgs_maximize(const std::function<double(const std::vector<double>&)>& f,
                         const std::function<void(const std::vector<double>&, std::vector<double>&)>& grad,
                         const std::vector<double>& start,
                         double gain_tol,
                         int max_iter) {
	const std::size_t n = start.size();
	std::vector<double> x = start;
	double fx = f(x);
	std::vector<double> g(n);
	grad(x, g);

	// Inverse Hessian approximation, kept dense (n is small).
	std::vector<double> h(n * n, 0.0);
	for (std::size_t i = 0; i < n; ++i) h[i * n + i] = 1.0;

	BfgsResult result;
	int it = 0;
	for (; it < max_iter; ++it) {
		std::vector<double> dir(n, 0.0);
		for (std::size_t i = 0; i < n; ++i) {
			for (std::size_t j = 0; j < n; ++j) dir[i] += h[i * n + j] * g[j];
		}
		double slope = dot(dir, g);
		if (slope <= 0.0) {
			// Curvature update went bad; reset to steepest ascent.
			dir = g;
			slope = dot(g, g);
			for (std::size_t i = 0; i < n; ++i) {
				for (std::size_t j = 0; j < n; ++j) h[i * n + j] = (i == j) ? 1.0 : 0.0;
			}
		}
		if (slope < 1e-18) {
			result.converged = true;
			break;
		}

		// Armijo backtracking keeps the ascent monotone.
		double t = 1.0;
		double fn = fx;
		std::vector<double> xn(n);
		bool improved = false;
		for (int ls = 0; ls < 40; ++ls) {
			for (std::size_t i = 0; i < n; ++i) xn[i] = x[i] + t * dir[i];
			fn = f(xn);
			if (fn >= fx + 1e-4 * t * slope) {
				improved = true;
				break;
			}
			t *= 0.5;
		}
		if (!improved) {
			result.converged = true;
			break;
		}

		std::vector<double> gn(n);
		grad(xn, gn);

		std::vector<double> sdelta(n), ydelta(n);
		for (std::size_t i = 0; i < n; ++i) {
			sdelta[i] = xn[i] - x[i];
			ydelta[i] = g[i] - gn[i]; // sign convention: ascent on f == descent on -f
		}
		const double sy = dot(sdelta, ydelta);
		if (sy > 1e-12) {
			// BFGS update of the inverse Hessian.
			const double r = 1.0 / sy;
			std::vector<double> hy(n, 0.0);
			for (std::size_t i = 0; i < n; ++i) {
				for (std::size_t j = 0; j < n; ++j) hy[i] += h[i * n + j] * ydelta[j];
			}
			const double yhy = dot(ydelta, hy);
			for (std::size_t i = 0; i < n; ++i) {
				for (std::size_t j = 0; j < n; ++j) {
					h[i * n + j] += (sy + yhy) * r * r * sdelta[i] * sdelta[j] - r * (hy[i] * sdelta[j] + sdelta[i] * hy[j]);
				}
			}
		}

		const double gain = fn - fx;
		x = xn;
		fx = fn;
		g = gn;
		if (gain < gain_tol) {
			result.converged = true;
			++it;
			break;
		}
	}
	result.x = x;
	result.value = fx;
	result.iterations = it;
	return result;
}

} // namespace dsim
