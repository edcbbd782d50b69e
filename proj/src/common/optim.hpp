#pragma once

#include <functional>
#include <vector>

namespace dsim {

struct NelderMeadResult {
	std::vector<double> x;
	double value = 0.0;
	int evaluations = 0;
};

// Derivative-free simplex minimizer for low-dimensional refinement steps.
// Standard reflection/expansion/contraction/shrink coefficients.
NelderMeadResult nelder_mead(const std::function<double(const std::vector<double>&)>& f,
                             const std::vector<double>& start,
                             double step,
                             double tol,
                             int max_iter);

struct BfgsResult {
	std::vector<double> x;
	double value = 0.0; // final objective (maximized)
	int iterations = 0;
	bool converged = false;
};

// Quasi-Newton ascent with Armijo backtracking. Maximizes f. The gradient
// callback fills grad at x; the caller owns its accuracy.
BfgsResult bfgs_maximize(const std::function<double(const std::vector<double>&)>& f,
                         const std::function<void(const std::vector<double>&, std::vector<double>&)>& grad,
                         const std::vector<double>& start,
                         double gain_tol,
                         int max_iter);

} // namespace dsim
