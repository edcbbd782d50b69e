#pragma once

#include "measurement/model.hpp"

namespace dsim::measurement {

/// The five analytically known conditional Pauli expectations.
struct FringeComponents {
	double xx = 0.0;
	double yy = 0.0;
	double xy = 0.0;
	double yx = 0.0;
	double zz = 0.0;
};

/// The closed-form conditional expectation values at outcome (i_m, q_m).
///
/// Internally the outcome is rescaled to the dimensionless variables used by
/// the fringe formulas: with x = i_m/sigma_m, y = q_m/sigma_m and the pointer
/// separation s = sqrt(2*lambda),
///   I = s*x,  Q = s*y,  Qbar = s*(q_bar/sigma_m),
///   Theta- = Qbar + (xi_a - xi_b)*lambda,  Theta+ = (xi_a + xi_b)*lambda,
///   D = exp(-lambda)*cosh(I) + 1,
///   XX = C*(-exp(-lambda)*cos(Theta+) + cos(Q - Theta-)) / D
///   YY = C*( exp(-lambda)*cos(Theta+) + cos(Q - Theta-)) / D
///   XY = C*( exp(-lambda)*sin(Theta+) - sin(Q - Theta-)) / D
///   YX = C*( exp(-lambda)*sin(Theta+) + sin(Q - Theta-)) / D
///   ZZ = C_Tomo*(exp(-lambda)*cosh(I) - 1) / D
/// with C = contrast(lambda, p). All outputs lie in [-1, 1].
/// Throws on lambda < 0.
FringeComponents conditional_pauli_closed_form(double lambda, const Outcome& o, const ModelParams& p);

} // namespace dsim::measurement
