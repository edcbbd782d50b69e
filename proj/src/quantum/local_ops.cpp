#include "quantum/local_ops.hpp"

#include <cmath>
#include <stdexcept>

namespace dsim::quantum {

Mat2 partial_trace(const Mat4& rho, Subsystem keep) {
	Mat2 out = Mat2::Zero();
	// Basis index = 2*a + b (a = Alice, b = Bob).
	if (keep == Subsystem::A) {
		for (int a = 0; a < 2; ++a)
			for (int a2 = 0; a2 < 2; ++a2)
				for (int b = 0; b < 2; ++b)
					out(a, a2) += rho(2 * a + b, 2 * a2 + b);
	} else {
		for (int b = 0; b < 2; ++b)
			for (int b2 = 0; b2 < 2; ++b2)
				for (int a = 0; a < 2; ++a)
					out(b, b2) += rho(2 * a + b, 2 * a + b2);
	}
	return out;
}

bool is_unitary(const Mat2& u, double tol) {
	return (u * u.adjoint() - Mat2::Identity()).cwiseAbs().maxCoeff() <= tol;
}

Mat4 apply_local_unitary(const Mat4& rho, const Mat2& uA, const Mat2& uB) {
	if (!is_unitary(uA) || !is_unitary(uB))
		throw std::invalid_argument("local operator is not unitary");
	const Mat4 u = kron(uA, uB);
	return u * rho * u.adjoint();
}

Mat2 bloch_projector(double theta, double phi) {
	const Complex c = std::cos(theta / 2.0);
	const Complex s = std::exp(Complex(0.0, phi)) * std::sin(theta / 2.0);
	Eigen::Vector2cd ket;
	ket << c, s;
	return ket * ket.adjoint();
}

Mat2 rotation(int axis, double angle) {
	const double h = angle / 2.0;
	return std::cos(h) * sigma(0) - Complex(0.0, std::sin(h)) * sigma(axis);
}

} // namespace dsim::quantum
