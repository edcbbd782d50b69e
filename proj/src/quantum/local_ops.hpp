#pragma once

#include "quantum/pauli.hpp"

namespace dsim::quantum {

enum class Subsystem { A, B };

/// Reduced one-qubit state. keep == A traces out Bob (the second factor).
Mat2 partial_trace(const Mat4& rho, Subsystem keep);

/// (uA (x) uB) rho (uA (x) uB)^dagger.
/// Throws std::invalid_argument unless both factors are unitary within 1e-10.
Mat4 apply_local_unitary(const Mat4& rho, const Mat2& uA, const Mat2& uB);

bool is_unitary(const Mat2& u, double tol = 1e-10);

/// Projector |n+><n+| on the Bloch direction (theta, phi):
/// |n+> = cos(theta/2)|g> + e^{i phi} sin(theta/2)|e>. The complementary
/// projector is identity minus this one.
Mat2 bloch_projector(double theta, double phi);

/// One-qubit rotation exp(-i angle/2 * (axis . sigma)) for axis 1=X, 2=Y, 3=Z.
Mat2 rotation(int axis, double angle);

} // namespace dsim::quantum
