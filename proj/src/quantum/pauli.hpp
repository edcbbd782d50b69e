#pragma once

#include <Eigen/Dense>

#include <array>
#include <complex>
#include <string>

namespace dsim::quantum {

using Mat2 = Eigen::Matrix2cd;
using Mat4 = Eigen::Matrix4cd;
using Complex = std::complex<double>;

/// Computational basis: |g> = (1,0)^T so Z|g> = +|g>.
/// Two-qubit basis order (gg, ge, eg, ee); the FIRST letter is Alice,
/// i.e. index = 2*a + b for single-qubit indices a (Alice), b (Bob).
Mat2 sigma(int k); // k: 0=I, 1=X, 2=Y, 3=Z

/// Kronecker product a (x) b with Alice as the left factor.
Mat4 kron(const Mat2& a, const Mat2& b);

/// Two-qubit Pauli operator with lexicographic index k = 4*a + b,
/// so k runs II, IX, IY, IZ, XI, ..., ZZ.
Mat4 pauli_operator(int k);

/// Label for index k ("II", "IX", ..., "ZZ").
std::string pauli_label(int k);

/// Index for a label; throws std::invalid_argument on unknown labels.
int pauli_index(const std::string& label);

/// 16 real expectation values Tr(rho sigma_k) in lexicographic order.
/// components[0] is the trace (1 for normalized states); each value lies
/// in [-1, 1] for a physical state.
struct PauliVector {
	std::array<double, 16> components{};

	double& operator[](int k) { return components[static_cast<std::size_t>(k)]; }
	double operator[](int k) const { return components[static_cast<std::size_t>(k)]; }
	double at(const std::string& label) const { return components[static_cast<std::size_t>(pauli_index(label))]; }
};

PauliVector pauli_expectations(const Mat4& rho);

/// Inverse expansion (1/4) sum_k c_k sigma_k. Hermitian and unit trace by
/// construction, but NOT guaranteed positive semidefinite; reconstruction
/// from noisy data must be projected/MLE-fitted afterwards.
/// Throws std::invalid_argument unless pv[0] == 1 within 1e-12.
Mat4 state_from_pauli(const PauliVector& pv);

} // namespace dsim::quantum
