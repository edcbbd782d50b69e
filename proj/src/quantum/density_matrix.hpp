#pragma once

#include "quantum/pauli.hpp"

namespace dsim::quantum {

/// Validated two-qubit density matrix.
///
/// Construction enforces the physical invariants (Hermitian within 1e-12,
/// unit trace within 1e-12, eigenvalues >= -1e-10); violations throw
/// std::invalid_argument. Use the raw Mat4 + state_from_pauli path for
/// unprojected candidates.
class DensityMatrix {
public:
	explicit DensityMatrix(const Mat4& m);

	const Mat4& matrix() const { return m_; }

	/// Check the invariants without throwing.
	static bool is_valid(const Mat4& m, std::string* why = nullptr);

private:
	Mat4 m_;
};

/// Von Neumann entropy in bits: -sum lambda log2 lambda, with 0 log 0 == 0.
/// Eigenvalues below 1e-10 are treated as zero to shield the log against
/// finite-precision eigensolver noise. Works for 2x2 and 4x4 Hermitian
/// matrices with unit trace.
double von_neumann_entropy(const Eigen::MatrixXcd& rho);

/// Tr(rho^2); in [1/4, 1] for a valid two-qubit state.
double purity(const Eigen::MatrixXcd& rho);

/// Uhlmann fidelity (Tr sqrt(sqrt(rho) sigma sqrt(rho)))^2 in [0, 1].
double fidelity(const Mat4& rho, const Mat4& sigma);

/// Nearest valid state under the standard eigenvalue-clipping projection:
/// clamp negative eigenvalues to zero and renormalize the trace.
Mat4 project_to_physical(const Mat4& candidate);

} // namespace dsim::quantum
