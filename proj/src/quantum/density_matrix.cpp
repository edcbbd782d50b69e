#include "quantum/density_matrix.hpp"

#include <Eigen/Eigenvalues>

#include <cmath>
#include <stdexcept>
#include <string>

namespace dsim::quantum {

namespace {
constexpr double kHermTol = 1e-12;
constexpr double kTraceTol = 1e-12;
constexpr double kEigFloor = -1e-10;
constexpr double kEntropyFloor = 1e-10;
} // namespace

DensityMatrix::DensityMatrix(const Mat4& m) : m_(m) {
	std::string why;
	if (!is_valid(m, &why)) throw std::invalid_argument("invalid density matrix: " + why);
}

bool DensityMatrix::is_valid(const Mat4& m, std::string* why) {
	if ((m - m.adjoint()).cwiseAbs().maxCoeff() > kHermTol) {
		if (why) *why = "not Hermitian";
		return false;
	}
	if (std::abs(m.trace().real() - 1.0) > kTraceTol || std::abs(m.trace().imag()) > kTraceTol) {
		if (why) *why = "trace != 1";
		return false;
	}
	Eigen::SelfAdjointEigenSolver<Mat4> es(m, Eigen::EigenvaluesOnly);
	if (es.eigenvalues().minCoeff() < kEigFloor) {
		if (why) *why = "negative eigenvalue " + std::to_string(es.eigenvalues().minCoeff());
		return false;
	}
	return true;
}

double von_neumann_entropy(const Eigen::MatrixXcd& rho) {
	Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(rho, Eigen::EigenvaluesOnly);
	double s = 0.0;
	for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
		const double lam = es.eigenvalues()[i];
		if (lam > kEntropyFloor) s -= lam * std::log2(lam);
	}
	return s;
}

double purity(const Eigen::MatrixXcd& rho) {
	return (rho * rho).trace().real();
}

double fidelity(const Mat4& rho, const Mat4& sigma) {
	Eigen::SelfAdjointEigenSolver<Mat4> es(rho);
	Mat4 sqrt_rho = Mat4::Zero();
	for (int i = 0; i < 4; ++i) {
		const double lam = std::max(es.eigenvalues()[i], 0.0);
		sqrt_rho += std::sqrt(lam) * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
	}
	const Mat4 inner = sqrt_rho * sigma * sqrt_rho;
	Eigen::SelfAdjointEigenSolver<Mat4> es2(inner, Eigen::EigenvaluesOnly);
	double tr = 0.0;
	for (int i = 0; i < 4; ++i) tr += std::sqrt(std::max(es2.eigenvalues()[i], 0.0));
	return tr * tr;
}

Mat4 project_to_physical(const Mat4& candidate) {
	const Mat4 herm = 0.5 * (candidate + candidate.adjoint());
	Eigen::SelfAdjointEigenSolver<Mat4> es(herm);
	Mat4 out = Mat4::Zero();
	double trace = 0.0;
	for (int i = 0; i < 4; ++i) {
		const double lam = std::max(es.eigenvalues()[i], 0.0);
		out += lam * es.eigenvectors().col(i) * es.eigenvectors().col(i).adjoint();
		trace += lam;
	}
	if (trace <= 0.0) return Mat4::Identity() / 4.0;
	return out / trace;
}

} // namespace dsim::quantum
