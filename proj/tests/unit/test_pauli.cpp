#include "doctest.h"

#include "quantum/pauli.hpp"

#include <cmath>
#include <stdexcept>

using namespace dsim::quantum;

namespace {

Mat4 bell_phi_plus() {
	Eigen::Vector4cd psi;
	psi << 1.0 / std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0);
	return psi * psi.adjoint();
}

} // namespace

TEST_CASE("sigma algebra: squares, commutators, traces") {
	const Complex i(0.0, 1.0);
	for (int k = 0; k < 4; ++k) {
		CHECK((sigma(k) * sigma(k) - Mat2::Identity()).norm() < 1e-15);
		if (k > 0) CHECK(std::abs(sigma(k).trace()) < 1e-15);
	}
	CHECK((sigma(1) * sigma(2) - i * sigma(3)).norm() < 1e-15); // XY = iZ
	CHECK((sigma(2) * sigma(3) - i * sigma(1)).norm() < 1e-15); // YZ = iX
	CHECK((sigma(3) * sigma(1) - i * sigma(2)).norm() < 1e-15); // ZX = iY
	CHECK_THROWS_AS(sigma(4), std::invalid_argument);
}

TEST_CASE("Z|g> = +|g> convention") {
	Eigen::Vector2cd g;
	g << 1.0, 0.0;
	CHECK((sigma(3) * g - g).norm() < 1e-15);
}

TEST_CASE("kron puts Alice on the left") {
	Mat2 a = Mat2::Zero(), b = Mat2::Identity();
	a(1, 1) = 1.0; // |e><e|
	const Mat4 k = kron(a, b);
	// |e><e| (x) I acts on the Alice bit: nonzero block at indices 2, 3.
	CHECK(std::abs(k(0, 0)) < 1e-15);
	CHECK(std::abs(k(1, 1)) < 1e-15);
	CHECK(std::abs(k(2, 2) - 1.0) < 1e-15);
	CHECK(std::abs(k(3, 3) - 1.0) < 1e-15);
}

TEST_CASE("pauli_operator matches explicit kron and labels round-trip") {
	for (int k = 0; k < 16; ++k) {
		CHECK((pauli_operator(k) - kron(sigma(k / 4), sigma(k % 4))).norm() < 1e-15);
		CHECK(pauli_index(pauli_label(k)) == k);
	}
	CHECK(pauli_label(0) == "II");
	CHECK(pauli_label(1) == "IX");
	CHECK(pauli_label(4) == "XI");
	CHECK(pauli_label(15) == "ZZ");
	CHECK_THROWS_AS(pauli_index("QQ"), std::invalid_argument);
	CHECK_THROWS_AS(pauli_index("X"), std::invalid_argument);
}

TEST_CASE("pauli_expectations of the Bell state") {
	const PauliVector pv = pauli_expectations(bell_phi_plus());
	CHECK(pv.at("II") == doctest::Approx(1.0));
	CHECK(pv.at("XX") == doctest::Approx(1.0));
	CHECK(pv.at("YY") == doctest::Approx(-1.0));
	CHECK(pv.at("ZZ") == doctest::Approx(1.0));
	CHECK(std::abs(pv.at("XI")) < 1e-12);
	CHECK(std::abs(pv.at("IZ")) < 1e-12);
}

TEST_CASE("state_from_pauli inverts pauli_expectations") {
	const Mat4 rho = bell_phi_plus();
	const Mat4 back = state_from_pauli(pauli_expectations(rho));
	CHECK((back - rho).norm() < 1e-12);
}

TEST_CASE("state_from_pauli demands unit trace component") {
	PauliVector pv;
	pv[0] = 0.5;
	CHECK_THROWS_AS(state_from_pauli(pv), std::invalid_argument);
}

TEST_CASE("expectations are Tr(rho sigma_k) for a generic Hermitian input") {
	Mat4 rho = Mat4::Zero();
	rho(0, 0) = 0.4;
	rho(1, 1) = 0.3;
	rho(2, 2) = 0.2;
	rho(3, 3) = 0.1;
	rho(0, 3) = Complex(0.05, 0.02);
	rho(3, 0) = std::conj(rho(0, 3));
	const PauliVector pv = pauli_expectations(rho);
	for (int k = 0; k < 16; ++k) {
		const Complex tr = (rho * pauli_operator(k)).trace();
		CHECK(std::abs(tr.imag()) < 1e-14);
		CHECK(pv[k] == doctest::Approx(tr.real()));
	}
}
