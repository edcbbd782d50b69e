#include "tomography/settings.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dsim::tomography {

using quantum::Mat2;
using quantum::Mat4;

TomoSetting setting_at(int index) {
	if (index < 0 || index >= kSettings) throw std::invalid_argument("setting index out of range");
	return {static_cast<Rot>(index / 3), static_cast<Rot>(index % 3)};
}

int setting_index(const TomoSetting& s) {
	return 3 * static_cast<int>(s.rot_a) + static_cast<int>(s.rot_b);
}

Mat2 rotation_matrix(Rot r) {
	switch (r) {
	case Rot::I: return Mat2::Identity();
	case Rot::X90: return quantum::rotation(1, std::numbers::pi / 2.0);
	case Rot::Y90: return quantum::rotation(2, std::numbers::pi / 2.0);
	}
	throw std::invalid_argument("bad rotation");
}

MeasuredAxis measured_axis(Rot r) {
	const Mat2 u = rotation_matrix(r);
	const Mat2 m = u.adjoint() * quantum::sigma(3) * u;
	// m is +-sigma_k for exactly one k; find it by Pauli projection.
	for (int k = 1; k <= 3; ++k) {
		const double c = (m * quantum::sigma(k)).trace().real() / 2.0;
		if (std::abs(std::abs(c) - 1.0) < 1e-12) return {k, c > 0 ? 1.0 : -1.0};
	}
	throw std::logic_error("rotation does not map Z onto a Pauli axis");
}

Mat4 setting_unitary(const TomoSetting& s) {
	return quantum::kron(rotation_matrix(s.rot_a), rotation_matrix(s.rot_b));
}

} // namespace dsim::tomography
