#pragma once

#include "quantum/local_ops.hpp"
#include "quantum/pauli.hpp"

#include <array>

namespace dsim::tomography {

/// Pre-measurement rotation applied to one qubit.
enum class Rot : int { I = 0, X90 = 1, Y90 = 2 };

/// The 9 tomography settings in fixed lexicographic order
/// (I,I), (I,X90), (I,Y90), (X90,I), ... — index = 3*a + b.
struct TomoSetting {
	Rot rot_a = Rot::I;
	Rot rot_b = Rot::I;
};

inline constexpr int kSettings = 9;

TomoSetting setting_at(int index);
int setting_index(const TomoSetting& s);

quantum::Mat2 rotation_matrix(Rot r);

/// Single-qubit observable actually measured by rotating with r and then
/// reading Z: U^dagger Z U, decomposed as sign * sigma_axis. Computed
/// numerically from the rotation matrix (I -> +Z, X90 -> +Y, Y90 -> -X).
struct MeasuredAxis {
	int axis = 3;      // 1=X, 2=Y, 3=Z
	double sign = 1.0; // +-1
};
MeasuredAxis measured_axis(Rot r);

/// Two-qubit rotation U_a (x) U_b for a setting.
quantum::Mat4 setting_unitary(const TomoSetting& s);

} // namespace dsim::tomography
