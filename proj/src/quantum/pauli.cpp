#include "quantum/pauli.hpp"

#include <cmath>
#include <stdexcept>

namespace dsim::quantum {

namespace {
constexpr Complex kI{0.0, 1.0};
constexpr char kLetters[4] = {'I', 'X', 'Y', 'Z'};
} // namespace

Mat2 sigma(int k) {
	Mat2 m;
	switch (k) {
	case 0: m << 1, 0, 0, 1; break;
	case 1: m << 0, 1, 1, 0; break;
	case 2: m << 0, -kI, kI, 0; break;
	case 3: m << 1, 0, 0, -1; break;
	default: throw std::invalid_argument("pauli index out of range");
	}
	return m;
}

Mat4 kron(const Mat2& a, const Mat2& b) {
	Mat4 out;
	for (int i = 0; i < 2; ++i)
		for (int j = 0; j < 2; ++j)
			out.block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
	return out;
}

Mat4 pauli_operator(int k) {
	if (k < 0 || k > 15) throw std::invalid_argument("two-qubit pauli index out of range");
	return kron(sigma(k / 4), sigma(k % 4));
}

std::string pauli_label(int k) {
	if (k < 0 || k > 15) throw std::invalid_argument("two-qubit pauli index out of range");
	return std::string{kLetters[k / 4], kLetters[k % 4]};
}

int pauli_index(const std::string& label) {
	if (label.size() != 2) throw std::invalid_argument("bad pauli label: " + label);
	auto letter = [&](char c) {
		for (int i = 0; i < 4; ++i)
			if (kLetters[i] == c) return i;
		throw std::invalid_argument("bad pauli label: " + label);
	};
	return 4 * letter(label[0]) + letter(label[1]);
}

PauliVector pauli_expectations(const Mat4& rho) {
	PauliVector pv;
	for (int k = 0; k < 16; ++k)
		pv[k] = (rho * pauli_operator(k)).trace().real();
	return pv;
}

Mat4 state_from_pauli(const PauliVector& pv) {
	if (std::abs(pv[0] - 1.0) > 1e-12)
		throw std::invalid_argument("pauli vector must have unit identity component");
	Mat4 rho = Mat4::Zero();
	for (int k = 0; k < 16; ++k)
		rho += (pv[k] / 4.0) * pauli_operator(k);
	return rho;
}

} // namespace dsim::quantum
