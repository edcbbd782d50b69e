#pragma once

#include "quantum/pauli.hpp"
#include "tomography/simulate.hpp"

namespace dsim::tomography {

/// Linear (inversion) estimate of the 16 Pauli expectations from counts.
///
/// Per setting, empirical outcome frequencies are corrected for readout
/// error by inverting the per-qubit flip matrix, then mapped to parities of
/// the measured axes. Each single-qubit expectation is the average of the 3
/// settings that measure it; two-qubit terms come from their unique setting.
/// Unbiased as shots -> infinity but NOT guaranteed to correspond to a
/// positive semidefinite matrix.
quantum::PauliVector linear_estimate(const CountsTable& counts, double c_tomo);

} // namespace dsim::tomography
