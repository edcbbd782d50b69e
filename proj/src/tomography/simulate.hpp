#pragma once

#include "common/rng.hpp"
#include "tomography/settings.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace dsim::tomography {

/// Counts over the four two-bit outcomes (gg, ge, eg, ee; index 2a+b) for
/// each of the 9 settings.
struct CountsTable {
	std::array<std::array<std::uint64_t, 4>, kSettings> counts{};

	std::uint64_t setting_shots(int s) const;
	std::uint64_t total() const;
};

/// One recorded shot, kept for bootstrap resampling.
struct ShotRecord {
	std::uint8_t setting = 0;
	std::uint8_t outcome = 0;
};

CountsTable counts_from_records(const std::vector<ShotRecord>& records);

/// Simulate `shots` tomography shots of rho: shots are split evenly across
/// the 9 settings (remainder to the lowest setting indices); each shot
/// rotates by the setting, samples the Z(x)Z-basis diagonal, and passes the
/// outcome through independent symmetric per-qubit readout flips with
/// probability (1 - c_tomo)/2. Throws on c_tomo outside [0,1] or shots == 0.
std::vector<ShotRecord> simulate_tomography_records(const quantum::Mat4& rho, std::uint64_t shots,
                                                    double c_tomo, RngStream& rng);

/// Convenience wrapper returning the counts only.
CountsTable simulate_tomography(const quantum::Mat4& rho, std::uint64_t shots, double c_tomo,
                                std::uint64_t seed);

/// Outcome probabilities after readout error for one setting:
/// q = (F (x) F) diag(U rho U^dagger), F the symmetric flip matrix.
std::array<double, 4> outcome_probabilities(const quantum::Mat4& rho, const TomoSetting& s,
                                            double c_tomo);

} // namespace dsim::tomography
