#pragma once

#include "measurement/sampler.hpp"
#include "quantum/pauli.hpp"

#include <optional>
#include <vector>

namespace dsim::analysis {

struct XiPair {
	double xi_a = 0.0; // radians per unit Q
	double xi_b = 0.0;
};

/// Reconstructed conditional states over the outcome grid. Bins without a
/// reconstruction carry no state; `weight` is the empirical bin probability
/// over the reconstructed bins (sums to 1 when any state exists).
struct ConditionalGrid {
	measurement::BinSpec spec;
	std::vector<double> weight;                    // flat, I-major
	std::vector<std::optional<quantum::Mat4>> states;

	int bins() const { return spec.bins(); }
	void normalize_weights();
};

/// U_Xi(q) rho U_Xi(q)^dagger with U_Xi(q) = e^{i Z xi_a q} (x) e^{i Z xi_b q}
/// (diagonal phases; spectrum preserved).
quantum::Mat4 rotate_by_xi(const quantum::Mat4& rho, double q_m, const XiPair& xi);

/// Per-I-column marginal: the P(Q|I)-weighted average of Xi-rotated bin
/// states. Columns with zero total weight are skipped.
struct MarginalColumn {
	int i_index = 0;
	double i_center = 0.0;
	double weight = 0.0; // P(I), normalized over reconstructed bins
	quantum::Mat4 rho;
};
std::vector<MarginalColumn> marginalize(const ConditionalGrid& grid, const XiPair& xi);

/// gamma_Xi = sum_I P(I) Tr[(rho_M(I))^2], in [1/4, 1].
double purity_objective(const ConditionalGrid& grid, const XiPair& xi);

/// argmax of gamma over a coarse grid (xi in [-3,3]^2, step 0.05) with
/// simplex refinement. When the objective is flat (no fringes), `flat` is
/// set and xi falls back to (0,0).
struct XiOptimum {
	XiPair xi;
	double gamma = 0.0;
	bool flat = false;
};
XiOptimum optimize_xi(const ConditionalGrid& grid, double span = 3.0, double step = 0.05);

/// Warm-start local refinement (no coarse scan); used by bootstrap
/// resamples, which re-optimize from the base dataset's optimum.
XiOptimum refine_xi(const ConditionalGrid& grid, const XiPair& start, double step = 0.05);

/// r = 1 - gamma_XiOpt / gamma_Avg with
/// gamma_Avg = sum_{I,Q} P(I,Q) Tr[rho(I,Q)^2] (no marginalization).
double purity_reduction(const ConditionalGrid& grid, const XiPair& xi_opt);

/// gamma_Avg alone (diagnostic).
double average_bin_purity(const ConditionalGrid& grid);

} // namespace dsim::analysis
