#include "doctest.h"

#include "measurement/closed_form.hpp"

#include <cmath>
#include <stdexcept>

using namespace dsim::measurement;

TEST_CASE("fringe component identities hold at machine precision") {
	ModelParams p;
	const double lambdas[] = {0.05, 0.3, 0.6, 1.0, 1.3, 6.0};
	for (double lam : lambdas) {
		const double s = std::sqrt(2.0 * lam);
		const double c = contrast(lam, p);
		for (double im : {-2.1, -0.4, 0.0, 0.9, 2.6}) {
			for (double qm : {-1.7, 0.0, 0.8, 2.2}) {
				const FringeComponents f = conditional_pauli_closed_form(lam, {im, qm}, p);
				const double bigI = s * im / p.sigma_m;
				const double bigQ = s * qm / p.sigma_m;
				const double qbar = s * p.q_bar / p.sigma_m;
				const double th_minus = qbar + (p.xi_a - p.xi_b) * lam;
				const double th_plus = (p.xi_a + p.xi_b) * lam;
				const double d = std::exp(-lam) * std::cosh(bigI) + 1.0;
				CHECK(f.xx + f.yy ==
				      doctest::Approx(2.0 * c * std::cos(bigQ - th_minus) / d).epsilon(1e-12));
				CHECK(f.yy - f.xx ==
				      doctest::Approx(2.0 * c * std::exp(-lam) * std::cos(th_plus) / d).epsilon(1e-12));
				CHECK(f.xy + f.yx ==
				      doctest::Approx(2.0 * c * std::exp(-lam) * std::sin(th_plus) / d).epsilon(1e-12));
				CHECK(f.yx - f.xy ==
				      doctest::Approx(2.0 * c * std::sin(bigQ - th_minus) / d).epsilon(1e-12));
				CHECK(f.zz ==
				      doctest::Approx(p.c_tomo * (std::exp(-lam) * std::cosh(bigI) - 1.0) / d)
				          .epsilon(1e-12));
			}
		}
	}
}

TEST_CASE("zero strength: no which-path information, full fringe") {
	ModelParams p;
	const FringeComponents f = conditional_pauli_closed_form(0.0, {0.3, 0.0}, p);
	CHECK(f.zz == doctest::Approx(0.0).epsilon(1e-14));
	const double c = contrast(0.0, p);
	CHECK(f.xx == doctest::Approx(0.0).epsilon(1e-14)); // cos(Q) - cos(Q) at lambda = 0
	CHECK(f.yy == doctest::Approx(c));
	CHECK(f.xy == doctest::Approx(0.0).epsilon(1e-14));
	CHECK(f.yx == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("q_bar shifts the fringe phase") {
	ModelParams p;
	p.q_bar = 0.9;
	const double lam = 0.6;
	// Evaluating at q_m = q_bar must reproduce the q_bar = 0 fringe at q_m = 0.
	ModelParams p0;
	const FringeComponents shifted = conditional_pauli_closed_form(lam, {0.4, 0.9}, p);
	const FringeComponents centered = conditional_pauli_closed_form(lam, {0.4, 0.0}, p0);
	CHECK(shifted.xx == doctest::Approx(centered.xx).epsilon(1e-12));
	CHECK(shifted.yy == doctest::Approx(centered.yy).epsilon(1e-12));
	CHECK(shifted.xy == doctest::Approx(centered.xy).epsilon(1e-12));
	CHECK(shifted.yx == doctest::Approx(centered.yx).epsilon(1e-12));
}

TEST_CASE("large |i_m| saturates ZZ toward the tomography contrast without overflow") {
	ModelParams p;
	const FringeComponents far_pos = conditional_pauli_closed_form(6.0, {40.0, 0.0}, p);
	const FringeComponents far_neg = conditional_pauli_closed_form(6.0, {-40.0, 0.0}, p);
	CHECK(std::isfinite(far_pos.zz));
	CHECK(far_pos.zz == doctest::Approx(p.c_tomo).epsilon(1e-6));
	CHECK(far_neg.zz == doctest::Approx(p.c_tomo).epsilon(1e-6));
	CHECK(std::abs(far_pos.xx) < 1e-10); // fringes wash out at large |I|
	CHECK(std::abs(far_pos.yy) < 1e-10);
}

TEST_CASE("all components stay in [-1, 1] over a broad outcome grid") {
	ModelParams p;
	for (double lam : {0.0, 0.3, 1.3, 6.0, 20.0}) {
		for (int a = 0; a <= 12; ++a) {
			for (int b = 0; b <= 12; ++b) {
				const double im = -6.0 + a;
				const double qm = -6.0 + b;
				const FringeComponents f = conditional_pauli_closed_form(lam, {im, qm}, p);
				for (double v : {f.xx, f.yy, f.xy, f.yx, f.zz}) {
					CHECK(std::abs(v) <= 1.0 + 1e-12);
					CHECK(std::isfinite(v));
				}
			}
		}
	}
}

TEST_CASE("negative strength is rejected") {
	ModelParams p;
	CHECK_THROWS_AS(conditional_pauli_closed_form(-1e-9, {0.0, 0.0}, p), std::invalid_argument);
}
