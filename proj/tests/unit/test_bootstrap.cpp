#include "doctest.h"

#include "analysis/bootstrap.hpp"

#include <algorithm>
#include <stdexcept>

using namespace dsim;
using namespace dsim::analysis;
using namespace dsim::tomography;

TEST_CASE("resampling keeps the size and draws only existing records") {
	std::vector<ShotRecord> records;
	for (int k = 0; k < 40; ++k)
		records.push_back(ShotRecord{static_cast<std::uint8_t>(k % 9), static_cast<std::uint8_t>(k % 4)});
	RngStream rng = SplitRng(5).stream(7);
	const auto res = resample_records(records, rng);
	REQUIRE(res.size() == records.size());
	for (const ShotRecord& r : res) {
		const bool member = std::any_of(records.begin(), records.end(), [&](const ShotRecord& o) {
			return o.setting == r.setting && o.outcome == r.outcome;
		});
		CHECK(member);
	}
	// With replacement: 40 draws from 40 records almost surely repeat one.
	std::vector<int> tally(40, 0);
	RngStream rng2 = SplitRng(5).stream(7);
	for (std::size_t k = 0; k < records.size(); ++k) tally[rng2.next_below(40)]++;
	CHECK(*std::max_element(tally.begin(), tally.end()) >= 2);
}

TEST_CASE("resampling is deterministic in the stream") {
	std::vector<ShotRecord> records(100, ShotRecord{0, 0});
	for (std::size_t k = 0; k < records.size(); ++k)
		records[k].outcome = static_cast<std::uint8_t>(k % 4);
	RngStream a = SplitRng(9).stream(1, 2);
	RngStream b = SplitRng(9).stream(1, 2);
	const auto ra = resample_records(records, a);
	const auto rb = resample_records(records, b);
	bool same = true;
	for (std::size_t k = 0; k < ra.size(); ++k) same = same && ra[k].outcome == rb[k].outcome;
	CHECK(same);
}

TEST_CASE("percentile_band interpolates order statistics linearly") {
	// Sorted sample {1..10}: pos = q/100 * 9; the 2.5th percentile sits at
	// pos 0.225 -> 1 + 0.225, the 97.5th at pos 8.775 -> 9 + 0.775.
	std::vector<double> v = {10, 1, 9, 2, 8, 3, 7, 4, 6, 5};
	const PercentileBand band = percentile_band(v, 95.0);
	CHECK(band.lo == doctest::Approx(1.225));
	CHECK(band.hi == doctest::Approx(9.775));

	const PercentileBand band80 = percentile_band(v, 80.0);
	CHECK(band80.lo == doctest::Approx(1.9));  // pos 0.9
	CHECK(band80.hi == doctest::Approx(9.1));  // pos 8.1
}

TEST_CASE("percentile_band handles tiny and constant samples") {
	const PercentileBand single = percentile_band({3.25}, 95.0);
	CHECK(single.lo == doctest::Approx(3.25));
	CHECK(single.hi == doctest::Approx(3.25));
	const PercentileBand constant = percentile_band({2.0, 2.0, 2.0, 2.0}, 95.0);
	CHECK(constant.lo == doctest::Approx(2.0));
	CHECK(constant.hi == doctest::Approx(2.0));
	CHECK_THROWS_AS(percentile_band({}, 95.0), std::invalid_argument);
	CHECK_THROWS_AS(percentile_band({1.0, 2.0}, 100.0), std::invalid_argument);
	CHECK_THROWS_AS(percentile_band({1.0, 2.0}, 50.0), std::invalid_argument);
}

TEST_CASE("BootstrapConfig validation") {
	BootstrapConfig cfg;
	CHECK_NOTHROW(cfg.validate());
	BootstrapConfig bad = cfg;
	bad.n_resamples = 0;
	CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
	bad = cfg;
	bad.percentile = 100.0;
	CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
	bad = cfg;
	bad.percentile = 42.0;
	CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
}
