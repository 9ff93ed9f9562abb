#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "nomafair/rates.hpp"
#include "nomafair/region.hpp"
#include "nomafair/rng.hpp"

using namespace nomafair;

namespace {

UserChannels random_pair(Rng& rng) {
    const double g1 = std::pow(10.0, 6.0 * rng.next_double() - 3.0);
    const double g2 = std::pow(10.0, 6.0 * rng.next_double() - 3.0);
    const double p0 = std::pow(10.0, 4.0 * rng.next_double());
    const double noise = std::pow(10.0, 2.0 * rng.next_double() - 1.0);
    return UserChannels({g1, g2}, p0, noise);
}

}  // namespace

TEST_CASE("noma_corners basics") {
    CHECK_THROWS_AS(noma_corners(UserChannels({1.0}, 1.0, 1.0)), std::invalid_argument);

    // Symmetric channel: the corners mirror each other across r1 = r2.
    const auto sym = noma_corners(UserChannels({1.0, 1.0}, 3.0, 1.0));
    CHECK(sym[0].label == "A");
    CHECK(sym[1].label == "B");
    CHECK(sym[0].pt.r1 == doctest::Approx(sym[1].pt.r2).epsilon(1e-14));
    CHECK(sym[0].pt.r2 == doctest::Approx(sym[1].pt.r1).epsilon(1e-14));

    // 18/28 dB at 20 dBm: both corners sum to the system sum rate.
    const UserChannels asym({std::pow(10.0, 1.8), std::pow(10.0, 2.8)}, 100.0, 1.0);
    const double csum = sum_rate(normalized_gains(asym));
    for (const auto& c : noma_corners(asym))
        CHECK(c.pt.r1 + c.pt.r2 == doctest::Approx(csum).epsilon(1e-12));

    // A vanishing weak user pushes both corners onto the r2 axis.
    const auto lim = noma_corners(UserChannels({1e-15, 1.0}, 1.0, 1.0));
    CHECK(lim[0].pt.r1 < 1e-12);
    CHECK(lim[1].pt.r1 < 1e-12);
    CHECK(lim[0].pt.r2 > 0.5);
}

TEST_CASE("noma_boundary polyline") {
    const UserChannels pair({0.5, 2.0}, 4.0, 1.0);
    const RegionBoundary b = noma_boundary(pair, 5);
    CHECK(b.scheme == Scheme::kNoma);
    CHECK(b.samples.size() == 7);  // axis point + 5 segment samples + axis point
    CHECK(b.samples.front().r1 == 0.0);
    CHECK(b.samples.back().r2 == 0.0);
    const double csum = sum_rate(normalized_gains(pair));
    for (std::size_t i = 1; i + 1 < b.samples.size(); ++i)
        CHECK(b.samples[i].r1 + b.samples[i].r2 == doctest::Approx(csum).epsilon(1e-12));
    for (std::size_t i = 1; i < b.samples.size(); ++i)
        CHECK(b.samples[i].r1 >= b.samples[i - 1].r1);
    CHECK_THROWS_AS(noma_boundary(pair, 1), std::invalid_argument);
}

TEST_CASE("oma_boundary endpoints and the optimal-share point") {
    const UserChannels pair({0.5, 2.0}, 4.0, 1.0);
    const RegionBoundary b = oma_boundary(pair, 11);
    CHECK(b.scheme == Scheme::kOma);
    CHECK(b.samples.size() == 11);

    const double c1 = log2_1p(pair.p0_mw() * pair.gains()[0] / pair.noise_mw());
    const double c2 = log2_1p(pair.p0_mw() * pair.gains()[1] / pair.noise_mw());
    CHECK(b.samples.front().r1 == 0.0);
    CHECK(b.samples.front().r2 == doctest::Approx(c2).epsilon(1e-12));
    CHECK(b.samples.back().r1 == doctest::Approx(c1).epsilon(1e-12));
    CHECK(b.samples.back().r2 == 0.0);

    // Corner C reproduces the optimal-DOF allocation and touches the
    // sum-rate face.
    const RateAllocation ro = oma_rates(pair);
    const RatePair c = b.corners[1].pt;
    CHECK(b.corners[1].label == "C");
    CHECK(c.r1 == doctest::Approx(ro.rates[0]).epsilon(1e-12));
    CHECK(c.r2 == doctest::Approx(ro.rates[1]).epsilon(1e-12));
    CHECK(c.r1 + c.r2 == doctest::Approx(ro.sum_rate).epsilon(1e-9));

    CHECK_THROWS_AS(oma_boundary(pair, 1), std::invalid_argument);
    CHECK_THROWS_AS(oma_boundary(UserChannels({1.0}, 1.0, 1.0), 5), std::invalid_argument);
}

TEST_CASE("region_contains basics") {
    const UserChannels pair({0.5, 2.0}, 4.0, 1.0);
    const RegionBoundary noma = noma_boundary(pair, 2);
    CHECK(region_contains(noma, {0.0, 0.0}));
    for (const auto& c : noma.corners) CHECK(region_contains(noma, c.pt));
    for (const auto& c : noma.corners)
        CHECK_FALSE(region_contains(noma, {c.pt.r1 * 1.01, c.pt.r2 * 1.01}));
    CHECK_THROWS_AS(region_contains(oma_boundary(pair, 4), {0.0, 0.0}),
                    std::invalid_argument);
}

TEST_CASE("the OMA region is contained in the NOMA region") {
    Rng rng(31);
    for (int it = 0; it < 1000; ++it) {
        const UserChannels pair = random_pair(rng);
        const RegionBoundary noma = noma_boundary(pair, 2);
        const RegionBoundary oma = oma_boundary(pair, 100);
        for (const RatePair& p : oma.samples) CHECK(region_contains(noma, p));
        for (const CornerPoint& c : oma.corners) CHECK(region_contains(noma, c.pt));
    }
}
