#include "nomafair/region.hpp"

#include <cmath>
#include <stdexcept>

#include "nomafair/rates.hpp"

namespace nomafair {

namespace {

struct TwoUserRates {
    double c1;    // single-user rate of the weak user
    double c2;    // single-user rate of the strong user
    double csum;  // log2(1 + Gamma)
};

TwoUserRates single_user_rates(const UserChannels& pair, const char* who) {
    if (pair.size() != 2)
        throw std::invalid_argument(std::string(who) + ": exactly two users required");
    const double p0 = pair.p0_mw();
    const double noise = pair.noise_mw();
    const double g1 = pair.gains()[0];
    const double g2 = pair.gains()[1];
    return {log2_1p(p0 * g1 / noise), log2_1p(p0 * g2 / noise),
            log2_1p(p0 * (g1 + g2) / noise)};
}

}  // namespace

std::array<CornerPoint, 2> noma_corners(const UserChannels& pair) {
    const TwoUserRates r = single_user_rates(pair, "noma_corners");
    return {CornerPoint{"A", {r.c1, r.csum - r.c1}},
            CornerPoint{"B", {r.csum - r.c2, r.c2}}};
}

RegionBoundary noma_boundary(const UserChannels& pair, std::size_t segment_samples) {
    if (segment_samples < 2)
        throw std::invalid_argument("noma_boundary: need at least 2 segment samples");
    const TwoUserRates r = single_user_rates(pair, "noma_boundary");
    const auto corners = noma_corners(pair);
    const RatePair a = corners[0].pt;
    const RatePair b = corners[1].pt;

    RegionBoundary out;
    out.scheme = Scheme::kNoma;
    out.corners.assign(corners.begin(), corners.end());
    out.samples.push_back({0.0, r.c2});
    for (std::size_t i = 0; i < segment_samples; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(segment_samples - 1);
        out.samples.push_back({b.r1 + t * (a.r1 - b.r1), b.r2 + t * (a.r2 - b.r2)});
    }
    out.samples.push_back({r.c1, 0.0});
    return out;
}

RegionBoundary oma_boundary(const UserChannels& pair, std::size_t n_samples) {
    if (n_samples < 2)
        throw std::invalid_argument("oma_boundary: need at least 2 samples");
    const TwoUserRates r = single_user_rates(pair, "oma_boundary");
    const double p0 = pair.p0_mw();
    const double noise = pair.noise_mw();
    const double g1 = pair.gains()[0];
    const double g2 = pair.gains()[1];

    const auto at = [&](double t) -> RatePair {
        const double r1 = t > 0.0 ? t * log2_1p(p0 * g1 / (t * noise)) : 0.0;
        const double u = 1.0 - t;
        const double r2 = u > 0.0 ? u * log2_1p(p0 * g2 / (u * noise)) : 0.0;
        return {r1, r2};
    };

    RegionBoundary out;
    out.scheme = Scheme::kOma;
    const double alpha1 = g1 / (g1 + g2);
    out.corners = {CornerPoint{"U2", {0.0, r.c2}},
                   CornerPoint{"C", at(alpha1)},
                   CornerPoint{"U1", {r.c1, 0.0}}};
    out.samples.reserve(n_samples);
    for (std::size_t i = 0; i < n_samples; ++i) {
        const double t = static_cast<double>(i) / static_cast<double>(n_samples - 1);
        out.samples.push_back(at(t));
    }
    return out;
}

bool region_contains(const RegionBoundary& noma, const RatePair& pt, double tol) {
    if (noma.scheme != Scheme::kNoma || noma.corners.size() < 2)
        throw std::invalid_argument("region_contains: expected a NOMA boundary");
    const RatePair a = noma.corners[0].pt;
    const RatePair b = noma.corners[1].pt;
    const double c1 = a.r1;
    const double c2 = b.r2;
    const double csum = a.r1 + a.r2;
    return pt.r1 >= -tol && pt.r2 >= -tol && pt.r1 <= c1 + tol && pt.r2 <= c2 + tol &&
           pt.r1 + pt.r2 <= csum + tol;
}

}  // namespace nomafair
