#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "nomafair/channel.hpp"

namespace nomafair {

/// A point in the two-user rate plane; r1 is the weak user (smaller gain).
struct RatePair {
    double r1 = 0.0;
    double r2 = 0.0;
};

struct CornerPoint {
    std::string label;
    RatePair pt;
};

/// Sampled upper boundary of a two-user rate region with its labeled
/// corner points. Samples are ordered with r1 increasing.
struct RegionBoundary {
    Scheme scheme = Scheme::kNoma;
    std::vector<CornerPoint> corners;
    std::vector<RatePair> samples;
};

/// The two SIC corner points of the NOMA region, both summing to
/// log2(1 + Gamma). Corner A decodes the strong user first so the weak
/// user is interference-free (the operating point of the plain NOMA
/// scheme); corner B is the reverse decoding order.
std::array<CornerPoint, 2> noma_corners(const UserChannels& pair);

/// Pentagon boundary of the NOMA region: the axis drop points, corner B,
/// `segment_samples` points along the sum-rate face from B to A (endpoints
/// included), and corner A.
RegionBoundary noma_boundary(const UserChannels& pair, std::size_t segment_samples = 2);

/// Time-sharing OMA boundary sampled at n_samples uniform time fractions
/// t in [0, 1], user 1 active for t with its full power budget compressed
/// into that fraction: r1 = t log2(1 + P0 g1 / (t sigma^2)) and
/// symmetrically for user 2. Corners list the single-user endpoints and
/// the optimal-share point C at t = alpha1, which attains the NOMA sum
/// rate.
RegionBoundary oma_boundary(const UserChannels& pair, std::size_t n_samples);

/// True iff pt lies weakly inside the NOMA pentagon (tolerance in rate
/// units applied to every face).
bool region_contains(const RegionBoundary& noma, const RatePair& pt, double tol = 1e-9);

}  // namespace nomafair
