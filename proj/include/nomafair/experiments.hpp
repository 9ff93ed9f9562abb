#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "nomafair/channel.hpp"
#include "nomafair/sim.hpp"

namespace nomafair {

inline constexpr std::uint64_t kDefaultSweepTrials = 10000;
inline constexpr std::uint64_t kDefaultDistributionDrops = 100;

/// Jain-index differences at or below this are treated as ties and left out
/// of metric-vs-simulation agreement counts.
inline constexpr double kJainTieTol = 1e-9;

struct SweepPoint {
    double p0_dbm = 0.0;
    double prob_metric = 0.0;       // Pr{ gain ratio <= beta/(1-beta) }
    double prob_metric_hsnr = 0.0;  // same with the high-SNR beta
    double prob_actual = 0.0;       // Pr{ J_NOMA >= J_OMA }
    std::uint64_t n_trials = 0;
    std::uint64_t n_ties = 0;
    std::uint64_t n_disagree = 0;   // metric verdict vs Jain comparison, ties excluded
};

struct SweepResult {
    std::vector<SweepPoint> points;
};

/// Pooled per-user rate statistics of one scheme.
struct RateDistribution {
    std::vector<double> samples;  // drop-major order, one entry per user
    double jain = 0.0;
    double p10 = 0.0;
    std::vector<double> bin_edges;  // uniform over [0, max sample]
    std::vector<double> bin_mass;   // sums to 1
};

struct DistributionResult {
    RateDistribution noma;
    RateDistribution oma;
    RateDistribution hybrid;
    double noma_selection_fraction = 0.0;
    std::uint64_t n_drops = 0;
};

/// Applies the fairness threshold to one pair: NOMA rates when the gain
/// ratio is strictly below beta/(1-beta), OMA rates otherwise (ties go to
/// OMA). The returned allocation is tagged with the chosen scheme.
RateAllocation hybrid_select(const UserChannels& pair);

/// Draws cfg.trials independent user pairs per grid point (fresh positions
/// and fading each time) and records how often the threshold test, its
/// high-SNR variant, and the direct Jain comparison each favor NOMA.
/// Trials use per-index RNG streams, so any thread count yields the same
/// result bit for bit.
SweepResult run_fairness_sweep(const SimConfig& cfg, std::span<const double> p0_grid_dbm,
                               unsigned threads = 1);

/// Runs cfg.trials network drops and pools every user rate under pure
/// NOMA, pure OMA, and the adaptive hybrid, with Jain's index, the 10th
/// percentile, and a 100-bin histogram per scheme.
DistributionResult run_distribution(const SimConfig& cfg, unsigned threads = 1);

/// Linear-interpolated empirical quantile, q in [0, 1].
double percentile(std::span<const double> samples, double q);

}  // namespace nomafair
