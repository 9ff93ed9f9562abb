#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "nomafair/channel.hpp"
#include "nomafair/rng.hpp"

namespace nomafair {

enum class FadingMode { kRayleigh, kNone };

const char* fading_name(FadingMode m);

/// Scenario parameters for the cellular Monte Carlo runs. Powers are dBm on
/// this surface and converted to linear milliwatts at the point of use.
struct SimConfig {
    double cell_radius_m = 400.0;
    double min_distance_m = 35.0;
    std::size_t n_subcarriers = 128;
    std::size_t users_per_subcarrier = 2;  // the pairing logic requires 2
    double noise_dbm = -90.0;
    double p0_dbm = 48.0;
    FadingMode fading = FadingMode::kRayleigh;
    /// Pairs per sweep point, or network drops for the distribution run;
    /// each experiment substitutes its default when unset.
    std::optional<std::uint64_t> trials;
    std::uint64_t seed = 1;

    double p0_mw() const;
    double noise_mw() const;
    std::size_t n_users() const { return 2 * n_subcarriers; }

    /// Throws std::invalid_argument naming the offending field.
    void validate() const;
};

struct Position {
    double x = 0.0;
    double y = 0.0;
    double distance() const;
};

/// One random network realization: every user placed and paired, with the
/// per-subcarrier two-user channel built from the configured powers.
struct NetworkDrop {
    std::vector<UserChannels> subcarriers;
    std::vector<Position> positions;
    std::vector<std::array<std::size_t, 2>> pairing;  // user ids per subcarrier
};

double dbm_to_mw(double dbm);

/// Urban-macro path loss 128.1 + 37.6 log10(d / 1 km) in dB. Distances
/// below the minimum drop distance are rejected.
double path_loss_db(double distance_m, double min_distance_m = 35.0);

/// Linear channel power gain at the given distance: 10^(-PL/10) scaled by a
/// unit-mean Rayleigh fading power when fading is enabled.
double channel_gain(double distance_m, FadingMode fading, Rng& rng,
                    double min_distance_m = 35.0);

/// One distance drawn uniform by area over the annulus between the minimum
/// drop distance and the cell radius: r = sqrt(u (R^2 - r0^2) + r0^2).
double random_distance(const SimConfig& cfg, Rng& rng);

/// 2 * n_subcarriers user positions, uniform by area over the annulus
/// between the minimum drop distance and the cell radius.
std::vector<Position> drop_users(const SimConfig& cfg, Rng& rng);

/// Uniformly random pairing of the users onto subcarriers; consecutive
/// entries of the shuffled order share a subcarrier.
NetworkDrop random_pairing(const std::vector<Position>& positions, const SimConfig& cfg,
                           Rng& rng);

}  // namespace nomafair
