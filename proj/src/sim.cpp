#include "nomafair/sim.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>
#include <utility>

namespace nomafair {

const char* fading_name(FadingMode m) {
    return m == FadingMode::kRayleigh ? "rayleigh" : "none";
}

double dbm_to_mw(double dbm) { return std::pow(10.0, dbm / 10.0); }

double SimConfig::p0_mw() const { return dbm_to_mw(p0_dbm); }
double SimConfig::noise_mw() const { return dbm_to_mw(noise_dbm); }

void SimConfig::validate() const {
    if (!(min_distance_m > 0.0))
        throw std::invalid_argument("min_distance_m must be positive");
    if (!(cell_radius_m > min_distance_m))
        throw std::invalid_argument("cell_radius_m must exceed min_distance_m");
    if (n_subcarriers < 1)
        throw std::invalid_argument("n_subcarriers must be at least 1");
    if (users_per_subcarrier != 2)
        throw std::invalid_argument("users_per_subcarrier must be 2");
    if (!std::isfinite(noise_dbm) || !std::isfinite(p0_dbm))
        throw std::invalid_argument("p0_dbm and noise_dbm must be finite");
    if (trials && *trials < 1)
        throw std::invalid_argument("trials must be at least 1");
}

double Position::distance() const { return std::hypot(x, y); }

double path_loss_db(double distance_m, double min_distance_m) {
    if (!(distance_m >= min_distance_m))
        throw std::invalid_argument("path_loss_db: distance below the minimum drop distance");
    return 128.1 + 37.6 * std::log10(distance_m / 1000.0);
}

double channel_gain(double distance_m, FadingMode fading, Rng& rng, double min_distance_m) {
    double gain = std::pow(10.0, -path_loss_db(distance_m, min_distance_m) / 10.0);
    if (fading == FadingMode::kRayleigh) {
        // next_exponential() can return an exact 0 once per 2^53 draws;
        // channels require strictly positive gains.
        double f;
        do {
            f = rng.next_exponential();
        } while (!(f > 0.0));
        gain *= f;
    }
    return gain;
}

double random_distance(const SimConfig& cfg, Rng& rng) {
    const double r0sq = cfg.min_distance_m * cfg.min_distance_m;
    const double rsq = cfg.cell_radius_m * cfg.cell_radius_m;
    return std::sqrt(rng.next_double() * (rsq - r0sq) + r0sq);
}

std::vector<Position> drop_users(const SimConfig& cfg, Rng& rng) {
    std::vector<Position> positions(cfg.n_users());
    for (auto& p : positions) {
        const double r = random_distance(cfg, rng);
        const double theta = 2.0 * M_PI * rng.next_double();
        p = {r * std::cos(theta), r * std::sin(theta)};
    }
    return positions;
}

NetworkDrop random_pairing(const std::vector<Position>& positions, const SimConfig& cfg,
                           Rng& rng) {
    if (positions.size() % 2 != 0)
        throw std::invalid_argument("random_pairing: user count must be even");
    if (positions.size() != cfg.n_users())
        throw std::invalid_argument("random_pairing: expected 2 * n_subcarriers users");

    NetworkDrop drop;
    drop.positions = positions;

    std::vector<double> gains(positions.size());
    for (std::size_t i = 0; i < positions.size(); ++i)
        gains[i] = channel_gain(positions[i].distance(), cfg.fading, rng, cfg.min_distance_m);

    // Fisher-Yates; consecutive entries of the shuffled order form a pair.
    std::vector<std::size_t> perm(positions.size());
    std::iota(perm.begin(), perm.end(), std::size_t{0});
    for (std::size_t i = perm.size() - 1; i > 0; --i)
        std::swap(perm[i], perm[rng.next_below(i + 1)]);

    const double p0 = cfg.p0_mw();
    const double noise = cfg.noise_mw();
    drop.subcarriers.reserve(cfg.n_subcarriers);
    drop.pairing.reserve(cfg.n_subcarriers);
    for (std::size_t s = 0; s < cfg.n_subcarriers; ++s) {
        const std::size_t ua = perm[2 * s];
        const std::size_t ub = perm[2 * s + 1];
        drop.pairing.push_back({ua, ub});
        drop.subcarriers.emplace_back(std::vector<double>{gains[ua], gains[ub]}, p0, noise);
    }
    return drop;
}

}  // namespace nomafair
