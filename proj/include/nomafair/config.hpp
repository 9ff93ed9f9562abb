#pragma once

#include <filesystem>
#include <istream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "nomafair/sim.hpp"

namespace nomafair {

struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parses the flat key=value config format ('#' starts a comment, blank
/// lines ignored). Unknown keys and malformed values raise ConfigError
/// naming the key. Recognized keys: cell_radius_m, min_distance_m,
/// n_subcarriers, users_per_subcarrier, noise_dbm, p0_dbm, fading, trials,
/// seed.
SimConfig parse_sim_config(std::istream& in);

/// parse_sim_config() on a file; raises ConfigError if unreadable.
SimConfig load_sim_config(const std::filesystem::path& path);

/// The config as ordered key/value text pairs, round-trippable through
/// parse_sim_config(); used for manifests.
std::vector<std::pair<std::string, std::string>> config_echo(const SimConfig& cfg);

}  // namespace nomafair
