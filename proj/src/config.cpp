#include "nomafair/config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "nomafair/io.hpp"

namespace nomafair {

namespace {

std::string trim(std::string_view s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string_view::npos) return {};
    const auto end = s.find_last_not_of(" \t\r");
    return std::string(s.substr(begin, end - begin + 1));
}

double parse_double(const std::string& key, const std::string& value) {
    try {
        std::size_t used = 0;
        const double v = std::stod(value, &used);
        if (used != value.size()) throw std::invalid_argument(value);
        return v;
    } catch (const std::exception&) {
        throw ConfigError("config key '" + key + "': expected a number, got '" + value + "'");
    }
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), v);
    if (ec != std::errc{} || ptr != value.data() + value.size())
        throw ConfigError("config key '" + key + "': expected an unsigned integer, got '" +
                          value + "'");
    return v;
}

}  // namespace

SimConfig parse_sim_config(std::istream& in) {
    SimConfig cfg;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        const std::string stripped = trim(line);
        if (stripped.empty()) continue;

        const auto eq = stripped.find('=');
        if (eq == std::string::npos)
            throw ConfigError("config line " + std::to_string(lineno) +
                              ": expected key=value, got '" + stripped + "'");
        const std::string key = trim(stripped.substr(0, eq));
        const std::string value = trim(stripped.substr(eq + 1));
        if (key.empty())
            throw ConfigError("config line " + std::to_string(lineno) + ": empty key");

        if (key == "cell_radius_m")
            cfg.cell_radius_m = parse_double(key, value);
        else if (key == "min_distance_m")
            cfg.min_distance_m = parse_double(key, value);
        else if (key == "n_subcarriers")
            cfg.n_subcarriers = static_cast<std::size_t>(parse_u64(key, value));
        else if (key == "users_per_subcarrier")
            cfg.users_per_subcarrier = static_cast<std::size_t>(parse_u64(key, value));
        else if (key == "noise_dbm")
            cfg.noise_dbm = parse_double(key, value);
        else if (key == "p0_dbm")
            cfg.p0_dbm = parse_double(key, value);
        else if (key == "fading") {
            if (value == "rayleigh")
                cfg.fading = FadingMode::kRayleigh;
            else if (value == "none")
                cfg.fading = FadingMode::kNone;
            else
                throw ConfigError("config key 'fading': expected rayleigh or none, got '" +
                                  value + "'");
        } else if (key == "trials")
            cfg.trials = parse_u64(key, value);
        else if (key == "seed")
            cfg.seed = parse_u64(key, value);
        else
            throw ConfigError("unknown config key '" + key + "'");
    }
    try {
        cfg.validate();
    } catch (const std::invalid_argument& e) {
        throw ConfigError(std::string("invalid config: ") + e.what());
    }
    return cfg;
}

SimConfig load_sim_config(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ConfigError("cannot read config file '" + path.string() + "'");
    return parse_sim_config(in);
}

std::vector<std::pair<std::string, std::string>> config_echo(const SimConfig& cfg) {
    std::vector<std::pair<std::string, std::string>> kv;
    kv.emplace_back("cell_radius_m", format_num(cfg.cell_radius_m));
    kv.emplace_back("min_distance_m", format_num(cfg.min_distance_m));
    kv.emplace_back("n_subcarriers", std::to_string(cfg.n_subcarriers));
    kv.emplace_back("users_per_subcarrier", std::to_string(cfg.users_per_subcarrier));
    kv.emplace_back("noise_dbm", format_num(cfg.noise_dbm));
    kv.emplace_back("p0_dbm", format_num(cfg.p0_dbm));
    kv.emplace_back("fading", fading_name(cfg.fading));
    if (cfg.trials) kv.emplace_back("trials", std::to_string(*cfg.trials));
    kv.emplace_back("seed", std::to_string(cfg.seed));
    return kv;
}

}  // namespace nomafair
