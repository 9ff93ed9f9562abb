#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "nomafair/config.hpp"
#include "nomafair/experiments.hpp"
#include "nomafair/fairness.hpp"
#include "nomafair/io.hpp"
#include "nomafair/rates.hpp"
#include "nomafair/region.hpp"
#include "nomafair/sim.hpp"

namespace {

using nlohmann::ordered_json;
using namespace nomafair;

constexpr const char* kArtifact = "nomafair";
constexpr const char* kVersion = "0.1.0";

constexpr int kExitUsage = 2;
constexpr int kExitConfig = 3;
constexpr int kExitIo = 4;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::vector<double> parse_grid(const std::string& spec) {
    double start = 0, stop = 0, step = 0;
    const auto c1 = spec.find(':');
    const auto c2 = spec.find(':', c1 == std::string::npos ? c1 : c1 + 1);
    try {
        if (c1 == std::string::npos || c2 == std::string::npos) throw std::invalid_argument(spec);
        start = std::stod(spec.substr(0, c1));
        stop = std::stod(spec.substr(c1 + 1, c2 - c1 - 1));
        step = std::stod(spec.substr(c2 + 1));
    } catch (const std::exception&) {
        throw UsageError("--p0-grid expects start:stop:step, got '" + spec + "'");
    }
    if (!(step > 0.0) || stop < start)
        throw UsageError("--p0-grid needs step > 0 and stop >= start");
    const auto n = static_cast<std::size_t>(std::floor((stop - start) / step + 1e-9)) + 1;
    std::vector<double> grid(n);
    for (std::size_t i = 0; i < n; ++i) grid[i] = start + static_cast<double>(i) * step;
    return grid;
}

std::string utc_now() {
    const std::time_t now = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

// Collects emitted files so a failed run can remove its partial outputs,
// and records the checksums that go into the manifest.
class OutputTracker {
public:
    explicit OutputTracker(std::filesystem::path dir) : dir_(std::move(dir)) {}

    void emit(const std::string& name, const std::string& content) {
        write_text_file(dir_ / name, content);
        written_.push_back(dir_ / name);
        checksums_[name] = {{"bytes", content.size()}, {"fnv1a64", fnv1a64_hex(content)}};
    }

    void remove_all() {
        for (const auto& p : written_) {
            std::error_code ec;
            std::filesystem::remove(p, ec);
        }
    }

    const ordered_json& checksums() const { return checksums_; }

private:
    std::filesystem::path dir_;
    std::vector<std::filesystem::path> written_;
    ordered_json checksums_;
};

std::string boundary_csv(const RegionBoundary& b) {
    std::string csv = "r1_bps_hz,r2_bps_hz\n";
    for (const RatePair& p : b.samples)
        csv += format_num(p.r1) + "," + format_num(p.r2) + "\n";
    return csv;
}

std::string sweep_csv(const SweepResult& r) {
    std::string csv = "p0_dbm,prob_metric,prob_metric_hsnr,prob_actual,n_trials,n_ties\n";
    for (const SweepPoint& p : r.points) {
        csv += format_num(p.p0_dbm) + "," + format_num(p.prob_metric) + "," +
               format_num(p.prob_metric_hsnr) + "," + format_num(p.prob_actual) + "," +
               std::to_string(p.n_trials) + "," + std::to_string(p.n_ties) + "\n";
    }
    return csv;
}

std::string pdf_csv(const RateDistribution& d) {
    std::string csv = "bin_lo_bps_hz,bin_hi_bps_hz,probability\n";
    for (std::size_t i = 0; i < d.bin_mass.size(); ++i) {
        csv += format_num(d.bin_edges[i]) + "," + format_num(d.bin_edges[i + 1]) + "," +
               format_num(d.bin_mass[i]) + "\n";
    }
    return csv;
}

std::string cdf_csv(const RateDistribution& d) {
    std::vector<double> sorted = d.samples;
    std::sort(sorted.begin(), sorted.end());
    std::string csv = "rate_bps_hz,cdf\n";
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        csv += format_num(sorted[i]) + "," +
               format_num(static_cast<double>(i + 1) / static_cast<double>(sorted.size())) +
               "\n";
    }
    return csv;
}

ordered_json config_json(const SimConfig& cfg) {
    ordered_json j;
    for (const auto& [key, value] : config_echo(cfg)) {
        if (key == "fading")
            j[key] = value;
        else if (key == "n_subcarriers" || key == "users_per_subcarrier" ||
                 key == "trials" || key == "seed")
            j[key] = std::stoull(value);
        else
            j[key] = std::stod(value);
    }
    return j;
}

int run_metric(const std::optional<double>& gamma, const std::optional<double>& g1,
               const std::optional<double>& g2, const std::optional<double>& p0_dbm,
               const std::optional<double>& noise_dbm) {
    ordered_json j;
    if (gamma) {
        if (g1 || g2)
            throw UsageError("give either --gamma or the full channel spec, not both");
        j["gamma"] = *gamma;
        j["beta"] = beta_exact(*gamma);
        j["beta_high_snr"] = beta_high_snr(*gamma);
        const double b = j["beta"].get<double>();
        j["ratio_threshold"] = b / (1.0 - b);
    } else {
        if (!(g1 && g2 && p0_dbm && noise_dbm))
            throw UsageError(
                "metric needs --gamma, or all of --g1 --g2 --p0-dbm --noise-dbm");
        const UserChannels pair({*g1, *g2}, dbm_to_mw(*p0_dbm), dbm_to_mw(*noise_dbm));
        const FairnessContext ctx = normalized_gains(pair);
        const FairnessDecision d = noma_more_fair(pair);
        j["gamma"] = ctx.gamma;
        j["gain_ratio"] = pair.gains()[0] / pair.gains()[1];
        j["beta"] = d.beta;
        j["beta_high_snr"] = d.beta_high_snr;
        j["ratio_threshold"] = d.ratio_threshold;
        j["noma_more_fair"] = d.noma_more_fair;
        j["verdict"] = d.noma_more_fair ? "NOMA" : "OMA";
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int run_region(double g1, double g2, double p0_dbm, double noise_dbm, std::size_t samples,
               const std::filesystem::path& out_dir) {
    const UserChannels pair({g1, g2}, dbm_to_mw(p0_dbm), dbm_to_mw(noise_dbm));
    const RegionBoundary noma = noma_boundary(pair, samples);
    const RegionBoundary oma = oma_boundary(pair, samples);

    std::string corners = "label,r1_bps_hz,r2_bps_hz\n";
    for (const CornerPoint& c : noma.corners)
        corners += c.label + "," + format_num(c.pt.r1) + "," + format_num(c.pt.r2) + "\n";
    corners += "C," + format_num(oma.corners[1].pt.r1) + "," +
               format_num(oma.corners[1].pt.r2) + "\n";

    OutputTracker out(out_dir);
    try {
        out.emit("noma_boundary.csv", boundary_csv(noma));
        out.emit("oma_boundary.csv", boundary_csv(oma));
        out.emit("corners.csv", corners);
    } catch (...) {
        out.remove_all();
        throw;
    }
    return 0;
}

int run_simulate(const SimConfig& cfg, const std::string& experiment,
                 const std::vector<double>& p0_grid, unsigned threads,
                 const std::filesystem::path& out_dir) {
    OutputTracker out(out_dir);
    ordered_json manifest;
    manifest["artifact"] = kArtifact;
    manifest["version"] = kVersion;
    manifest["command"] = "simulate";
    manifest["experiment"] = experiment;
    manifest["seed"] = cfg.seed;
    manifest["threads"] = threads;
    manifest["config"] = config_json(cfg);

    try {
        if (experiment == "sweep") {
            manifest["p0_grid_dbm"] = p0_grid;
            out.emit("sweep.csv", sweep_csv(run_fairness_sweep(cfg, p0_grid, threads)));
        } else {
            const DistributionResult r = run_distribution(cfg, threads);
            out.emit("pdf_noma.csv", pdf_csv(r.noma));
            out.emit("pdf_oma.csv", pdf_csv(r.oma));
            out.emit("pdf_hybrid.csv", pdf_csv(r.hybrid));
            out.emit("cdf_noma.csv", cdf_csv(r.noma));
            out.emit("cdf_oma.csv", cdf_csv(r.oma));
            out.emit("cdf_hybrid.csv", cdf_csv(r.hybrid));
            ordered_json summary;
            summary["jain"] = {{"noma", r.noma.jain}, {"oma", r.oma.jain},
                               {"hybrid", r.hybrid.jain}};
            summary["p10_bps_hz"] = {{"noma", r.noma.p10}, {"oma", r.oma.p10},
                                     {"hybrid", r.hybrid.p10}};
            summary["noma_selection_fraction"] = r.noma_selection_fraction;
            summary["n_drops"] = r.n_drops;
            summary["n_user_rates"] = r.noma.samples.size();
            out.emit("summary.json", summary.dump(2) + "\n");
        }
        manifest["outputs"] = out.checksums();
        manifest["created_utc"] = utc_now();
        write_text_file(out_dir / "manifest.json", manifest.dump(2) + "\n");
    } catch (...) {
        out.remove_all();
        throw;
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Uplink NOMA/OMA rate and fairness analysis"};
    app.require_subcommand(1);

    // metric
    auto* metric = app.add_subcommand(
        "metric", "Fairness threshold for a two-user channel or a given aggregate SNR");
    std::optional<double> m_gamma, m_g1, m_g2, m_p0, m_noise;
    metric->add_option("--gamma", m_gamma, "Aggregate SNR Gamma (linear)")
        ->check(CLI::PositiveNumber);
    metric->add_option("--g1", m_g1, "Channel power gain of user 1 (linear)")
        ->check(CLI::PositiveNumber);
    metric->add_option("--g2", m_g2, "Channel power gain of user 2 (linear)")
        ->check(CLI::PositiveNumber);
    metric->add_option("--p0-dbm", m_p0, "Per-user transmit power (dBm)");
    metric->add_option("--noise-dbm", m_noise, "Noise power (dBm)");

    // region
    auto* region = app.add_subcommand("region", "Two-user NOMA and OMA rate-region boundaries");
    double r_g1 = 0, r_g2 = 0, r_p0 = 0, r_noise = 0;
    std::size_t r_samples = 201;
    std::string r_out;
    region->add_option("--g1", r_g1, "Channel power gain of user 1 (linear)")
        ->required()
        ->check(CLI::PositiveNumber);
    region->add_option("--g2", r_g2, "Channel power gain of user 2 (linear)")
        ->required()
        ->check(CLI::PositiveNumber);
    region->add_option("--p0-dbm", r_p0, "Per-user transmit power (dBm)")->required();
    region->add_option("--noise-dbm", r_noise, "Noise power (dBm)")->required();
    region->add_option("--samples", r_samples, "Boundary samples per curve")
        ->check(CLI::Range(std::size_t{2}, std::size_t{1000000}));
    region->add_option("--out", r_out, "Output directory")->required();

    // simulate
    auto* simulate =
        app.add_subcommand("simulate", "Monte Carlo fairness experiments over a cell");
    std::string s_experiment, s_config, s_out, s_grid = "0:40:5", s_fading;
    std::optional<std::uint64_t> s_seed, s_trials;
    std::optional<double> s_p0;
    unsigned s_threads = 1;
    simulate->add_option("--experiment", s_experiment, "sweep or distribution")
        ->required()
        ->check(CLI::IsMember({"sweep", "distribution"}));
    simulate->add_option("--config", s_config, "Config file (key=value lines)");
    simulate->add_option("--out", s_out, "Output directory")->required();
    simulate->add_option("--seed", s_seed, "RNG seed");
    simulate->add_option("--trials", s_trials, "Pairs per sweep point / network drops")
        ->check(CLI::PositiveNumber);
    simulate->add_option("--p0-dbm", s_p0, "Transmit power for the distribution run (dBm)");
    simulate->add_option("--p0-grid", s_grid, "Sweep grid start:stop:step in dBm");
    simulate->add_option("--fading", s_fading, "rayleigh or none")
        ->check(CLI::IsMember({"rayleigh", "none"}));
    simulate->add_option("--threads", s_threads, "Worker threads")
        ->check(CLI::Range(1u, 1024u));

    try {
        app.parse(argc, argv);

        if (metric->parsed())
            return run_metric(m_gamma, m_g1, m_g2, m_p0, m_noise);

        if (region->parsed())
            return run_region(r_g1, r_g2, r_p0, r_noise, r_samples, r_out);

        // simulate
        SimConfig cfg;
        if (!s_config.empty()) cfg = load_sim_config(s_config);
        if (s_seed) cfg.seed = *s_seed;
        if (s_trials) cfg.trials = *s_trials;
        if (s_p0) cfg.p0_dbm = *s_p0;
        if (!s_fading.empty())
            cfg.fading = s_fading == "rayleigh" ? FadingMode::kRayleigh : FadingMode::kNone;
        try {
            cfg.validate();
        } catch (const std::invalid_argument& e) {
            throw ConfigError(std::string("invalid config: ") + e.what());
        }
        return run_simulate(cfg, s_experiment, parse_grid(s_grid), s_threads, s_out);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return kExitConfig;
    } catch (const IoError& e) {
        std::cerr << "io error: " << e.what() << "\n";
        return kExitIo;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
