#include <doctest.h>

#include <cstdint>
#include <filesystem>
#include <sstream>

#include "nomafair/config.hpp"
#include "nomafair/io.hpp"

using namespace nomafair;

TEST_CASE("empty config yields the defaults") {
    std::istringstream in("");
    const SimConfig cfg = parse_sim_config(in);
    CHECK(cfg.cell_radius_m == 400.0);
    CHECK(cfg.min_distance_m == 35.0);
    CHECK(cfg.n_subcarriers == 128);
    CHECK(cfg.noise_dbm == -90.0);
    CHECK(cfg.fading == FadingMode::kRayleigh);
    CHECK_FALSE(cfg.trials.has_value());
    CHECK(cfg.seed == 1);
}

TEST_CASE("full config with comments and whitespace") {
    std::istringstream in(
        "# scenario\n"
        "cell_radius_m = 250\n"
        "min_distance_m=10\n"
        "n_subcarriers = 64   # smaller system\n"
        "users_per_subcarrier = 2\n"
        "noise_dbm = -95.5\n"
        "p0_dbm = 23\n"
        "fading = none\n"
        "trials = 500\n"
        "seed = 987654321\n"
        "\n");
    const SimConfig cfg = parse_sim_config(in);
    CHECK(cfg.cell_radius_m == 250.0);
    CHECK(cfg.min_distance_m == 10.0);
    CHECK(cfg.n_subcarriers == 64);
    CHECK(cfg.noise_dbm == -95.5);
    CHECK(cfg.p0_dbm == 23.0);
    CHECK(cfg.fading == FadingMode::kNone);
    CHECK(cfg.trials == 500);
    CHECK(cfg.seed == 987654321);
}

TEST_CASE("config errors name the offending key") {
    std::istringstream unknown("cell_radius_km = 1\n");
    CHECK_THROWS_WITH_AS(parse_sim_config(unknown), "unknown config key 'cell_radius_km'",
                         ConfigError);

    std::istringstream bad_num("p0_dbm = loud\n");
    CHECK_THROWS_WITH_AS(parse_sim_config(bad_num),
                         "config key 'p0_dbm': expected a number, got 'loud'", ConfigError);

    std::istringstream bad_int("trials = -3\n");
    CHECK_THROWS_AS(parse_sim_config(bad_int), ConfigError);

    std::istringstream bad_fading("fading = rician\n");
    CHECK_THROWS_AS(parse_sim_config(bad_fading), ConfigError);

    std::istringstream no_eq("seed 4\n");
    CHECK_THROWS_AS(parse_sim_config(no_eq), ConfigError);

    std::istringstream bad_users("users_per_subcarrier = 3\n");
    CHECK_THROWS_AS(parse_sim_config(bad_users), ConfigError);
}

TEST_CASE("config echo round-trips") {
    SimConfig cfg;
    cfg.cell_radius_m = 321.5;
    cfg.p0_dbm = 17.25;
    cfg.fading = FadingMode::kNone;
    cfg.trials = 42;
    cfg.seed = 7;

    std::string text;
    for (const auto& [k, v] : config_echo(cfg)) text += k + " = " + v + "\n";
    std::istringstream in(text);
    const SimConfig back = parse_sim_config(in);
    CHECK(back.cell_radius_m == cfg.cell_radius_m);
    CHECK(back.min_distance_m == cfg.min_distance_m);
    CHECK(back.n_subcarriers == cfg.n_subcarriers);
    CHECK(back.noise_dbm == cfg.noise_dbm);
    CHECK(back.p0_dbm == cfg.p0_dbm);
    CHECK(back.fading == cfg.fading);
    CHECK(back.trials == cfg.trials);
    CHECK(back.seed == cfg.seed);
}

TEST_CASE("missing config file") {
    CHECK_THROWS_AS(load_sim_config("/nonexistent/path/config.txt"), ConfigError);
}

TEST_CASE("format_num uses 12 significant digits") {
    CHECK(format_num(1.0 / 3.0) == "0.333333333333");
    CHECK(format_num(2.0) == "2");
    CHECK(format_num(-90.0) == "-90");
    CHECK(format_num(123456789.123) == "123456789.123");
    CHECK(format_num(6.94053078928e4) == "69405.3078928");
}

TEST_CASE("fnv1a64 known vectors") {
    CHECK(fnv1a64("") == 0xcbf29ce484222325ull);
    CHECK(fnv1a64("a") == 0xaf63dc4c8601ec8cull);
    CHECK(fnv1a64_hex("") == "cbf29ce484222325");
    CHECK(fnv1a64_hex("foobar") == fnv1a64_hex("foobar"));
    CHECK(fnv1a64_hex("foobar") != fnv1a64_hex("foobaz"));
}

TEST_CASE("text file round trip") {
    const auto dir = std::filesystem::temp_directory_path() / "nomafair_io_test";
    const auto path = dir / "sub" / "t.txt";
    write_text_file(path, "line1\nline2\n");
    CHECK(read_text_file(path) == "line1\nline2\n");
    std::filesystem::remove_all(dir);
    CHECK_THROWS_AS(read_text_file(path), IoError);
    CHECK_THROWS_AS(write_text_file("/proc/version/impossible/x.txt", "x"), IoError);
}
