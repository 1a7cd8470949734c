#include <doctest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>

#include "gmux/designs.hpp"
#include "gmux/errors.hpp"
#include "gmux/io.hpp"
#include "gmux/simulate.hpp"
#include "helpers.hpp"

using namespace gmux;
using nlohmann::json;

namespace {

std::filesystem::path temp_file(const char* name) {
    return std::filesystem::temp_directory_path() / name;
}

}  // namespace

TEST_CASE("design json round trip is bit identical") {
    Rng rng(33);
    for (int rep = 0; rep < 25; ++rep) {
        const int n = 2 + static_cast<int>(rng.next_u64() % 6);
        const Design d = gmux::testing::random_identifiable_design(rng, n);
        const Design back = design_from_json(design_to_json(d));
        CHECK(back.n_params == d.n_params);
        CHECK(back.rows == d.rows);
        REQUIRE(back.times.size() == d.times.size());
        for (std::size_t i = 0; i < d.times.size(); ++i)
            CHECK(back.times[i] == d.times[i]);  // exact, not approximate
    }

    // Times like 1/3 survive the decimal round trip exactly.
    Design third = identity_design(3);
    third.times = {1.0 / 3.0, 1.0 / 3.0, 3.0 - 2.0 / 3.0};
    const auto path = temp_file("gmux_third.json");
    write_design_file(third, path.string());
    const Design back = read_design_file(path.string());
    for (int i = 0; i < 3; ++i) CHECK(back.times[i] == third.times[i]);
    std::filesystem::remove(path);
}

TEST_CASE("times default to N/M when omitted") {
    const json j = {{"n", 3}, {"rows", {{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {1, 1, 1}}}};
    const Design d = design_from_json(j);
    REQUIRE(d.times.size() == 4);
    for (double t : d.times) CHECK(t == doctest::Approx(0.75));
    CHECK(validate_design(d).valid());
}

TEST_CASE("malformed design json is rejected") {
    CHECK_THROWS_AS(design_from_json(json{{"rows", json::array()}}), InvalidDesignError);
    CHECK_THROWS_AS(design_from_json(json{{"n", 2}}), InvalidDesignError);
    CHECK_THROWS_AS(design_from_json(json{{"n", 2}, {"rows", {{0, 2}}}}), InvalidDesignError);
    CHECK_THROWS_AS(read_design_file("/nonexistent/gmux.json"), InvalidArgumentError);

    const auto path = temp_file("gmux_bad.json");
    std::ofstream(path) << "{ not json";
    CHECK_THROWS_AS(read_design_file(path.string()), InvalidDesignError);
    std::filesystem::remove(path);
}

TEST_CASE("format_double emits shortest round-trip decimals") {
    CHECK(format_double(3.62) == "3.62");
    CHECK(format_double(0.1) == "0.1");
    CHECK(format_double(4.0) == "4");
    CHECK(std::stod(format_double(1.0 / 3.0)) == 1.0 / 3.0);
    CHECK(std::stod(format_double(2.0 / 7.0)) == 2.0 / 7.0);
}

TEST_CASE("sim report serializes its fields") {
    SimConfig cfg;
    cfg.design = identity_design(2);
    cfg.mu = {1.0, -1.0};
    cfg.trials = 500;
    cfg.seed = 11;
    const SimReport r = simulate(cfg);
    const json j = report_to_json(r);
    CHECK(j.at("trials").get<long long>() == 500);
    CHECK(j.at("seed").get<std::uint64_t>() == 11);
    CHECK(j.at("empirical_mse").get<double>() == r.empirical_mse);
    CHECK(j.at("theoretical_mse").get<double>() == doctest::Approx(2.0));
    CHECK(j.at("per_coordinate_bias").size() == 2);
    CHECK(j.at("empirical_covariance").size() == 2);
}
