#include <doctest.h>

#include <cstdint>
#include <cstdlib>
#include <filesystem>
#include <string>
#include <vector>

#include "invstat/errors.hpp"
#include "invstat/export.hpp"

using namespace invstat;

namespace {

// Independent FNV-1a transcription for cross-checking the library copy.
std::uint64_t reference_fnv1a64(const std::string& s) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

FptDistribution small_fpt() {
    FptDistribution d;
    d.tau_max = 5;
    d.counts = {0, 2, 0, 3, 0, 0};
    d.total_starts = 10;
    d.censored = 5;
    d.rho = 0.05;
    d.sigma = 0.01;
    return d;
}

}  // namespace

TEST_CASE("fmt_double emits minimal stable decimal forms") {
    CHECK(fmt_double(0.5) == "0.5");
    CHECK(fmt_double(2.0) == "2");
    CHECK(fmt_double(-0.25) == "-0.25");
    CHECK(fmt_double(0.0) == "0");
    for (double v : {1.0 / 3.0, 1e-9, 12345.6789, -2.718281828}) {
        const double back = std::strtod(fmt_double(v).c_str(), nullptr);
        CHECK(back == doctest::Approx(v).epsilon(1e-11));
    }
}

TEST_CASE("fpt csv stops at the last populated tau and normalizes by realized starts") {
    const std::string csv = fpt_distribution_csv(small_fpt());
    CHECK(csv ==
          "tau,count,probability\n"
          "1,2,0.4\n"
          "2,0,0\n"
          "3,3,0.6\n");
}

TEST_CASE("fpt json records the level, its sigma and the smoothed mode") {
    const nlohmann::json j = fpt_distribution_json(small_fpt(), 1);
    CHECK(j.at("rho").get<double>() == 0.05);
    CHECK(j.at("sigma").get<double>() == 0.01);
    CHECK(j.at("total_starts").get<std::uint64_t>() == 10);
    CHECK(j.at("censored").get<std::uint64_t>() == 5);
    CHECK(j.at("mode").get<int>() == 3);
    // Only populated taus are serialized.
    const auto& counts = j.at("counts");
    REQUIRE(counts.size() == 2);
    CHECK(counts[0][0].get<int>() == 1);
    CHECK(counts[0][1].get<std::uint64_t>() == 2);
    CHECK(counts[1][0].get<int>() == 3);
}

TEST_CASE("sweep csv layout is frozen") {
    SweepResult res;
    res.sigma = 0.01;
    SweepCell cell;
    cell.T = 7;
    cell.k = 5.0;
    cell.rho_abs = 0.05;
    cell.n_p = 3;
    cell.plus.tau_star = 14.0;
    cell.plus.dispersion = 1.5;
    cell.plus.censored_frac = 0.25;
    cell.minus.tau_star = 11.0;
    cell.minus.dispersion = 0.5;
    cell.minus.censored_frac = 0.125;
    res.cells = {cell};

    CHECK(sweep_csv(res) ==
          "T,k,sign,tau_star,dispersion,n_p,censored_frac\n"
          "7,5,+,14,1.5,3,0.25\n"
          "7,5,-,11,0.5,3,0.125\n");

    const nlohmann::json j = sweep_json(res);
    CHECK(j.at("sigma").get<double>() == 0.01);
    CHECK(j.at("cells")[0].at("rho_abs").get<double>() == 0.05);
    CHECK(j.at("cells")[0].at("signs").at("plus").at("tau_star").get<double>() == 14.0);
}

TEST_CASE("asymmetry and theta tables are frozen") {
    AsymmetryCurve curve;
    curve.k = 5.0;
    curve.rho_abs = 0.05;
    curve.T = {1, 1000};
    curve.w = {0.25, 1.0};
    curve.w_plus = {0.0, 1.0};
    curve.w_minus = {0.5, 1.0};

    CHECK(asymmetry_curve_csv(curve) ==
          "T,w,w_plus,w_minus\n"
          "1,0.25,0,0.5\n"
          "1000,1,1,1\n");

    ThetaFit fit;
    fit.theta = 12.5;
    fit.std_error = 0.25;
    fit.fit_T_lo = 1;
    fit.fit_T_hi = 29;
    fit.n_points = 20;
    fit.n_excluded = 2;
    CHECK(theta_table_csv({curve}, {fit}) ==
          "k,rho,theta,theta_std_error,fit_T_lo,fit_T_hi,n_points,n_excluded\n"
          "5,0.05,12.5,0.25,1,29,20,2\n");

    CHECK_THROWS_AS(theta_table_csv({curve}, {fit, fit}), DataError);
}

TEST_CASE("leverage csv layout is frozen") {
    LeverageCurve c;
    c.taus = {-1, 0};
    c.values = {0.5, -0.25};
    c.std_errors = {0.125, 0.0625};
    c.n_terms = {4, 5};
    c.reliable = {false, false};
    CHECK(leverage_csv(c) ==
          "tau,L,stderr,n_terms\n"
          "-1,0.5,0.125,4\n"
          "0,-0.25,0.0625,5\n");
}

TEST_CASE("fnv1a64 matches the published test vectors") {
    CHECK(fnv1a64("", 0) == 0xcbf29ce484222325ULL);
    CHECK(fnv1a64("a", 1) == 0xaf63dc4c8601ec8cULL);
    CHECK(fnv1a64("foobar", 6) == 0x85944171f73967e8ULL);
    for (const std::string s : {"tau,count\n", "inverse statistics", "0123456789"}) {
        CHECK(fnv1a64(s.data(), s.size()) == reference_fnv1a64(s));
    }
}

TEST_CASE("text files round-trip and checksums cover the raw bytes") {
    const auto dir = std::filesystem::temp_directory_path() / "invstat_export_test";
    std::filesystem::create_directories(dir);
    const std::string path = (dir / "sample.csv").string();
    const std::string payload = "tau,count\n1,2\n";

    write_text_file(path, payload);
    CHECK(read_text_file(path) == payload);

    char expect[17];
    std::snprintf(expect, sizeof(expect), "%016llx",
                  static_cast<unsigned long long>(reference_fnv1a64(payload)));
    CHECK(file_checksum_hex(path) == expect);

    CHECK_THROWS_AS(read_text_file((dir / "missing.csv").string()), IoError);
    CHECK_THROWS_AS(write_text_file((dir / "no_such_dir" / "x.csv").string(), "x"), IoError);
    std::filesystem::remove_all(dir);
}
