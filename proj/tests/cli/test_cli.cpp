// Black-box tests of the invstat executable: exit codes, error taxonomy on
// stderr, artifact layout and byte-for-byte reproducibility.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <string>

#include <json.hpp>

#include "invstat/dates.hpp"
#include "invstat/export.hpp"
#include "invstat/market_data.hpp"
#include "invstat/rng.hpp"
#include "invstat/synth.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace invstat;

namespace {

struct CmdResult {
    int code = -1;
    std::string out;
    std::string err;
};

fs::path scratch_root() {
    const fs::path root = fs::temp_directory_path() / "invstat_cli_tests";
    fs::create_directories(root);
    return root;
}

fs::path fresh_dir(const std::string& name) {
    const fs::path dir = scratch_root() / name;
    fs::remove_all(dir);
    fs::create_directories(dir);
    return dir;
}

CmdResult run_cli(const std::string& args, const std::string& env_prefix = "") {
    static int counter = 0;
    const fs::path dir = scratch_root();
    const std::string out_path = (dir / ("stdout." + std::to_string(counter))).string();
    const std::string err_path = (dir / ("stderr." + std::to_string(counter))).string();
    ++counter;

    std::string cmd;
    if (!env_prefix.empty()) cmd += env_prefix + " ";
    cmd += INVSTAT_CLI_PATH;
    if (!args.empty()) cmd += " " + args;
    cmd += " >" + out_path + " 2>" + err_path;

    const int raw = std::system(cmd.c_str());
    CmdResult r;
    r.code = WIFEXITED(raw) ? WEXITSTATUS(raw) : -1;
    r.out = read_text_file(out_path);
    r.err = read_text_file(err_path);
    return r;
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

// Slow-but-weak climbs and fast drops at the 25..50 day scale: short-window
// shuffling destroys the asymmetry, so w(T) relaxes slowly enough for the
// theta fit to succeed on purely synthetic input.
fs::path write_sawtooth_csv(const fs::path& dir, std::size_t n) {
    const double up = 0.0012, noise = 0.008;
    const int up_len = 50, down_len = 25;
    const double down = up * up_len / down_len;
    RngStream stream(1, {77});
    ReturnSeries r;
    for (std::size_t i = 0; i < n; ++i) {
        const int ph = static_cast<int>(i % static_cast<std::size_t>(up_len + down_len));
        r.r.push_back((ph < up_len ? up : -down) + noise * stream.next_normal());
    }
    const PriceSeries p = to_price_series(r, parse_date("1990-01-01"), 100.0, "saw");
    const fs::path path = dir / "saw.csv";
    write_price_csv(p, path.string());
    return path;
}

fs::path write_gaussian_csv(const fs::path& dir, std::size_t n) {
    const ReturnSeries r = gen_gaussian_returns(n, 0.01, gaussian_stream(5));
    const PriceSeries p = to_price_series(r, parse_date("2001-01-01"), 100.0, "flat");
    const fs::path path = dir / "flat.csv";
    write_price_csv(p, path.string());
    return path;
}

}  // namespace

TEST_CASE("a missing subcommand is a config error on stderr") {
    const CmdResult r = run_cli("");
    CHECK(r.code == 2);
    CHECK(contains(r.err, "error: category=config"));
    CHECK(r.out.empty());
}

TEST_CASE("--version prints the tool version") {
    const CmdResult r = run_cli("--version");
    CHECK(r.code == 0);
    CHECK(r.out == "0.1.0\n");
}

TEST_CASE("synth runs are reproducible byte for byte") {
    const fs::path a = fresh_dir("synth_a");
    const fs::path b = fresh_dir("synth_b");
    const std::string args = "synth --kind student-t --n 800 --nu 3 --scale 0.01 --seed 7 --out ";
    const CmdResult ra = run_cli(args + a.string());
    const CmdResult rb = run_cli(args + b.string());
    REQUIRE(ra.code == 0);
    REQUIRE(rb.code == 0);
    CHECK(contains(ra.out, "synthesized 800 student-t days"));
    CHECK(read_text_file((a / "prices.csv").string()) ==
          read_text_file((b / "prices.csv").string()));
    CHECK(read_text_file((a / "manifest.json").string()) ==
          read_text_file((b / "manifest.json").string()));

    const json manifest = json::parse(read_text_file((a / "manifest.json").string()));
    CHECK(manifest.at("rng").at("algorithm").get<std::string>() == RngStream::kAlgorithm);
    CHECK(manifest.at("summary").at("sample_sigma").get<double>() > 0.0);
}

TEST_CASE("synth rejects invalid parameters with the right categories") {
    const fs::path dir = fresh_dir("synth_bad");
    const CmdResult bad_sigma =
        run_cli("synth --kind gaussian --n 100 --sigma -1 --out " + dir.string());
    CHECK(bad_sigma.code == 4);
    CHECK(contains(bad_sigma.err, "error: category=data"));

    const CmdResult bad_kind = run_cli("synth --kind levy --n 100 --out " + dir.string());
    CHECK(bad_kind.code == 2);
    CHECK(contains(bad_kind.err, "error: category=config"));
}

TEST_CASE("ingest normalizes its own output to identical bytes") {
    const fs::path src = fresh_dir("ingest_src");
    const fs::path dst = fresh_dir("ingest_dst");
    REQUIRE(run_cli("synth --kind gaussian --n 300 --seed 3 --out " + src.string()).code == 0);

    const CmdResult r = run_cli("ingest --input " + (src / "prices.csv").string() + " --out " +
                                dst.string());
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "ingested 301 rows"));
    CHECK(contains(r.out, "sigma="));
    CHECK(read_text_file((src / "prices.csv").string()) ==
          read_text_file((dst / "prices.csv").string()));

    const json manifest = json::parse(read_text_file((dst / "manifest.json").string()));
    CHECK(manifest.at("summary").at("sigma").get<double>() > 0.0);
    CHECK(manifest.at("input").at("checksum_fnv1a64").get<std::string>().size() == 16);
}

TEST_CASE("ingest of a missing file is an io error") {
    const fs::path dir = fresh_dir("ingest_missing");
    const CmdResult r =
        run_cli("ingest --input " + (dir / "nope.csv").string() + " --out " + dir.string());
    CHECK(r.code == 3);
    CHECK(contains(r.err, "error: category=io"));
}

TEST_CASE("fpt writes both distributions and names sigma in its artifacts") {
    const fs::path data = fresh_dir("fpt_data");
    const fs::path out = fresh_dir("fpt_out");
    const fs::path csv = write_gaussian_csv(data, 2000);

    const CmdResult r = run_cli("fpt --input " + csv.string() +
                                " --k 3 --tau-max 200 --out " + out.string());
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "mode tau*(+3 sigma)"));
    CHECK(contains(r.out, "mode tau*(-3 sigma)"));
    for (const char* name : {"fpt_plus.csv", "fpt_minus.csv", "fpt.json", "manifest.json"}) {
        CHECK(fs::exists(out / name));
    }
    const json summary = json::parse(read_text_file((out / "fpt.json").string()));
    CHECK(summary.at("sigma").get<double>() > 0.0);
    CHECK(summary.at("plus").at("mode").get<int>() >= 1);
    CHECK(summary.at("minus").at("sigma").get<double>() == summary.at("sigma").get<double>());
}

TEST_CASE("sweep rejects duplicate grid entries") {
    const fs::path data = fresh_dir("sweep_dup");
    const fs::path csv = write_gaussian_csv(data, 400);
    const CmdResult r = run_cli("sweep --input " + csv.string() + " --T 1,1 --k 5 --np 2 --out " +
                                data.string());
    CHECK(r.code == 4);
    CHECK(contains(r.err, "error: category=data"));
}

TEST_CASE("sweep output is worker-count invariant and honors INVSTAT_WORKERS") {
    const fs::path data = fresh_dir("sweep_data");
    const fs::path w1 = fresh_dir("sweep_w1");
    const fs::path w3 = fresh_dir("sweep_w3");
    const fs::path csv = write_gaussian_csv(data, 1500);
    const std::string base = "sweep --input " + csv.string() +
                             " --T 1,5 --k 5 --np 4 --tau-max 100 --seed 3";

    REQUIRE(run_cli(base + " --workers 1 --out " + w1.string()).code == 0);
    REQUIRE(run_cli(base + " --out " + w3.string(), "INVSTAT_WORKERS=3").code == 0);

    CHECK(read_text_file((w1 / "sweep.csv").string()) ==
          read_text_file((w3 / "sweep.csv").string()));
    CHECK(read_text_file((w1 / "sweep.json").string()) ==
          read_text_file((w3 / "sweep.json").string()));

    const json m1 = json::parse(read_text_file((w1 / "manifest.json").string()));
    const json m3 = json::parse(read_text_file((w3 / "manifest.json").string()));
    CHECK(m1.at("config").at("workers").get<int>() == 1);
    CHECK(m3.at("config").at("workers").get<int>() == 3);
}

TEST_CASE("INVSTAT_OUT_DIR redirects artifacts when --out is absent") {
    const fs::path dir = fresh_dir("env_out");
    const CmdResult r = run_cli("synth --kind gaussian --n 200 --seed 2",
                                "INVSTAT_OUT_DIR=" + dir.string());
    REQUIRE(r.code == 0);
    CHECK(fs::exists(dir / "prices.csv"));
    CHECK(fs::exists(dir / "manifest.json"));
}

TEST_CASE("an era boundary outside the data is a data error") {
    const fs::path data = fresh_dir("era_bad");
    const fs::path csv = write_gaussian_csv(data, 1200);
    const CmdResult r = run_cli("era --input " + csv.string() +
                                " --boundary 1800-01-01 --T 1,5 --k 5 --np 2 --out " +
                                data.string());
    CHECK(r.code == 4);
    CHECK(contains(r.err, "error: category=data"));
}

TEST_CASE("asymmetry on structureless data fails with a clean taxonomy line") {
    const fs::path data = fresh_dir("asym_flat");
    const fs::path csv = write_gaussian_csv(data, 1500);
    const CmdResult r = run_cli("asymmetry --input " + csv.string() +
                                " --T 1,5,50 --T-inf 50 --k 5 --np 4 --tau-max 100 --out " +
                                data.string());
    // A flat random walk either has no T_inf gap (data error) or no usable
    // relaxation (fit error); both must exit through the documented taxonomy.
    CHECK((r.code == 4 || r.code == 5));
    CHECK(contains(r.err, "error: category="));
    CHECK(r.err.rfind("error: ", 0) == 0);
}

TEST_CASE("report completes end to end on slow-relaxing synthetic data") {
    const fs::path data = fresh_dir("report_data");
    const fs::path out1 = fresh_dir("report_out1");
    const fs::path out2 = fresh_dir("report_out2");
    const fs::path csv = write_sawtooth_csv(data, 10000);
    const std::string args = "report --input " + csv.string() +
                             " --T 1,2,3,5,7,10,15,20,50 --T-inf 50 --k 5 --k-fpt 5 --np 20"
                             " --tau-max 100 --seed 42 --workers 1 --out ";

    const CmdResult r1 = run_cli(args + out1.string());
    REQUIRE(r1.code == 0);
    for (const char* name : {"fpt_plus.csv", "fpt_minus.csv", "fpt.json", "sweep.csv",
                             "sweep.json", "asymmetry_k5.csv", "theta.csv", "leverage.csv",
                             "manifest.json"}) {
        CHECK(fs::exists(out1 / name));
    }
    const std::string theta = read_text_file((out1 / "theta.csv").string());
    CHECK(theta.rfind("k,rho,theta,theta_std_error,", 0) == 0);

    const json manifest = json::parse(read_text_file((out1 / "manifest.json").string()));
    CHECK(manifest.at("summary").at("sigma").get<double>() > 0.0);
    CHECK(manifest.at("outputs").size() >= 8);

    // The whole report reproduces byte for byte.
    const CmdResult r2 = run_cli(args + out2.string());
    REQUIRE(r2.code == 0);
    for (const char* name : {"sweep.csv", "theta.csv", "asymmetry_k5.csv", "leverage.csv"}) {
        CHECK(read_text_file((out1 / name).string()) == read_text_file((out2 / name).string()));
    }
}

TEST_CASE("era compares sawtooth halves end to end") {
    const fs::path data = fresh_dir("era_data");
    const fs::path out = fresh_dir("era_out");
    const fs::path csv = write_sawtooth_csv(data, 10000);
    const PriceSeries p = load_csv(csv.string(), CsvSchema{});
    const std::string boundary = format_date(p.dates()[p.size() / 2]);

    const CmdResult r = run_cli("era --input " + csv.string() + " --boundary " + boundary +
                                " --T 1,2,3,5,7,10,15,20,50 --T-inf 50 --k 5 --np 16"
                                " --tau-max 100 --seed 42 --workers 1 --out " +
                                out.string());
    REQUIRE(r.code == 0);
    CHECK(contains(r.out, "theta="));
    for (const char* name : {"asymmetry_era1_k5.csv", "asymmetry_era2_k5.csv", "theta_era1.csv",
                             "theta_era2.csv", "era.json", "manifest.json"}) {
        CHECK(fs::exists(out / name));
    }
    const json era = json::parse(read_text_file((out / "era.json").string()));
    CHECK(era.at("boundary").get<std::string>() == boundary);
    CHECK(era.at("first").at("sigma").get<double>() > 0.0);
    CHECK(era.at("second").at("sigma").get<double>() > 0.0);
    REQUIRE(era.at("first").at("thetas").size() == 1);
    CHECK(era.at("first").at("thetas")[0].at("theta").get<double>() > 0.0);
    CHECK(era.at("variance_ratio").get<double>() > 0.0);
}
