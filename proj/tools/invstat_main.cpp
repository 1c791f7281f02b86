// invstat: inverse-statistics pipeline for daily price series.
//
// Subcommands: ingest, synth, fpt, sweep, asymmetry, leverage, era, report.
// Every run writes its artifacts plus a manifest.json capturing the effective
// configuration, seed, RNG algorithm, input checksum and tool version, so an
// identical invocation on identical input reproduces every file byte for byte
// (no timestamps anywhere). Environment overrides exist only for the output
// directory (INVSTAT_OUT_DIR) and the worker count (INVSTAT_WORKERS).

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "invstat/asymmetry.hpp"
#include "invstat/errors.hpp"
#include "invstat/export.hpp"
#include "invstat/inverse_stats.hpp"
#include "invstat/leverage.hpp"
#include "invstat/market_data.hpp"
#include "invstat/shuffler.hpp"
#include "invstat/synth.hpp"
#include "invstat/version.hpp"

namespace fs = std::filesystem;
using nlohmann::json;
using namespace invstat;

namespace {

// Collects artifact files for one run and finishes with the manifest.
class RunOutput {
public:
    RunOutput(std::string dir, std::string command) : dir_(std::move(dir)) {
        std::error_code ec;
        fs::create_directories(dir_, ec);
        if (ec) throw IoError("cannot create output directory " + dir_ + ": " + ec.message());
        manifest_["command"] = std::move(command);
        manifest_["tool"] = "invstat";
        manifest_["version"] = kVersion;
    }

    void write(const std::string& name, const std::string& content) {
        write_text_file((fs::path(dir_) / name).string(), content);
        files_.push_back(name);
    }

    void write_json(const std::string& name, const json& j) { write(name, j.dump(2) + "\n"); }

    json& manifest() { return manifest_; }

    void note_input(const std::string& path) {
        manifest_["input"] = {{"path", path}, {"checksum_fnv1a64", file_checksum_hex(path)}};
    }

    void note_rng(std::uint64_t seed) {
        manifest_["rng"] = {{"algorithm", RngStream::kAlgorithm}, {"master_seed", seed}};
    }

    void finish() {
        manifest_["outputs"] = files_;
        write_text_file((fs::path(dir_) / "manifest.json").string(), manifest_.dump(2) + "\n");
    }

    const std::string& dir() const { return dir_; }

private:
    std::string dir_;
    json manifest_;
    std::vector<std::string> files_;
};

Date parse_date_flag(const std::string& text, const std::string& flag) {
    try {
        return parse_date(text);
    } catch (const Error& e) {
        throw ConfigError(flag + ": " + e.what());
    }
}

struct InputFlags {
    std::string path;
    std::string date_col = "date";
    std::string close_col = "close";

    void attach(CLI::App* cmd) {
        cmd->add_option("--input", path, "daily close CSV")->required();
        cmd->add_option("--date-col", date_col, "date column name");
        cmd->add_option("--close-col", close_col, "close column name");
    }

    PriceSeries load() const { return load_csv(path, CsvSchema{date_col, close_col}); }
};

struct SweepFlags {
    std::vector<int> T = SweepParams::kDefaultTGrid;
    std::vector<double> k = SweepParams::kDefaultKGrid;
    int n_p = 1000;
    int tau_max = 1000;
    int smooth = 3;
    std::uint64_t seed = 0;
    double sigma = 0.0;
    int workers = 0;

    void attach(CLI::App* cmd) {
        cmd->add_option("--T", T, "shuffle window lengths (trading days)")->delimiter(',');
        cmd->add_option("--k", k, "level magnitudes in units of sigma")->delimiter(',');
        cmd->add_option("--np", n_p, "permutations per cell");
        cmd->add_option("--tau-max", tau_max, "waiting-time cap (trading days)");
        cmd->add_option("--smooth", smooth, "mode smoothing window (odd, 1 = off)");
        cmd->add_option("--seed", seed, "master seed");
        cmd->add_option("--sigma", sigma, "daily volatility for levels (0 = from data)");
        cmd->add_option("--workers", workers, "worker threads (0 = hardware)")
            ->envname("INVSTAT_WORKERS");
    }

    SweepParams params() const {
        SweepParams p;
        p.T_list = T;
        p.k_list = k;
        p.n_p = n_p;
        p.tau_max = tau_max;
        p.smooth_window = smooth;
        p.master_seed = seed;
        p.workers = workers;
        p.sigma = sigma;
        return p;
    }

    json config() const {
        return {{"T", T},         {"k", k},           {"n_p", n_p},
                {"tau_max", tau_max}, {"smooth", smooth}, {"sigma", sigma},
                {"workers", workers}};
    }
};

std::string level_tag(double k) {
    std::string tag = fmt_double(k);
    return tag;
}

void run_ingest(const InputFlags& in, const std::string& out_dir, const std::string& label) {
    const PriceSeries raw = in.load();
    const PriceSeries p(raw.dates(), raw.close(), label.empty() ? raw.label() : label);
    const ReturnSeries r = daily_returns(to_log(p));
    const double sigma = volatility(r);

    RunOutput out(out_dir, "ingest");
    out.note_input(in.path);
    out.manifest()["config"] = {{"date_col", in.date_col},
                                {"close_col", in.close_col},
                                {"label", p.label()}};
    out.manifest()["summary"] = {{"rows", p.size()},
                                 {"first_date", format_date(p.dates().front())},
                                 {"last_date", format_date(p.dates().back())},
                                 {"sigma", sigma}};
    write_price_csv(p, (fs::path(out.dir()) / "prices.csv").string());
    out.manifest()["outputs"] = json::array({"prices.csv"});
    out.finish();
    std::printf("ingested %zu rows (%s .. %s), sigma=%s\n", p.size(),
                format_date(p.dates().front()).c_str(), format_date(p.dates().back()).c_str(),
                fmt_double(sigma).c_str());
}

void run_synth(const std::string& kind, std::size_t n, double sigma, double nu, double scale,
               const DropReboundParams& dr, std::uint64_t seed, const std::string& origin_text,
               double s0, std::string label, const std::string& out_dir) {
    const Date origin = parse_date_flag(origin_text, "--origin");
    if (label.empty()) label = kind;

    ReturnSeries r;
    if (kind == "gaussian") {
        r = gen_gaussian_returns(n, sigma, gaussian_stream(seed));
    } else if (kind == "student-t") {
        r = gen_student_t_returns(n, nu, scale, student_t_stream(seed));
    } else if (kind == "drop-rebound") {
        r = gen_drop_rebound_returns(n, dr, drop_rebound_stream(seed));
    } else {
        throw ConfigError("--kind must be gaussian, student-t or drop-rebound");
    }
    const PriceSeries p = to_price_series(r, origin, s0, label);

    RunOutput out(out_dir, "synth");
    out.note_rng(seed);
    json config = {{"kind", kind},   {"n", n},           {"origin", origin_text},
                   {"s0", s0},       {"label", label}};
    if (kind == "gaussian") config["sigma"] = sigma;
    if (kind == "student-t") {
        config["nu"] = nu;
        config["scale"] = scale;
    }
    if (kind == "drop-rebound") {
        config["sigma"] = dr.sigma;
        config["drop_magnitude"] = dr.drop_magnitude;
        config["rebound_len"] = dr.rebound_len;
        config["drop_prob"] = dr.drop_prob;
    }
    out.manifest()["config"] = std::move(config);
    out.manifest()["summary"] = {{"rows", p.size()}, {"sample_sigma", volatility(r)}};
    write_price_csv(p, (fs::path(out.dir()) / "prices.csv").string());
    out.manifest()["outputs"] = json::array({"prices.csv"});
    out.finish();
    std::printf("synthesized %zu %s days, sample sigma=%s\n", r.size(), kind.c_str(),
                fmt_double(volatility(r)).c_str());
}

void run_fpt(const InputFlags& in, double k, const std::string& sign, double sigma_flag,
             int tau_max, int smooth, const std::string& out_dir) {
    const PriceSeries p = in.load();
    const LogSeries s = to_log(p);
    const ReturnSeries r = daily_returns(s);
    const double sigma = sigma_flag > 0.0 ? sigma_flag : volatility(r);
    if (!(k > 0.0)) throw ConfigError("--k must be > 0 (sign is chosen via --sign)");
    const bool want_plus = sign == "both" || sign == "plus";
    const bool want_minus = sign == "both" || sign == "minus";
    if (!want_plus && !want_minus) throw ConfigError("--sign must be both, plus or minus");

    RunOutput out(out_dir, "fpt");
    out.note_input(in.path);
    out.manifest()["config"] = {{"k", k},         {"sign", sign},     {"sigma", sigma},
                                {"tau_max", tau_max}, {"smooth", smooth}};
    json summary;
    summary["sigma"] = sigma;
    if (want_plus) {
        const FptDistribution d = fpt_distribution(s, ReturnLevel(k, sigma), tau_max);
        out.write("fpt_plus.csv", fpt_distribution_csv(d));
        summary["plus"] = fpt_distribution_json(d, smooth);
        std::printf("mode tau*(+%s sigma) = %d\n", fmt_double(k).c_str(), mode_tau(d, smooth));
    }
    if (want_minus) {
        const FptDistribution d = fpt_distribution(s, ReturnLevel(-k, sigma), tau_max);
        out.write("fpt_minus.csv", fpt_distribution_csv(d));
        summary["minus"] = fpt_distribution_json(d, smooth);
        std::printf("mode tau*(-%s sigma) = %d\n", fmt_double(k).c_str(), mode_tau(d, smooth));
    }
    out.write_json("fpt.json", summary);
    out.finish();
}

void run_sweep(const InputFlags& in, const SweepFlags& flags, const std::string& out_dir) {
    const PriceSeries p = in.load();
    const ReturnSeries r = daily_returns(to_log(p));
    const SweepResult result = sweep(r, flags.params());

    RunOutput out(out_dir, "sweep");
    out.note_input(in.path);
    out.note_rng(flags.seed);
    out.manifest()["config"] = flags.config();
    out.manifest()["summary"] = {{"sigma", result.sigma}, {"cells", result.cells.size()}};
    out.write("sweep.csv", sweep_csv(result));
    out.write_json("sweep.json", sweep_json(result));
    out.finish();
    std::printf("swept %zu cells at sigma=%s\n", result.cells.size(),
                fmt_double(result.sigma).c_str());
}

void write_era_tables(RunOutput& out, const EraResult& era, const std::string& tag) {
    for (const AsymmetryCurve& c : era.curves) {
        out.write("asymmetry_" + tag + "_k" + level_tag(c.k) + ".csv", asymmetry_curve_csv(c));
    }
    out.write("theta_" + tag + ".csv", theta_table_csv(era.curves, era.thetas));
}

void run_era_command(const PriceSeries& p, const std::string& input_path, const Date& boundary,
                     const SweepFlags& flags, int T_inf, int theta_T_hi, std::size_t min_era_days,
                     const std::string& out_dir, const std::string& command) {
    EraReportParams params;
    params.sweep = flags.params();
    params.T_inf = T_inf;
    params.theta_T_hi = theta_T_hi;
    params.min_era_days = min_era_days;
    const EraComparison cmp = era_report(p, boundary, params);

    RunOutput out(out_dir, command);
    out.note_input(input_path);
    out.note_rng(flags.seed);
    out.manifest()["config"] = flags.config();
    out.manifest()["config"]["boundary"] = format_date(boundary);
    out.manifest()["config"]["T_inf"] = T_inf;
    out.manifest()["config"]["theta_T_hi"] = theta_T_hi;
    write_era_tables(out, cmp.first, "era1");
    write_era_tables(out, cmp.second, "era2");
    out.write_json("era.json", era_comparison_json(cmp));
    out.finish();
    for (const EraResult* era : {&cmp.first, &cmp.second}) {
        for (std::size_t i = 0; i < era->thetas.size(); ++i) {
            std::printf("%s: k=%s theta=%s +- %s\n", era->label.c_str(),
                        fmt_double(era->curves[i].k).c_str(),
                        fmt_double(era->thetas[i].theta).c_str(),
                        fmt_double(era->thetas[i].std_error).c_str());
        }
    }
}

void run_asymmetry(const InputFlags& in, const SweepFlags& flags, int T_inf, int theta_T_hi,
                   const std::string& eras, std::size_t min_era_days, const std::string& out_dir) {
    const PriceSeries p = in.load();
    if (!eras.empty()) {
        const Date boundary = parse_date_flag(eras, "--eras");
        run_era_command(p, in.path, boundary, flags, T_inf, theta_T_hi, min_era_days, out_dir,
                        "asymmetry");
        return;
    }
    const ReturnSeries r = daily_returns(to_log(p));
    const SweepResult result = sweep(r, flags.params());

    RunOutput out(out_dir, "asymmetry");
    out.note_input(in.path);
    out.note_rng(flags.seed);
    out.manifest()["config"] = flags.config();
    out.manifest()["config"]["T_inf"] = T_inf;
    out.manifest()["config"]["theta_T_hi"] = theta_T_hi;
    out.manifest()["summary"] = {{"sigma", result.sigma}};
    std::vector<AsymmetryCurve> curves;
    std::vector<ThetaFit> fits;
    for (double k : flags.k) {
        curves.push_back(build_asymmetry_curve(result, k, T_inf));
        fits.push_back(theta_fit(curves.back(), theta_T_hi));
        out.write("asymmetry_k" + level_tag(k) + ".csv", asymmetry_curve_csv(curves.back()));
        std::printf("k=%s: theta=%s +- %s (n=%d, excluded=%d)\n", fmt_double(k).c_str(),
                    fmt_double(fits.back().theta).c_str(),
                    fmt_double(fits.back().std_error).c_str(), fits.back().n_points,
                    fits.back().n_excluded);
    }
    out.write("theta.csv", theta_table_csv(curves, fits));
    out.write("sweep.csv", sweep_csv(result));
    out.finish();
}

void run_leverage(const InputFlags& in, int tau_lo, int tau_hi, const std::string& out_dir) {
    const PriceSeries p = in.load();
    const ReturnSeries r = daily_returns(to_log(p));
    const LeverageCurve c = leverage(r, tau_lo, tau_hi);

    RunOutput out(out_dir, "leverage");
    out.note_input(in.path);
    out.manifest()["config"] = {{"tau_lo", tau_lo}, {"tau_hi", tau_hi}};
    out.manifest()["summary"] = {{"sigma", volatility(r)}};
    out.write("leverage.csv", leverage_csv(c));
    out.finish();
    std::printf("leverage over tau in [%d, %d], %zu lags\n", tau_lo, tau_hi, c.taus.size());
}

void run_report(const InputFlags& in, const SweepFlags& flags, double k_fpt, int T_inf,
                int theta_T_hi, const std::string& eras, std::size_t min_era_days, int tau_lo,
                int tau_hi, const std::string& out_dir) {
    const PriceSeries p = in.load();
    const LogSeries s = to_log(p);
    const ReturnSeries r = daily_returns(s);
    const double sigma = flags.sigma > 0.0 ? flags.sigma : volatility(r);

    RunOutput out(out_dir, "report");
    out.note_input(in.path);
    out.note_rng(flags.seed);
    out.manifest()["config"] = flags.config();
    out.manifest()["config"]["k_fpt"] = k_fpt;
    out.manifest()["config"]["T_inf"] = T_inf;
    out.manifest()["config"]["theta_T_hi"] = theta_T_hi;
    out.manifest()["config"]["tau_lo"] = tau_lo;
    out.manifest()["config"]["tau_hi"] = tau_hi;
    out.manifest()["summary"] = {{"sigma", sigma}};

    // Unshuffled first-passage distributions at +-k_fpt sigma.
    json fpt_summary;
    fpt_summary["sigma"] = sigma;
    for (int sign01 = 0; sign01 < 2; ++sign01) {
        const double k_signed = sign01 == 0 ? k_fpt : -k_fpt;
        const FptDistribution d = fpt_distribution(s, ReturnLevel(k_signed, sigma), flags.tau_max);
        out.write(sign01 == 0 ? "fpt_plus.csv" : "fpt_minus.csv", fpt_distribution_csv(d));
        fpt_summary[sign01 == 0 ? "plus" : "minus"] = fpt_distribution_json(d, flags.smooth);
    }
    out.write_json("fpt.json", fpt_summary);

    // Shuffle sweep and the asymmetry measures derived from it.
    SweepParams sp = flags.params();
    sp.sigma = sigma;
    const SweepResult result = sweep(r, sp);
    out.write("sweep.csv", sweep_csv(result));
    out.write_json("sweep.json", sweep_json(result));
    std::vector<AsymmetryCurve> curves;
    std::vector<ThetaFit> fits;
    for (double k : flags.k) {
        curves.push_back(build_asymmetry_curve(result, k, T_inf));
        fits.push_back(theta_fit(curves.back(), theta_T_hi));
        out.write("asymmetry_k" + level_tag(k) + ".csv", asymmetry_curve_csv(curves.back()));
    }
    out.write("theta.csv", theta_table_csv(curves, fits));

    out.write("leverage.csv", leverage_csv(leverage(r, tau_lo, tau_hi)));
    out.finish();
    std::printf("report written to %s\n", out.dir().c_str());

    if (!eras.empty()) {
        const Date boundary = parse_date_flag(eras, "--eras");
        run_era_command(p, in.path, boundary, flags, T_inf, theta_T_hi, min_era_days,
                        (fs::path(out_dir) / "era").string(), "report-era");
    }
}

int run(int argc, char** argv) {
    CLI::App app{"inverse statistics of daily price series"};
    app.require_subcommand(1);
    std::string out_dir = "invstat_out";
    app.add_option("--out", out_dir, "output directory")->envname("INVSTAT_OUT_DIR");
    app.set_version_flag("--version", std::string(kVersion));

    // ingest
    auto* ingest = app.add_subcommand("ingest", "validate and normalize a price CSV");
    InputFlags ingest_in;
    ingest_in.attach(ingest);
    std::string ingest_label;
    ingest->add_option("--label", ingest_label, "series label");

    // synth
    auto* synth = app.add_subcommand("synth", "generate a synthetic price series");
    std::string synth_kind = "gaussian";
    std::size_t synth_n = 20000;
    double synth_sigma = 0.01, synth_nu = 3.0, synth_scale = 0.01, synth_s0 = 100.0;
    DropReboundParams synth_dr;
    std::uint64_t synth_seed = 0;
    std::string synth_origin = "1928-10-01", synth_label;
    synth->add_option("--kind", synth_kind, "gaussian | student-t | drop-rebound");
    synth->add_option("--n", synth_n, "number of trading days");
    synth->add_option("--sigma", synth_sigma, "daily std (gaussian / drop-rebound baseline)");
    synth->add_option("--nu", synth_nu, "student-t shape");
    synth->add_option("--scale", synth_scale, "student-t scale");
    synth->add_option("--drop-magnitude", synth_dr.drop_magnitude, "planted drop size");
    synth->add_option("--rebound-len", synth_dr.rebound_len, "rebound length (days)");
    synth->add_option("--drop-prob", synth_dr.drop_prob, "per-day drop probability");
    synth->add_option("--seed", synth_seed, "master seed");
    synth->add_option("--origin", synth_origin, "date of the first row");
    synth->add_option("--s0", synth_s0, "starting price");
    synth->add_option("--label", synth_label, "series label");

    // fpt
    auto* fpt = app.add_subcommand("fpt", "first-passage distribution of the unshuffled series");
    InputFlags fpt_in;
    fpt_in.attach(fpt);
    double fpt_k = 5.0, fpt_sigma = 0.0;
    int fpt_tau_max = 1000, fpt_smooth = 3;
    std::string fpt_sign = "both";
    fpt->add_option("--k", fpt_k, "level magnitude in sigma units");
    fpt->add_option("--sign", fpt_sign, "both | plus | minus");
    fpt->add_option("--sigma", fpt_sigma, "volatility override (0 = from data)");
    fpt->add_option("--tau-max", fpt_tau_max, "waiting-time cap");
    fpt->add_option("--smooth", fpt_smooth, "mode smoothing window");

    // sweep
    auto* sweep_cmd = app.add_subcommand("sweep", "permutation-averaged shuffle sweep");
    InputFlags sweep_in;
    sweep_in.attach(sweep_cmd);
    SweepFlags sweep_flags;
    sweep_flags.attach(sweep_cmd);

    // asymmetry
    auto* asym = app.add_subcommand("asymmetry", "w(T), w_pm(T,1) and theta fits");
    InputFlags asym_in;
    asym_in.attach(asym);
    SweepFlags asym_flags;
    asym_flags.attach(asym);
    int asym_T_inf = 1000, asym_theta_hi = 30;
    std::string asym_eras;
    std::size_t asym_min_era = 504;
    asym->add_option("--T-inf", asym_T_inf, "window treated as T=infinity");
    asym->add_option("--theta-T-hi", asym_theta_hi, "theta fit upper bound (T < hi)");
    asym->add_option("--eras", asym_eras, "era boundary date; runs the per-era pipeline");
    asym->add_option("--min-era-days", asym_min_era, "minimum rows per era");

    // leverage
    auto* lev = app.add_subcommand("leverage", "leverage correlation L(tau)");
    InputFlags lev_in;
    lev_in.attach(lev);
    int lev_lo = -25, lev_hi = 50;
    lev->add_option("--tau-lo", lev_lo, "first lag");
    lev->add_option("--tau-hi", lev_hi, "last lag");

    // era
    auto* era = app.add_subcommand("era", "split at a boundary and compare eras");
    InputFlags era_in;
    era_in.attach(era);
    SweepFlags era_flags;
    era_flags.attach(era);
    std::string era_boundary = "1980-01-01";
    int era_T_inf = 1000, era_theta_hi = 30;
    std::size_t era_min_days = 504;
    era->add_option("--boundary", era_boundary, "era boundary date");
    era->add_option("--T-inf", era_T_inf, "window treated as T=infinity");
    era->add_option("--theta-T-hi", era_theta_hi, "theta fit upper bound");
    era->add_option("--min-era-days", era_min_days, "minimum rows per era");

    // report
    auto* report = app.add_subcommand("report", "full pipeline: fpt, sweep, asymmetry, leverage");
    InputFlags report_in;
    report_in.attach(report);
    SweepFlags report_flags;
    report_flags.attach(report);
    double report_k_fpt = 5.0;
    int report_T_inf = 1000, report_theta_hi = 30, report_lo = -25, report_hi = 50;
    std::string report_eras;
    std::size_t report_min_era = 504;
    report->add_option("--k-fpt", report_k_fpt, "level for the unshuffled distributions");
    report->add_option("--T-inf", report_T_inf, "window treated as T=infinity");
    report->add_option("--theta-T-hi", report_theta_hi, "theta fit upper bound");
    report->add_option("--tau-lo", report_lo, "leverage first lag");
    report->add_option("--tau-hi", report_hi, "leverage last lag");
    report->add_option("--eras", report_eras, "optional era boundary date");
    report->add_option("--min-era-days", report_min_era, "minimum rows per era");

    // Let the global --out appear after a subcommand name as well.
    for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        std::cout << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        std::cout << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::CallForVersion&) {
        std::cout << kVersion << "\n";
        return 0;
    } catch (const CLI::ParseError& e) {
        std::cerr << "error: category=config: " << e.what() << "\n";
        return static_cast<int>(ErrorCategory::config);
    }

    if (*ingest) {
        run_ingest(ingest_in, out_dir, ingest_label);
    } else if (*synth) {
        run_synth(synth_kind, synth_n, synth_sigma, synth_nu, synth_scale, synth_dr, synth_seed,
                  synth_origin, synth_s0, synth_label, out_dir);
    } else if (*fpt) {
        run_fpt(fpt_in, fpt_k, fpt_sign, fpt_sigma, fpt_tau_max, fpt_smooth, out_dir);
    } else if (*sweep_cmd) {
        run_sweep(sweep_in, sweep_flags, out_dir);
    } else if (*asym) {
        run_asymmetry(asym_in, asym_flags, asym_T_inf, asym_theta_hi, asym_eras, asym_min_era,
                      out_dir);
    } else if (*lev) {
        run_leverage(lev_in, lev_lo, lev_hi, out_dir);
    } else if (*era) {
        run_era_command(era_in.load(), era_in.path, parse_date_flag(era_boundary, "--boundary"),
                        era_flags, era_T_inf, era_theta_hi, era_min_days, out_dir, "era");
    } else if (*report) {
        run_report(report_in, report_flags, report_k_fpt, report_T_inf, report_theta_hi,
                   report_eras, report_min_era, report_lo, report_hi, out_dir);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const Error& e) {
        std::cerr << "error: category=" << category_name(e.category()) << ": " << e.what() << "\n";
        return static_cast<int>(e.category());
    } catch (const std::exception& e) {
        std::cerr << "error: category=internal: " << e.what() << "\n";
        return 1;
    }
}
