#include "invstat/export.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "invstat/errors.hpp"

namespace invstat {

std::string fmt_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

std::string fpt_distribution_csv(const FptDistribution& d) {
    std::string out = "tau,count,probability\n";
    int last = 0;
    for (int tau = d.tau_max; tau >= 1; --tau) {
        if (d.counts[static_cast<std::size_t>(tau)] > 0) {
            last = tau;
            break;
        }
    }
    const double realized = static_cast<double>(d.realized());
    for (int tau = 1; tau <= last; ++tau) {
        const std::uint64_t c = d.counts[static_cast<std::size_t>(tau)];
        out += std::to_string(tau);
        out += ',';
        out += std::to_string(c);
        out += ',';
        out += fmt_double(realized > 0.0 ? static_cast<double>(c) / realized : 0.0);
        out += '\n';
    }
    return out;
}

nlohmann::json fpt_distribution_json(const FptDistribution& d, int smooth_window) {
    nlohmann::json counts = nlohmann::json::array();
    for (int tau = 1; tau <= d.tau_max; ++tau) {
        const std::uint64_t c = d.counts[static_cast<std::size_t>(tau)];
        if (c > 0) counts.push_back({tau, c});
    }
    return nlohmann::json{
        {"rho", d.rho},
        {"sigma", d.sigma},
        {"tau_max", d.tau_max},
        {"total_starts", d.total_starts},
        {"censored", d.censored},
        {"smooth_window", smooth_window},
        {"mode", mode_tau(d, smooth_window)},
        {"counts", std::move(counts)},
    };
}

std::string sweep_csv(const SweepResult& s) {
    std::string out = "T,k,sign,tau_star,dispersion,n_p,censored_frac\n";
    for (const SweepCell& cell : s.cells) {
        for (int sign01 = 0; sign01 < 2; ++sign01) {
            const SignStats& stats = sign01 == 0 ? cell.plus : cell.minus;
            out += std::to_string(cell.T);
            out += ',';
            out += fmt_double(cell.k);
            out += sign01 == 0 ? ",+," : ",-,";
            out += fmt_double(stats.tau_star);
            out += ',';
            out += fmt_double(stats.dispersion);
            out += ',';
            out += std::to_string(cell.n_p);
            out += ',';
            out += fmt_double(stats.censored_frac);
            out += '\n';
        }
    }
    return out;
}

nlohmann::json sweep_json(const SweepResult& s) {
    nlohmann::json cells = nlohmann::json::array();
    for (const SweepCell& cell : s.cells) {
        nlohmann::json signs;
        for (int sign01 = 0; sign01 < 2; ++sign01) {
            const SignStats& stats = sign01 == 0 ? cell.plus : cell.minus;
            signs[sign01 == 0 ? "plus" : "minus"] = {
                {"tau_star", stats.tau_star},
                {"dispersion", stats.dispersion},
                {"censored_frac", stats.censored_frac},
            };
        }
        cells.push_back({
            {"T", cell.T},
            {"k", cell.k},
            {"rho_abs", cell.rho_abs},
            {"signs", std::move(signs)},
        });
    }
    return nlohmann::json{
        {"sigma", s.sigma},
        {"n_p", s.n_p},
        {"tau_max", s.tau_max},
        {"smooth_window", s.smooth_window},
        {"master_seed", s.master_seed},
        {"rng_algorithm", s.rng_algorithm},
        {"cells", std::move(cells)},
    };
}

std::string asymmetry_curve_csv(const AsymmetryCurve& c) {
    std::string out = "T,w,w_plus,w_minus\n";
    for (std::size_t i = 0; i < c.T.size(); ++i) {
        out += std::to_string(c.T[i]);
        out += ',';
        out += fmt_double(c.w[i]);
        out += ',';
        out += fmt_double(c.w_plus[i]);
        out += ',';
        out += fmt_double(c.w_minus[i]);
        out += '\n';
    }
    return out;
}

std::string theta_table_csv(const std::vector<AsymmetryCurve>& curves,
                            const std::vector<ThetaFit>& fits) {
    if (curves.size() != fits.size()) {
        throw DataError("theta table: curve/fit count mismatch");
    }
    std::string out = "k,rho,theta,theta_std_error,fit_T_lo,fit_T_hi,n_points,n_excluded\n";
    for (std::size_t i = 0; i < curves.size(); ++i) {
        out += fmt_double(curves[i].k);
        out += ',';
        out += fmt_double(curves[i].rho_abs);
        out += ',';
        out += fmt_double(fits[i].theta);
        out += ',';
        out += fmt_double(fits[i].std_error);
        out += ',';
        out += std::to_string(fits[i].fit_T_lo);
        out += ',';
        out += std::to_string(fits[i].fit_T_hi);
        out += ',';
        out += std::to_string(fits[i].n_points);
        out += ',';
        out += std::to_string(fits[i].n_excluded);
        out += '\n';
    }
    return out;
}

namespace {

nlohmann::json era_json(const EraResult& era) {
    nlohmann::json thetas = nlohmann::json::array();
    for (std::size_t i = 0; i < era.curves.size(); ++i) {
        thetas.push_back({
            {"k", era.curves[i].k},
            {"rho", era.curves[i].rho_abs},
            {"theta", era.thetas[i].theta},
            {"theta_std_error", era.thetas[i].std_error},
            {"n_points", era.thetas[i].n_points},
            {"n_excluded", era.thetas[i].n_excluded},
        });
    }
    return nlohmann::json{
        {"label", era.label},
        {"start", format_date(era.start)},
        {"end", format_date(era.end)},
        {"n_days", era.returns.n_days},
        {"mean_return", era.returns.mean},
        {"mean_return_std_error", era.returns.mean_std_error},
        {"sigma", era.returns.sigma},
        {"sigma_std_error", era.returns.sigma_std_error},
        {"thetas", std::move(thetas)},
    };
}

}  // namespace

nlohmann::json era_comparison_json(const EraComparison& e) {
    return nlohmann::json{
        {"boundary", format_date(e.boundary)},
        {"first", era_json(e.first)},
        {"second", era_json(e.second)},
        {"mean_diff_z", e.mean_diff_z},
        {"variance_ratio", e.variance_ratio},
    };
}

std::string leverage_csv(const LeverageCurve& c) {
    std::string out = "tau,L,stderr,n_terms\n";
    for (std::size_t i = 0; i < c.taus.size(); ++i) {
        out += std::to_string(c.taus[i]);
        out += ',';
        out += fmt_double(c.values[i]);
        out += ',';
        out += fmt_double(c.std_errors[i]);
        out += ',';
        out += std::to_string(c.n_terms[i]);
        out += '\n';
    }
    return out;
}

std::uint64_t fnv1a64(const void* data, std::size_t len) {
    const unsigned char* bytes = static_cast<const unsigned char*>(data);
    std::uint64_t h = 14695981039346656037ULL;
    for (std::size_t i = 0; i < len; ++i) {
        h ^= bytes[i];
        h *= 1099511628211ULL;
    }
    return h;
}

std::string file_checksum_hex(const std::string& path) {
    const std::string bytes = read_text_file(path);
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes.data(), bytes.size())));
    return buf;
}

std::string read_text_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot open for reading: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    if (in.bad()) throw IoError("read failed: " + path);
    return ss.str();
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw IoError("cannot open for writing: " + path);
    out << content;
    out.flush();
    if (!out) throw IoError("write failed: " + path);
}

}  // namespace invstat
