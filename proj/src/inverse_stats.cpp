#include "invstat/inverse_stats.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "invstat/errors.hpp"
#include "invstat/fitting.hpp"

namespace invstat {

ReturnLevel::ReturnLevel(double k_signed, double sigma_used)
    : k(k_signed), sigma(sigma_used), rho(k_signed * sigma_used) {
    if (!(sigma_used > 0.0)) throw DataError("ReturnLevel: sigma must be > 0");
    if (rho == 0.0 || !std::isfinite(rho)) {
        throw DataError("ReturnLevel: level k*sigma must be finite and nonzero");
    }
}

void FptDistribution::merge(const FptDistribution& other) {
    if (tau_max != other.tau_max || rho != other.rho) {
        throw DataError("FptDistribution::merge: incompatible histograms");
    }
    for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += other.counts[i];
    total_starts += other.total_starts;
    censored += other.censored;
}

std::optional<int> first_passage(const LogSeries& s, std::size_t t, const ReturnLevel& level,
                                 int tau_max) {
    if (t + 2 > s.size()) {
        throw std::out_of_range("first_passage: start index " + std::to_string(t) +
                                " out of range for series of length " + std::to_string(s.size()));
    }
    if (tau_max < 1) throw DataError("first_passage: tau_max must be >= 1");
    const double base = s.s[t];
    const double rho = level.rho;
    const std::size_t horizon =
        std::min<std::size_t>(static_cast<std::size_t>(tau_max), s.size() - 1 - t);
    if (rho > 0.0) {
        for (std::size_t dt = 1; dt <= horizon; ++dt) {
            if (s.s[t + dt] - base >= rho) return static_cast<int>(dt);
        }
    } else {
        for (std::size_t dt = 1; dt <= horizon; ++dt) {
            if (s.s[t + dt] - base <= rho) return static_cast<int>(dt);
        }
    }
    return std::nullopt;
}

FptDistribution fpt_distribution(const LogSeries& s, const ReturnLevel& level, int tau_max) {
    if (s.size() < 2) throw DataError("fpt_distribution: need at least 2 points");
    if (tau_max < 1) throw DataError("fpt_distribution: tau_max must be >= 1");
    FptDistribution d;
    d.counts.assign(static_cast<std::size_t>(tau_max) + 1, 0);
    d.tau_max = tau_max;
    d.rho = level.rho;
    d.sigma = level.sigma;
    for (std::size_t t = 0; t + 2 <= s.size(); ++t) {
        ++d.total_starts;
        if (auto tau = first_passage(s, t, level, tau_max)) {
            ++d.counts[static_cast<std::size_t>(*tau)];
        } else {
            ++d.censored;
        }
    }
    return d;
}

int mode_tau(std::span<const std::uint64_t> counts, int smooth_window) {
    if (counts.size() < 2) throw DataError("mode_tau: histogram has no tau >= 1 bins");
    if (smooth_window < 1 || smooth_window % 2 == 0) {
        throw DataError("mode_tau: smooth_window must be odd and >= 1");
    }
    const int tau_max = static_cast<int>(counts.size()) - 1;
    const int half = smooth_window / 2;
    int best_tau = 1;
    std::uint64_t best_mass = 0;
    bool first = true;
    for (int tau = 1; tau <= tau_max; ++tau) {
        std::uint64_t mass = 0;
        for (int j = tau - half; j <= tau + half; ++j) {
            if (j >= 1 && j <= tau_max) mass += counts[static_cast<std::size_t>(j)];
        }
        if (first || mass > best_mass) {
            best_mass = mass;
            best_tau = tau;
            first = false;
        }
    }
    return best_tau;
}

int mode_tau(const FptDistribution& d, int smooth_window) {
    return mode_tau(std::span<const std::uint64_t>(d.counts), smooth_window);
}

double brownian_fpt_pdf(double rho, double diffusion, double tau) {
    if (!(diffusion > 0.0)) throw DataError("brownian_fpt_pdf: diffusion must be > 0");
    if (!(tau > 0.0)) throw DataError("brownian_fpt_pdf: tau must be > 0");
    if (rho == 0.0) throw DataError("brownian_fpt_pdf: rho must be nonzero");
    const double a = std::abs(rho);
    return a / std::sqrt(4.0 * std::numbers::pi * diffusion * tau * tau * tau) *
           std::exp(-rho * rho / (4.0 * diffusion * tau));
}

namespace {

// Logarithmic bin edges with integer boundaries: each edge advances by at
// least one day and otherwise by the bin ratio. Returns half-open bins
// [edges[i], edges[i+1]).
std::vector<int> log_bin_edges(int lo, int hi, double ratio) {
    std::vector<int> edges;
    edges.push_back(lo);
    int e = lo;
    while (e <= hi) {
        const int next = std::max(e + 1, static_cast<int>(std::lround(e * ratio)));
        edges.push_back(next);
        e = next;
    }
    return edges;
}

}  // namespace

FitResult tail_exponent(const FptDistribution& d, int fit_lo, int fit_hi) {
    if (fit_lo < 1 || fit_hi > d.tau_max || fit_lo >= fit_hi) {
        throw DataError("tail_exponent: invalid fit range [" + std::to_string(fit_lo) + ", " +
                        std::to_string(fit_hi) + "] for tau_max " + std::to_string(d.tau_max));
    }
    const std::uint64_t realized = d.realized();
    if (realized == 0) throw FitError("tail_exponent: no realized passages to fit");

    const std::vector<int> edges = log_bin_edges(fit_lo, fit_hi, 1.25);
    std::vector<double> log_tau;
    std::vector<double> log_density;
    for (std::size_t b = 0; b + 1 < edges.size(); ++b) {
        const int lo = edges[b];
        const int hi = std::min(edges[b + 1], fit_hi + 1);  // clip last bin at the range end
        if (lo >= hi) continue;
        std::uint64_t mass = 0;
        for (int tau = lo; tau < hi; ++tau) mass += d.counts[static_cast<std::size_t>(tau)];
        if (mass == 0) continue;  // empty bins carry no log-density information
        const double width = static_cast<double>(hi - lo);
        const double density = static_cast<double>(mass) / (static_cast<double>(realized) * width);
        const double center = std::sqrt(static_cast<double>(lo) * static_cast<double>(hi - 1));
        log_tau.push_back(std::log(center));
        log_density.push_back(std::log(density));
    }
    if (log_tau.size() < 3) {
        throw FitError("tail_exponent: fewer than 3 populated bins in fit range");
    }

    const LinearFit fit = linfit(log_tau, log_density);
    FitResult out;
    out.value = -fit.slope;
    out.std_error = fit.slope_std_error;
    out.fit_lo = fit_lo;
    out.fit_hi = fit_hi;
    out.residual_norm = std::sqrt(std::max(0.0, 1.0 - fit.r_squared));
    out.n_points = static_cast<int>(log_tau.size());
    return out;
}

FitResult gamma_scaling(std::span<const std::pair<double, double>> rho_tau_star,
                        double fit_min_abs_rho) {
    std::vector<double> log_rho;
    std::vector<double> log_tau;
    for (const auto& [rho, tau_star] : rho_tau_star) {
        const double a = std::abs(rho);
        if (a <= fit_min_abs_rho) continue;
        if (!(tau_star > 0.0)) {
            throw FitError("gamma_scaling: tau* must be > 0 at |rho| = " + std::to_string(a));
        }
        log_rho.push_back(std::log(a));
        log_tau.push_back(std::log(tau_star));
    }
    if (log_rho.size() < 3) {
        throw FitError("gamma_scaling: fewer than 3 levels above |rho| threshold");
    }
    const LinearFit fit = linfit(log_rho, log_tau);
    FitResult out;
    out.value = fit.slope;
    out.std_error = fit.slope_std_error;
    out.fit_lo = fit_min_abs_rho;
    out.fit_hi = 0.0;
    out.residual_norm = std::sqrt(std::max(0.0, 1.0 - fit.r_squared));
    out.n_points = static_cast<int>(log_rho.size());
    return out;
}

}  // namespace invstat
