#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "invstat/market_data.hpp"

namespace invstat {

// A log-return target level, recorded together with the volatility it was
// derived from so k*sigma levels stay auditable.
struct ReturnLevel {
    double k = 0.0;      // signed multiplier, level = k * sigma
    double sigma = 0.0;  // daily volatility the level refers to
    double rho = 0.0;    // k * sigma, dimensionless log-return

    ReturnLevel() = default;
    ReturnLevel(double k_signed, double sigma_used);  // validates rho != 0

    bool positive() const noexcept { return rho > 0.0; }
};

// Histogram of first-passage waiting times in integer trading days.
// counts[tau] for tau in [1, tau_max]; index 0 is unused (dt >= 1).
// Invariant: sum(counts) + censored == total_starts.
struct FptDistribution {
    std::vector<std::uint64_t> counts;  // size tau_max + 1
    std::uint64_t total_starts = 0;
    std::uint64_t censored = 0;
    int tau_max = 0;
    double rho = 0.0;    // level the histogram was built for
    double sigma = 0.0;  // volatility backing the level (0 when unknown)

    std::uint64_t realized() const noexcept { return total_starts - censored; }

    // Elementwise merge; both sides must share tau_max and rho.
    void merge(const FptDistribution& other);
};

struct FitResult {
    double value = 0.0;      // exponent or time constant
    double std_error = 0.0;  // standard error of `value`
    double fit_lo = 0.0;
    double fit_hi = 0.0;
    double residual_norm = 0.0;
    int n_points = 0;
};

// Smallest dt >= 1 with s(t+dt)-s(t) >= rho (rho > 0) or <= rho (rho < 0),
// searched up to min(tau_max, length-1-t). Empty when censored.
std::optional<int> first_passage(const LogSeries& s, std::size_t t,
                                 const ReturnLevel& level, int tau_max);

// Aggregates first_passage over every start t in [0, length-2].
FptDistribution fpt_distribution(const LogSeries& s, const ReturnLevel& level, int tau_max);

// Most probable waiting time: argmax of the histogram after a centered
// moving-sum of width smooth_window (odd; 1 = off, zero-padded at the
// edges). Ties break toward smaller tau.
int mode_tau(const FptDistribution& d, int smooth_window = 3);
int mode_tau(std::span<const std::uint64_t> counts, int smooth_window = 3);

// Brownian first-passage density |rho| / sqrt(4 pi D tau^3) * exp(-rho^2/(4 D tau)).
double brownian_fpt_pdf(double rho, double diffusion, double tau);

// Tail exponent alpha of p(tau) ~ tau^-alpha from a log-log least squares
// over logarithmically binned counts (bin ratio 1.25, integer edges) in
// [fit_lo, fit_hi]. Density per bin = count / (realized * width).
FitResult tail_exponent(const FptDistribution& d, int fit_lo, int fit_hi);

// Scaling exponent gamma of tau* ~ |rho|^gamma over levels with
// |rho| > fit_min_abs_rho. Caller splits by sign.
FitResult gamma_scaling(std::span<const std::pair<double, double>> rho_tau_star,
                        double fit_min_abs_rho);

}  // namespace invstat
