#pragma once

#include <optional>
#include <string>
#include <vector>

#include "invstat/fitting.hpp"
#include "invstat/market_data.hpp"
#include "invstat/shuffler.hpp"

namespace invstat {

// Signed gap tau*_+ - tau*_- of one sweep cell; positive when gains need
// longer horizons.
double delta_tau(const SweepCell& cell);

// w(T) = delta_tau(T) / delta_tau(T_inf).
double w_of_T(double delta_tau_T, double delta_tau_inf);

// w_pm(T,1) = (tau*_pm(T) - tau*(1)) / (tau*_pm(inf) - tau*(1)), computed
// per sign so w_pm(1) is exactly 0.
double w_pm(double tau_star_pm_T, double tau_star_1, double tau_star_pm_inf);

// w(T) and w_pm(T,1) across the sweep's T grid for one level magnitude k.
// A vanishing w_pm normalization (tau*_pm(inf) == tau*_pm(1)) is flagged per
// sign rather than fatal: the affected column is NaN and *_defined is false.
struct AsymmetryCurve {
    double k = 0.0;
    double rho_abs = 0.0;
    double sigma = 0.0;
    std::vector<int> T;  // ascending, the sweep grid
    std::vector<double> w;
    std::vector<double> w_plus;
    std::vector<double> w_minus;
    bool w_plus_defined = true;
    bool w_minus_defined = true;
    double tau_star_inf_plus = 0.0;
    double tau_star_inf_minus = 0.0;
    double tau_star_1_plus = 0.0;
    double tau_star_1_minus = 0.0;
    double tau_star_1 = 0.0;  // mean of the two signs at T=1
    double delta_tau_inf = 0.0;
    int T_inf = 1000;
};

// Requires cells at T=1 and T=T_inf for level k. Throws DataError when the
// grid misses them or when delta_tau(T_inf) vanishes (w is then undefined).
AsymmetryCurve build_asymmetry_curve(const SweepResult& sweep_result, double k, int T_inf = 1000);

struct ThetaFit {
    double theta = 0.0;  // trading days
    double std_error = 0.0;
    int fit_T_lo = 0;
    int fit_T_hi = 0;
    int n_points = 0;
    int n_excluded = 0;  // points with w >= 1 inside the fit range
};

// Exponential fit |1 - w(T)| ~ exp(-T/theta) over T < T_hi; least squares on
// ln(1 - w). Points with w >= 1 are excluded and counted.
ThetaFit theta_fit(const AsymmetryCurve& curve, int T_hi = 30);

struct EraReturnStats {
    std::size_t n_days = 0;
    double mean = 0.0;
    double mean_std_error = 0.0;
    double sigma = 0.0;
    double sigma_std_error = 0.0;  // large-sample approx sigma/sqrt(2(n-1))
};

struct EraResult {
    std::string label;
    Date start;
    Date end;
    EraReturnStats returns;
    std::vector<AsymmetryCurve> curves;  // one per k
    std::vector<ThetaFit> thetas;        // aligned with curves
};

struct EraComparison {
    EraResult first;   // strictly before the boundary
    EraResult second;  // at/after the boundary
    Date boundary;
    // Two-sample stats on the daily-return distributions.
    double mean_diff_z = 0.0;       // (m1-m2)/sqrt(se1^2+se2^2)
    double variance_ratio = 0.0;    // var1/var2
};

struct EraReportParams {
    SweepParams sweep;
    int T_inf = 1000;
    int theta_T_hi = 30;
    std::size_t min_era_days = 504;  // ~2 trading years
};

// Runs the full shuffle-sweep pipeline independently per era with per-era
// volatility. Levels are k * sigma_era.
EraComparison era_report(const PriceSeries& p, const Date& boundary, const EraReportParams& params);

}  // namespace invstat
