#include "invstat/asymmetry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "invstat/errors.hpp"

namespace invstat {

double delta_tau(const SweepCell& cell) { return cell.plus.tau_star - cell.minus.tau_star; }

double w_of_T(double delta_tau_T, double delta_tau_inf) {
    if (delta_tau_inf == 0.0) throw DataError("w(T): asymmetry gap at T_inf is zero");
    return delta_tau_T / delta_tau_inf;
}

double w_pm(double tau_star_pm_T, double tau_star_1, double tau_star_pm_inf) {
    const double denom = tau_star_pm_inf - tau_star_1;
    if (denom == 0.0) throw DataError("w_pm: tau*(inf) equals tau*(1), normalization undefined");
    return (tau_star_pm_T - tau_star_1) / denom;
}

AsymmetryCurve build_asymmetry_curve(const SweepResult& sweep_result, double k, int T_inf) {
    std::vector<const SweepCell*> level_cells;
    for (const SweepCell& c : sweep_result.cells) {
        if (c.k == k) level_cells.push_back(&c);
    }
    if (level_cells.empty()) {
        throw DataError("asymmetry: sweep has no cells at k=" + std::to_string(k));
    }
    std::sort(level_cells.begin(), level_cells.end(),
              [](const SweepCell* a, const SweepCell* b) { return a->T < b->T; });

    const SweepCell* at_1 = nullptr;
    const SweepCell* at_inf = nullptr;
    for (const SweepCell* c : level_cells) {
        if (c->T == 1) at_1 = c;
        if (c->T == T_inf) at_inf = c;
    }
    if (at_1 == nullptr) throw DataError("asymmetry: sweep grid must include T=1");
    if (at_inf == nullptr) {
        throw DataError("asymmetry: sweep grid must include T_inf=" + std::to_string(T_inf));
    }

    AsymmetryCurve curve;
    curve.k = k;
    curve.sigma = sweep_result.sigma;
    curve.rho_abs = k * sweep_result.sigma;
    curve.T_inf = T_inf;
    curve.tau_star_inf_plus = at_inf->plus.tau_star;
    curve.tau_star_inf_minus = at_inf->minus.tau_star;
    curve.tau_star_1_plus = at_1->plus.tau_star;
    curve.tau_star_1_minus = at_1->minus.tau_star;
    curve.tau_star_1 = 0.5 * (curve.tau_star_1_plus + curve.tau_star_1_minus);
    curve.delta_tau_inf = delta_tau(*at_inf);
    if (curve.delta_tau_inf == 0.0) {
        throw DataError("asymmetry: gap at T_inf is zero, w(T) undefined");
    }
    curve.w_plus_defined = curve.tau_star_inf_plus != curve.tau_star_1_plus;
    curve.w_minus_defined = curve.tau_star_inf_minus != curve.tau_star_1_minus;

    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (const SweepCell* c : level_cells) {
        curve.T.push_back(c->T);
        curve.w.push_back(w_of_T(delta_tau(*c), curve.delta_tau_inf));
        curve.w_plus.push_back(
            curve.w_plus_defined
                ? w_pm(c->plus.tau_star, curve.tau_star_1_plus, curve.tau_star_inf_plus)
                : nan);
        curve.w_minus.push_back(
            curve.w_minus_defined
                ? w_pm(c->minus.tau_star, curve.tau_star_1_minus, curve.tau_star_inf_minus)
                : nan);
    }
    return curve;
}

ThetaFit theta_fit(const AsymmetryCurve& curve, int T_hi) {
    std::vector<double> xs;
    std::vector<double> ys;
    int n_excluded = 0;
    int lo = 0, hi = 0;
    for (std::size_t i = 0; i < curve.T.size(); ++i) {
        const int T = curve.T[i];
        if (T >= T_hi) continue;
        const double one_minus_w = 1.0 - curve.w[i];
        if (!(one_minus_w > 0.0)) {
            ++n_excluded;  // already saturated; no decay information left
            continue;
        }
        if (xs.empty()) lo = T;
        hi = T;
        xs.push_back(static_cast<double>(T));
        ys.push_back(std::log(one_minus_w));
    }
    const LinearFit fit = linfit(xs, ys);  // throws FitError below 3 points
    if (!(fit.slope < 0.0)) {
        throw FitError("theta_fit: w(T) does not approach 1, relaxation time undefined");
    }
    ThetaFit out;
    out.theta = -1.0 / fit.slope;
    out.std_error = fit.slope_std_error / (fit.slope * fit.slope);
    out.fit_T_lo = lo;
    out.fit_T_hi = hi;
    out.n_points = static_cast<int>(xs.size());
    out.n_excluded = n_excluded;
    return out;
}

namespace {

EraReturnStats era_return_stats(const ReturnSeries& r) {
    EraReturnStats stats;
    stats.n_days = r.size();
    double mean = 0.0;
    for (double v : r.r) mean += v;
    mean /= static_cast<double>(r.size());
    stats.mean = mean;
    stats.sigma = volatility(r);
    stats.mean_std_error = stats.sigma / std::sqrt(static_cast<double>(r.size()));
    stats.sigma_std_error =
        stats.sigma / std::sqrt(2.0 * (static_cast<double>(r.size()) - 1.0));
    return stats;
}

EraResult run_era(const PriceSeries& p, const std::string& label, const EraReportParams& params) {
    EraResult era;
    era.label = label;
    era.start = p.dates().front();
    era.end = p.dates().back();
    const ReturnSeries r = daily_returns(to_log(p));
    era.returns = era_return_stats(r);

    SweepParams sp = params.sweep;
    sp.sigma = 0.0;  // levels scale with this era's own volatility
    const SweepResult swept = sweep(r, sp);
    for (double k : sp.k_list) {
        era.curves.push_back(build_asymmetry_curve(swept, k, params.T_inf));
        era.thetas.push_back(theta_fit(era.curves.back(), params.theta_T_hi));
    }
    return era;
}

}  // namespace

EraComparison era_report(const PriceSeries& p, const Date& boundary,
                         const EraReportParams& params) {
    const auto [before, after] = split_era(p, boundary);
    if (before.size() < params.min_era_days || after.size() < params.min_era_days) {
        throw DataError("era_report: each era needs at least " +
                        std::to_string(params.min_era_days) + " days (" +
                        std::to_string(before.size()) + " / " + std::to_string(after.size()) +
                        " around " + format_date(boundary) + ")");
    }
    EraComparison cmp;
    cmp.boundary = boundary;
    cmp.first = run_era(before, p.label() + " before " + format_date(boundary), params);
    cmp.second = run_era(after, p.label() + " from " + format_date(boundary), params);

    const EraReturnStats& a = cmp.first.returns;
    const EraReturnStats& b = cmp.second.returns;
    cmp.mean_diff_z = (a.mean - b.mean) /
                      std::sqrt(a.mean_std_error * a.mean_std_error +
                                b.mean_std_error * b.mean_std_error);
    cmp.variance_ratio = (a.sigma * a.sigma) / (b.sigma * b.sigma);
    return cmp;
}

}  // namespace invstat
