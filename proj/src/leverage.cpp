#include "invstat/leverage.hpp"

#include <cmath>
#include <string>

#include "invstat/errors.hpp"

namespace invstat {

LeverageCurve leverage(const ReturnSeries& r, int tau_lo, int tau_hi) {
    if (tau_lo > tau_hi) throw DataError("leverage: tau_lo must not exceed tau_hi");
    const std::int64_t n = static_cast<std::int64_t>(r.size());
    if (n < 2) throw DataError("leverage: need at least 2 returns");

    double mean_sq = 0.0;
    for (double v : r.r) mean_sq += v * v;
    mean_sq /= static_cast<double>(n);
    if (!(mean_sq > 0.0)) throw DataError("leverage: all returns are zero");
    const double denom = mean_sq * mean_sq;

    LeverageCurve curve;
    for (int tau = tau_lo; tau <= tau_hi; ++tau) {
        const std::int64_t t_first = std::max<std::int64_t>(0, -static_cast<std::int64_t>(tau));
        const std::int64_t t_last = n - 1 - std::max<std::int64_t>(0, tau);  // inclusive
        const std::int64_t n_terms = t_last - t_first + 1;
        curve.taus.push_back(tau);
        curve.n_terms.push_back(std::max<std::int64_t>(0, n_terms));
        curve.reliable.push_back(n_terms >= LeverageCurve::kMinTerms);
        if (n_terms < 2) {
            curve.values.push_back(0.0);
            curve.std_errors.push_back(0.0);
            continue;
        }
        double mean_prod = 0.0;
        for (std::int64_t t = t_first; t <= t_last; ++t) {
            const double rt = r.r[static_cast<std::size_t>(t)];
            const double rf = r.r[static_cast<std::size_t>(t + tau)];
            mean_prod += rf * rf * rt;
        }
        mean_prod /= static_cast<double>(n_terms);
        double ss = 0.0;
        for (std::int64_t t = t_first; t <= t_last; ++t) {
            const double rt = r.r[static_cast<std::size_t>(t)];
            const double rf = r.r[static_cast<std::size_t>(t + tau)];
            const double d = rf * rf * rt - mean_prod;
            ss += d * d;
        }
        const double prod_std = std::sqrt(ss / static_cast<double>(n_terms - 1));
        curve.values.push_back(mean_prod / denom);
        curve.std_errors.push_back(prod_std / std::sqrt(static_cast<double>(n_terms)) / denom);
    }
    return curve;
}

}  // namespace invstat
