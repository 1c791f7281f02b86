#include "invstat/fitting.hpp"

#include <cmath>
#include <string>

#include "invstat/errors.hpp"

namespace invstat {

LinearFit linfit(std::span<const double> xs, std::span<const double> ys) {
    if (xs.size() != ys.size()) {
        throw FitError("linfit: x/y length mismatch (" + std::to_string(xs.size()) + " vs " +
                       std::to_string(ys.size()) + ")");
    }
    const std::size_t n = xs.size();
    if (n < 3) throw FitError("linfit: need at least 3 points, got " + std::to_string(n));
    for (std::size_t i = 0; i < n; ++i) {
        if (!std::isfinite(xs[i]) || !std::isfinite(ys[i])) {
            throw FitError("linfit: non-finite input at index " + std::to_string(i));
        }
    }

    double mean_x = 0.0, mean_y = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        mean_x += xs[i];
        mean_y += ys[i];
    }
    mean_x /= static_cast<double>(n);
    mean_y /= static_cast<double>(n);

    double sxx = 0.0, sxy = 0.0, syy = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        const double dx = xs[i] - mean_x;
        const double dy = ys[i] - mean_y;
        sxx += dx * dx;
        sxy += dx * dy;
        syy += dy * dy;
    }
    if (!(sxx > 0.0)) throw FitError("linfit: degenerate fit, all x values equal");

    LinearFit fit;
    fit.n = n;
    fit.slope = sxy / sxx;
    fit.intercept = mean_y - fit.slope * mean_x;

    // Residual sum of squares via the identity ss_res = syy - slope^2 * sxx,
    // clamped at zero against cancellation on exact fits.
    double ss_res = syy - fit.slope * fit.slope * sxx;
    if (ss_res < 0.0) ss_res = 0.0;
    fit.r_squared = (syy > 0.0) ? 1.0 - ss_res / syy : 1.0;
    fit.slope_std_error =
        std::sqrt(ss_res / (static_cast<double>(n) - 2.0) / sxx);
    return fit;
}

}  // namespace invstat
