#pragma once

#include <span>

namespace invstat {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double slope_std_error = 0.0;
    double r_squared = 0.0;
    int n = 0;
};

// Ordinary least squares y = slope*x + intercept. Requires n >= 3 and xs not
// all equal; throws FitError otherwise. slope_std_error comes from the
// residual variance with n-2 degrees of freedom.
LinearFit linfit(std::span<const double> xs, std::span<const double> ys);

}  // namespace invstat
