#include <doctest.h>

#include <cmath>
#include <limits>
#include <vector>

#include "invstat/errors.hpp"
#include "invstat/fitting.hpp"

using namespace invstat;

TEST_CASE("linfit recovers y = 2x + 1 exactly") {
    const std::vector<double> xs{0.0, 1.0, 2.0, 3.0, 4.0};
    std::vector<double> ys;
    for (double x : xs) ys.push_back(2.0 * x + 1.0);
    const LinearFit f = linfit(xs, ys);
    CHECK(f.slope == doctest::Approx(2.0).epsilon(1e-14));
    CHECK(f.intercept == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(f.r_squared == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(f.slope_std_error == doctest::Approx(0.0).scale(1.0).epsilon(1e-10));
    CHECK(f.n == 5);
}

TEST_CASE("alternating perturbation keeps the slope but lowers r^2") {
    std::vector<double> xs, ys;
    const double eps = 0.05;
    for (int i = 0; i < 20; ++i) {
        xs.push_back(i);
        ys.push_back(i + ((i % 2 == 0) ? eps : -eps));
    }
    const LinearFit f = linfit(xs, ys);
    CHECK(f.slope == doctest::Approx(1.0).epsilon(0.01));
    CHECK(f.r_squared < 1.0);
    CHECK(f.slope_std_error > 0.0);
}

TEST_CASE("affine equivariance: fitting (a*x+b, y) divides the slope by a") {
    std::vector<double> xs, ys;
    for (int i = 0; i < 12; ++i) {
        xs.push_back(0.5 * i);
        ys.push_back(3.0 * xs.back() - 2.0 + 0.01 * ((i * 7) % 5 - 2));
    }
    const LinearFit base = linfit(xs, ys);

    const double a = 2.5, b = -4.0;
    std::vector<double> xs2;
    for (double x : xs) xs2.push_back(a * x + b);
    const LinearFit scaled = linfit(xs2, ys);
    CHECK(scaled.slope == doctest::Approx(base.slope / a).epsilon(1e-10));
    CHECK(scaled.r_squared == doctest::Approx(base.r_squared).epsilon(1e-10));
}

TEST_CASE("residuals are orthogonal to 1 and x") {
    std::vector<double> xs, ys;
    for (int i = 0; i < 15; ++i) {
        xs.push_back(i);
        ys.push_back(0.7 * i + 5.0 + std::sin(static_cast<double>(i)));
    }
    const LinearFit f = linfit(xs, ys);
    double sum_res = 0.0, sum_xres = 0.0, scale = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double res = ys[i] - (f.slope * xs[i] + f.intercept);
        sum_res += res;
        sum_xres += xs[i] * res;
        scale += std::abs(ys[i]);
    }
    CHECK(std::abs(sum_res) < 1e-8 * scale);
    CHECK(std::abs(sum_xres) < 1e-8 * scale * xs.back());
}

TEST_CASE("linfit rejects degenerate inputs") {
    CHECK_THROWS_AS(linfit(std::vector<double>{1.0, 2.0}, std::vector<double>{1.0, 2.0}),
                    FitError);
    CHECK_THROWS_AS(linfit(std::vector<double>{1.0, 1.0, 1.0}, std::vector<double>{1.0, 2.0, 3.0}),
                    FitError);  // all xs equal
    CHECK_THROWS_AS(linfit(std::vector<double>{1.0, 2.0, 3.0}, std::vector<double>{1.0, 2.0}),
                    FitError);  // length mismatch
    const double nan = std::numeric_limits<double>::quiet_NaN();
    CHECK_THROWS_AS(linfit(std::vector<double>{1.0, 2.0, nan}, std::vector<double>{1.0, 2.0, 3.0}),
                    FitError);
}

TEST_CASE("constant y gives slope 0 with r^2 defined as 1") {
    const std::vector<double> xs{1.0, 2.0, 3.0, 4.0};
    const std::vector<double> ys{5.0, 5.0, 5.0, 5.0};
    const LinearFit f = linfit(xs, ys);
    CHECK(f.slope == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    CHECK(f.r_squared == 1.0);
}
