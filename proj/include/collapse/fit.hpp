#pragma once

#include <span>

namespace collapse {

struct LinearFit {
    double slope = 0.0;
    double intercept = 0.0;
    double r2 = 0.0;
    std::size_t n = 0;
};

LinearFit linear_fit(std::span<const double> x, std::span<const double> y);

// least squares y ~ c*x through the origin
double proportional_fit(std::span<const double> x, std::span<const double> y);

double median(std::span<const double> v);
double mean(std::span<const double> v);
double stddev(std::span<const double> v);

} // namespace collapse
