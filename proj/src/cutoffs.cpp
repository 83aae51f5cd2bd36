#include "collapse/cutoffs.hpp"

#include <cmath>

namespace collapse {

double smoothstep7(double t) {
    if (t <= 0.0)
        return 0.0;
    if (t >= 1.0)
        return 1.0;
    return ((((-20.0 * t + 70.0) * t - 84.0) * t + 35.0)) * t * t * t * t;
}

double smoothstep7_d1(double t) {
    if (t <= 0.0 || t >= 1.0)
        return 0.0;
    const double u = 1.0 - t;
    return 140.0 * t * t * t * u * u * u;
}

double smoothstep7_d2(double t) {
    if (t <= 0.0 || t >= 1.0)
        return 0.0;
    const double u = 1.0 - t;
    return 420.0 * t * t * u * u * (1.0 - 2.0 * t);
}

double CoreCutoff::value(double r) const {
    if (r <= r_lo)
        return 1.0;
    if (r >= r_hi)
        return 0.0;
    return 1.0 - smoothstep7((r - r_lo) / (r_hi - r_lo));
}

double CoreCutoff::d1(double r) const {
    if (r <= r_lo || r >= r_hi)
        return 0.0;
    const double w = r_hi - r_lo;
    return -smoothstep7_d1((r - r_lo) / w) / w;
}

double CoreCutoff::d2(double r) const {
    if (r <= r_lo || r >= r_hi)
        return 0.0;
    const double w = r_hi - r_lo;
    return -smoothstep7_d2((r - r_lo) / w) / (w * w);
}

double FarCutoff::value(double r) const {
    if (r <= A)
        return 1.0;
    if (r >= 2.0 * A)
        return 0.0;
    return 1.0 - smoothstep7((r - A) / A);
}

double FarCutoff::d1(double r) const {
    if (r <= A || r >= 2.0 * A)
        return 0.0;
    return -smoothstep7_d1((r - A) / A) / A;
}

double FarCutoff::d2(double r) const {
    if (r <= A || r >= 2.0 * A)
        return 0.0;
    return -smoothstep7_d2((r - A) / A) / (A * A);
}

namespace {
// antiderivative of smoothstep7 on [0,1]
double smoothstep7_int(double t) {
    if (t <= 0.0)
        return 0.0;
    if (t >= 1.0)
        return 0.5 + (t - 1.0);
    const double t5 = t * t * t * t * t;
    return ((((-2.5 * t + 10.0) * t - 14.0) * t + 7.0)) * t5;
}
constexpr double kBump = 0.875; // calibrates chi(3) = 1
} // namespace

// chi' is assembled piecewise so that chi' in [1/4,1/2] holds pointwise on
// [1,2] with C^2 junctions; values follow by closed-form integration.
double chi_flux_d1(double r) {
    if (r <= 0.5 || r >= 3.0)
        return 0.0;
    if (r < 1.0)
        return 0.25 * smoothstep7(2.0 * (r - 0.5));
    if (r <= 2.0)
        return 0.375 - 0.125 * std::cos(2.0 * M_PI * (r - 1.0));
    const double u = r - 2.0;
    const double s = std::sin(M_PI * u);
    return 0.25 * (1.0 - smoothstep7(u)) + kBump * s * s;
}

double chi_flux(double r) {
    if (r <= 0.5)
        return 0.0;
    if (r >= 3.0)
        return 1.0;
    if (r < 1.0)
        return 0.125 * smoothstep7_int(2.0 * (r - 0.5));
    if (r <= 2.0) {
        const double u = r - 1.0;
        return 1.0 / 16.0 + 0.375 * u - std::sin(2.0 * M_PI * u) / (16.0 * M_PI);
    }
    const double u = r - 2.0;
    return 7.0 / 16.0 + 0.25 * (u - smoothstep7_int(u)) +
           kBump * (0.5 * u - std::sin(2.0 * M_PI * u) / (4.0 * M_PI));
}

} // namespace collapse
