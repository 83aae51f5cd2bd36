#pragma once

#include <complex>
#include <span>
#include <vector>

namespace collapse {

// Local 6-point Lagrange interpolant of samples on an increasing node set.
// Radial profiles are even about r = 0, so queries near the origin borrow
// mirrored nodes; queries beyond the last node return 0 (decaying fields).
// O(h^6) on smooth data, which the modulation round-trip tolerances need.
class RadialInterpolant {
public:
    RadialInterpolant() = default;
    RadialInterpolant(std::span<const double> nodes, std::span<const double> values);
    RadialInterpolant(std::span<const double> nodes, std::span<const std::complex<double>> values);

    double eval(double x) const;
    std::complex<double> eval_c(double x) const;
    bool is_complex() const { return complex_; }
    double support_end() const { return nodes_.empty() ? 0.0 : nodes_.back(); }

private:
    template <class T>
    T eval_impl(double x, const std::vector<T>& vals) const;

    std::vector<double> nodes_;
    std::vector<double> re_;
    std::vector<std::complex<double>> cv_;
    bool complex_ = false;
};

} // namespace collapse
