#include "collapse/interp.hpp"

#include "collapse/errors.hpp"

#include <algorithm>
#include <cmath>

namespace collapse {

RadialInterpolant::RadialInterpolant(std::span<const double> nodes, std::span<const double> values)
    : nodes_(nodes.begin(), nodes.end()), re_(values.begin(), values.end()), complex_(false) {
    if (nodes_.size() != re_.size() || nodes_.size() < 6)
        throw SolverError("bad-interpolant", "need >= 6 matching nodes/values");
}

RadialInterpolant::RadialInterpolant(std::span<const double> nodes,
                                     std::span<const std::complex<double>> values)
    : nodes_(nodes.begin(), nodes.end()), cv_(values.begin(), values.end()), complex_(true) {
    if (nodes_.size() != cv_.size() || nodes_.size() < 6)
        throw SolverError("bad-interpolant", "need >= 6 matching nodes/values");
}

template <class T>
T RadialInterpolant::eval_impl(double x, const std::vector<T>& vals) const {
    const double ax = std::abs(x); // even extension
    if (ax > nodes_.back())
        return T{};

    const auto it = std::upper_bound(nodes_.begin(), nodes_.end(), ax);
    std::ptrdiff_t i1 = std::distance(nodes_.begin(), it); // first node > ax
    // 6-node window centred on the bracketing interval; mirror below r = 0
    std::ptrdiff_t lo = i1 - 3;
    const std::ptrdiff_t n = static_cast<std::ptrdiff_t>(nodes_.size());
    std::ptrdiff_t hi = lo + 6;
    if (hi > n) {
        lo -= hi - n;
        hi = n;
    }

    double xs[6];
    T ys[6];
    for (int k = 0; k < 6; ++k) {
        const std::ptrdiff_t idx = lo + k;
        if (idx < 0) {
            xs[k] = -nodes_[static_cast<std::size_t>(-idx)];
            ys[k] = vals[static_cast<std::size_t>(-idx)];
        } else {
            xs[k] = nodes_[static_cast<std::size_t>(idx)];
            ys[k] = vals[static_cast<std::size_t>(idx)];
        }
    }
    // Neville's scheme
    for (int m = 1; m < 6; ++m)
        for (int k = 0; k < 6 - m; ++k)
            ys[k] = ((ax - xs[k + m]) * ys[k] + (xs[k] - ax) * ys[k + 1]) / (xs[k] - xs[k + m]);
    return ys[0];
}

double RadialInterpolant::eval(double x) const {
    if (complex_)
        return eval_impl(x, cv_).real();
    return eval_impl(x, re_);
}

std::complex<double> RadialInterpolant::eval_c(double x) const {
    if (complex_)
        return eval_impl(x, cv_);
    return {eval_impl(x, re_), 0.0};
}

} // namespace collapse
