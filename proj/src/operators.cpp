#include "collapse/operators.hpp"

#include "collapse/errors.hpp"

#include <cmath>

namespace collapse {

ComplexField::ComplexField(GridPtr grid, std::vector<Complex> values)
    : grid_(std::move(grid)), v_(std::move(values)) {
    if (v_.size() != grid_->size())
        throw SolverError("size-mismatch", "sample count does not match grid");
}

bool ComplexField::all_finite() const {
    for (const auto& z : v_)
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag()))
            return false;
    return true;
}

void ComplexField::require_finite(const char* what) const {
    if (!all_finite())
        throw SolverError("non-finite-field", std::string(what) + ": NaN/Inf sample");
}

double real_pair(const ComplexField& f, const ComplexField& g) {
    if (!f.same_grid(g))
        throw SolverError("grid-mismatch", "real_pair requires fields on the same grid");
    const auto w = f.grid().weights();
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        s += w[i] * (f[i].real() * g[i].real() + f[i].imag() * g[i].imag());
    return s;
}

double norm_l2_sq(const ComplexField& f) {
    const auto w = f.grid().weights();
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        s += w[i] * std::norm(f[i]);
    return s;
}

double grad_norm_sq(const ComplexField& f) {
    ComplexField df = derivative(f);
    return norm_l2_sq(df);
}

double weighted_l2_sq(const ComplexField& f) {
    const auto& g = f.grid();
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        s += g.weight(i) * std::norm(f[i]) * std::exp(-g.r(i));
    return s;
}

double moment2(const ComplexField& f) {
    const auto& g = f.grid();
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        s += g.weight(i) * g.r(i) * g.r(i) * std::norm(f[i]);
    return s;
}

ComplexField derivative(const ComplexField& f) {
    ComplexField out(f.grid_ptr());
    f.grid().d1(f.samples(), out.samples());
    return out;
}

ComplexField laplacian(const ComplexField& f) {
    const auto& g = f.grid();
    ComplexField d1(f.grid_ptr()), d2(f.grid_ptr());
    g.d1(f.samples(), d1.samples());
    g.d2(f.samples(), d2.samples());
    ComplexField out(f.grid_ptr());
    out[0] = static_cast<double>(g.dim()) * d2[0];
    for (std::size_t i = 1; i < f.size(); ++i)
        out[i] = d2[i] + (g.dim() - 1) / g.r(i) * d1[i];
    return out;
}

ComplexField apply_Lambda(const ComplexField& f, double sigma1) {
    const auto& g = f.grid();
    ComplexField d1 = derivative(f);
    ComplexField out(f.grid_ptr());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = f[i] / sigma1 + g.r(i) * d1[i];
    return out;
}

ComplexField apply_D(const ComplexField& f) {
    const auto& g = f.grid();
    ComplexField d1 = derivative(f);
    ComplexField out(f.grid_ptr());
    for (std::size_t i = 0; i < f.size(); ++i)
        out[i] = 0.5 * g.dim() * f[i] + g.r(i) * d1[i];
    return out;
}

} // namespace collapse
