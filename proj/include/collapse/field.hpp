#pragma once

#include "collapse/grid.hpp"

#include <complex>
#include <vector>

namespace collapse {

using Complex = std::complex<double>;

// Complex samples of a radially symmetric function, one per grid node.
// Immutable grid reference; value semantics for the samples.
class ComplexField {
public:
    ComplexField() = default;
    explicit ComplexField(GridPtr grid)
        : grid_(std::move(grid)), v_(grid_->size(), Complex(0.0, 0.0)) {}
    ComplexField(GridPtr grid, std::vector<Complex> values);

    const RadialGrid& grid() const { return *grid_; }
    const GridPtr& grid_ptr() const { return grid_; }
    std::size_t size() const { return v_.size(); }
    Complex& operator[](std::size_t i) { return v_[i]; }
    const Complex& operator[](std::size_t i) const { return v_[i]; }
    std::span<const Complex> samples() const { return v_; }
    std::span<Complex> samples() { return v_; }

    bool all_finite() const;
    void require_finite(const char* what) const; // throws SolverError("non-finite-field")
    bool same_grid(const ComplexField& other) const { return grid_.get() == other.grid_.get(); }

private:
    GridPtr grid_;
    std::vector<Complex> v_;
};

} // namespace collapse
