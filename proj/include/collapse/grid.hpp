#pragma once

#include <complex>
#include <cstddef>
#include <memory>
#include <span>
#include <vector>

namespace collapse {

enum class GridKind { Uniform, Graded };

// Radial node set r_0 = 0 < r_1 < ... < r_{n-1} = r_max with quadrature
// weights for the measure omega_{d-1} r^{d-1} dr (factor 2 for d = 1, the
// full-line radial reduction).  Weights come from piecewise-cubic
// interpolation integrated exactly against the measure, so smooth decaying
// integrands are reproduced to O(h^4).
//
// The grid also owns 5-point finite-difference stencils for d/dr and
// d^2/dr^2 (4th order in the interior, one-sided at r_max, parity-aware at
// r = 0 assuming even radial extension).  Immutable after construction.
class RadialGrid {
public:
    static constexpr std::size_t kStencil = 6; // folded parity rows can reach 6 entries

    struct Row {
        std::size_t start = 0;
        std::size_t len = 0;
        double c[kStencil] = {0, 0, 0, 0, 0, 0};
    };

    static std::shared_ptr<const RadialGrid> uniform(int d, std::size_t n, double r_max);
    // h0 spacing up to r_core, then geometric stretch capped at h_max, out to r_max.
    static std::shared_ptr<const RadialGrid> graded(int d, double h0, double r_core,
                                                    double stretch, double h_max, double r_max);

    int dim() const { return d_; }
    GridKind kind() const { return kind_; }
    std::size_t size() const { return r_.size(); }
    double r(std::size_t i) const { return r_[i]; }
    double r_max() const { return r_.back(); }
    double weight(std::size_t i) const { return w_[i]; }
    std::span<const double> nodes() const { return r_; }
    std::span<const double> weights() const { return w_; }
    double measure_factor() const { return omega_; } // omega_{d-1} (2, 2pi, 4pi)

    // integral of a sampled real function against the radial measure
    double integrate(std::span<const double> f) const;

    // first/second radial derivative of samples (real or complex)
    void d1(std::span<const std::complex<double>> f, std::span<std::complex<double>> out) const;
    void d2(std::span<const std::complex<double>> f, std::span<std::complex<double>> out) const;
    void d1(std::span<const double> f, std::span<double> out) const;
    void d2(std::span<const double> f, std::span<double> out) const;

    const std::vector<Row>& d1_rows() const { return d1_; }
    const std::vector<Row>& d2_rows() const { return d2_; }

    // conservative (finite-volume) cell measures and face data; these back the
    // norm-preserving evolution scheme
    std::span<const double> cell_measure() const { return cell_; }
    std::span<const double> face_coeff() const { return face_; } // omega r_{i+1/2}^{d-1}/(r_{i+1}-r_i)

private:
    RadialGrid(int d, GridKind kind, std::vector<double> nodes);
    void build_weights();
    void build_stencils();
    void build_cells();

    int d_;
    GridKind kind_;
    double omega_;
    std::vector<double> r_, w_;
    std::vector<Row> d1_, d2_;
    std::vector<double> cell_, face_;
};

using GridPtr = std::shared_ptr<const RadialGrid>;

// Finite-difference weights on arbitrary nodes (Fornberg recursion).
// weights[j] multiplies f(x[j]) in the m-th derivative approximation at x0.
void fd_weights(double x0, std::span<const double> x, int m, std::span<double> weights);

} // namespace collapse
