#include "collapse/grid.hpp"

#include "collapse/errors.hpp"

#include <algorithm>
#include <array>
#include <cmath>

namespace collapse {

void fd_weights(double x0, std::span<const double> x, int m, std::span<double> weights) {
    // B. Fornberg, "Generation of finite difference formulas on arbitrarily
    // spaced grids", Math. Comp. 51 (1988).
    const int n = static_cast<int>(x.size()) - 1;
    std::vector<double> c(static_cast<std::size_t>(n + 1) * (m + 1), 0.0);
    auto C = [&](int i, int j) -> double& { return c[static_cast<std::size_t>(i) * (m + 1) + j]; };

    double c1 = 1.0;
    double c4 = x[0] - x0;
    C(0, 0) = 1.0;
    for (int i = 1; i <= n; ++i) {
        const int mn = std::min(i, m);
        double c2 = 1.0;
        const double c5 = c4;
        c4 = x[i] - x0;
        for (int j = 0; j < i; ++j) {
            const double c3 = x[i] - x[j];
            c2 *= c3;
            if (j == i - 1) {
                for (int k = mn; k >= 1; --k)
                    C(i, k) = c1 * (k * C(i - 1, k - 1) - c5 * C(i - 1, k)) / c2;
                C(i, 0) = -c1 * c5 * C(i - 1, 0) / c2;
            }
            for (int k = mn; k >= 1; --k)
                C(j, k) = (c4 * C(j, k) - k * C(j, k - 1)) / c3;
            C(j, 0) = c4 * C(j, 0) / c3;
        }
        c1 = c2;
    }
    for (int j = 0; j <= n; ++j)
        weights[j] = C(j, m);
}

RadialGrid::RadialGrid(int d, GridKind kind, std::vector<double> nodes)
    : d_(d), kind_(kind), r_(std::move(nodes)) {
    if (d_ < 1 || d_ > 3)
        throw ConfigError("bad-dimension", "grid dimension must be 1..3");
    if (r_.size() < 8)
        throw ConfigError("bad-grid", "grid needs at least 8 nodes");
    if (r_.front() != 0.0)
        throw ConfigError("bad-grid", "first node must be r = 0");
    for (std::size_t i = 1; i < r_.size(); ++i)
        if (!(r_[i] > r_[i - 1]))
            throw ConfigError("bad-grid", "nodes must be strictly increasing");
    omega_ = d_ == 1 ? 2.0 : (d_ == 2 ? 2.0 * M_PI : 4.0 * M_PI);
    build_weights();
    build_stencils();
    build_cells();
}

std::shared_ptr<const RadialGrid> RadialGrid::uniform(int d, std::size_t n, double r_max) {
    if (n < 8 || !(r_max > 0.0))
        throw ConfigError("bad-grid", "uniform grid needs n >= 8 and r_max > 0");
    std::vector<double> r(n);
    const double h = r_max / static_cast<double>(n - 1);
    for (std::size_t i = 0; i < n; ++i)
        r[i] = static_cast<double>(i) * h;
    r.back() = r_max;
    return std::shared_ptr<const RadialGrid>(new RadialGrid(d, GridKind::Uniform, std::move(r)));
}

std::shared_ptr<const RadialGrid> RadialGrid::graded(int d, double h0, double r_core,
                                                     double stretch, double h_max, double r_max) {
    if (!(h0 > 0.0) || !(h_max >= h0) || !(stretch >= 1.0) || !(r_max > r_core) || r_core < 0.0)
        throw ConfigError("bad-grid", "invalid graded grid parameters");
    std::vector<double> r;
    r.reserve(static_cast<std::size_t>(r_core / h0) + 256);
    double x = 0.0, h = h0;
    r.push_back(0.0);
    while (x < r_max) {
        if (x >= r_core)
            h = std::min(h * stretch, h_max);
        x += h;
        r.push_back(x);
    }
    // snap the tail so the last node lands exactly on r_max
    if (r.size() < 8)
        throw ConfigError("bad-grid", "graded grid produced too few nodes");
    const double scale = r_max / r.back();
    for (auto& v : r)
        v *= scale;
    r.back() = r_max;
    return std::shared_ptr<const RadialGrid>(new RadialGrid(d, GridKind::Graded, std::move(r)));
}

void RadialGrid::build_weights() {
    // For each interval, integrate the cubic through the 4 neighbouring nodes
    // against omega r^{d-1} dr with 3-point Gauss (exact up to degree 5).
    static constexpr double gx[3] = {-0.7745966692414834, 0.0, 0.7745966692414834};
    static constexpr double gw[3] = {5.0 / 9.0, 8.0 / 9.0, 5.0 / 9.0};

    const std::size_t n = r_.size();
    w_.assign(n, 0.0);
    for (std::size_t i = 0; i + 1 < n; ++i) {
        // stencil nodes and the grid index each contributes to; the first
        // interval borrows the mirror node -r_1 (even extension) instead of a
        // one-sided clamp, which keeps the r^{d-1}-weighted sums nonnegative
        double xs[4];
        std::size_t tgt[4];
        if (i == 0) {
            xs[0] = -r_[1];
            tgt[0] = 1;
            for (int k = 1; k < 4; ++k) {
                xs[k] = r_[static_cast<std::size_t>(k - 1)];
                tgt[k] = static_cast<std::size_t>(k - 1);
            }
        } else {
            std::size_t lo = std::min(i - 1, n - 4);
            for (int k = 0; k < 4; ++k) {
                xs[k] = r_[lo + k];
                tgt[k] = lo + k;
            }
        }
        const double a = r_[i], b = r_[i + 1];
        const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
        for (int g = 0; g < 3; ++g) {
            const double xg = mid + half * gx[g];
            const double mu = omega_ * std::pow(xg, d_ - 1) * half * gw[g];
            for (int j = 0; j < 4; ++j) {
                double L = 1.0;
                for (int k = 0; k < 4; ++k)
                    if (k != j)
                        L *= (xg - xs[k]) / (xs[j] - xs[k]);
                w_[tgt[j]] += mu * L;
            }
        }
    }
    double wmax = 0.0;
    for (double w : w_)
        wmax = std::max(wmax, w);
    for (double& w : w_) {
        if (w < 0.0 && w > -1e-12 * wmax)
            w = 0.0; // rounding at the r = 0 node, d = 3
        if (w < 0.0)
            throw SolverError("negative-weight",
                              "quadrature weights went negative; grid grading too aggressive");
    }
}

void RadialGrid::build_stencils() {
    const std::size_t n = r_.size();
    d1_.resize(n);
    d2_.resize(n);

    std::array<double, 5> xs{}, wk{};
    for (std::size_t i = 0; i < n; ++i) {
        for (int m = 1; m <= 2; ++m) {
            Row row;
            if (i < 2) {
                // parity stencil about r = 0: nodes (-r_2, -r_1, r_0, r_1, r_2, ...)
                // folded onto their mirror images (even extension)
                std::array<double, 5> xe{};
                for (int k = 0; k < 5; ++k) {
                    const int idx = static_cast<int>(i) + k - 2;
                    xe[k] = idx < 0 ? -r_[static_cast<std::size_t>(-idx)] : r_[static_cast<std::size_t>(idx)];
                }
                fd_weights(r_[i], std::span<const double>(xe.data(), 5), m, wk);
                row.start = 0;
                double folded[kStencil] = {0, 0, 0, 0, 0, 0};
                std::size_t maxidx = 0;
                for (int k = 0; k < 5; ++k) {
                    const int idx = static_cast<int>(i) + k - 2;
                    const std::size_t target = static_cast<std::size_t>(idx < 0 ? -idx : idx);
                    folded[target] += wk[k];
                    maxidx = std::max(maxidx, target);
                }
                row.len = maxidx + 1;
                for (std::size_t k = 0; k < row.len; ++k)
                    row.c[k] = folded[k];
            } else {
                std::size_t lo = i - 2;
                lo = std::min(lo, n - 5);
                for (int k = 0; k < 5; ++k)
                    xs[k] = r_[lo + k];
                fd_weights(r_[i], std::span<const double>(xs.data(), 5), m, wk);
                row.start = lo;
                row.len = 5;
                for (int k = 0; k < 5; ++k)
                    row.c[k] = wk[k];
            }
            (m == 1 ? d1_ : d2_)[i] = row;
        }
    }
}

void RadialGrid::build_cells() {
    const std::size_t n = r_.size();
    cell_.assign(n, 0.0);
    face_.assign(n - 1, 0.0);
    auto vol = [&](double a, double b) {
        return omega_ * (std::pow(b, d_) - std::pow(a, d_)) / d_;
    };
    for (std::size_t i = 0; i < n; ++i) {
        const double lo = i == 0 ? 0.0 : 0.5 * (r_[i - 1] + r_[i]);
        const double hi = i + 1 == n ? r_[i] : 0.5 * (r_[i] + r_[i + 1]);
        cell_[i] = vol(lo, hi);
    }
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double rf = 0.5 * (r_[i] + r_[i + 1]);
        face_[i] = omega_ * std::pow(rf, d_ - 1) / (r_[i + 1] - r_[i]);
    }
}

double RadialGrid::integrate(std::span<const double> f) const {
    double s = 0.0;
    for (std::size_t i = 0; i < f.size(); ++i)
        s += w_[i] * f[i];
    return s;
}

namespace {
template <class T>
void apply_rows(const std::vector<RadialGrid::Row>& rows, std::span<const T> f, std::span<T> out) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
        const auto& row = rows[i];
        T acc{};
        for (std::size_t k = 0; k < row.len; ++k)
            acc += row.c[k] * f[row.start + k];
        out[i] = acc;
    }
}
} // namespace

void RadialGrid::d1(std::span<const std::complex<double>> f, std::span<std::complex<double>> out) const {
    apply_rows(d1_, f, out);
}
void RadialGrid::d2(std::span<const std::complex<double>> f, std::span<std::complex<double>> out) const {
    apply_rows(d2_, f, out);
}
void RadialGrid::d1(std::span<const double> f, std::span<double> out) const { apply_rows(d1_, f, out); }
void RadialGrid::d2(std::span<const double> f, std::span<double> out) const { apply_rows(d2_, f, out); }

} // namespace collapse
