#include "collapse/ground_state.hpp"

#include "collapse/errors.hpp"
#include "collapse/operators.hpp"

#include <Eigen/Sparse>
#include <Eigen/SparseLU>

#include <cmath>
#include <sstream>

namespace collapse {

namespace {

enum class ShotOutcome { Undershoot, Overshoot };

struct ShotResult {
    ShotOutcome outcome;
    double r_event;
};

// integrate Q'' = Q - Q^{2s+1} - (d-1)/r Q' outward until the trajectory
// either turns back up (initial value too small) or crosses zero (too large)
ShotResult shoot(double a, int d, double sigma, double r_end, double h,
                 const std::vector<double>* sample_at = nullptr,
                 std::vector<double>* samples = nullptr) {
    auto rhs = [&](double r, double q, double z) {
        const double nl = q - std::pow(std::abs(q), 2.0 * sigma) * q;
        if (r == 0.0)
            return nl / d;
        return nl - (d - 1) / r * z;
    };
    double r = 0.0, q = a, z = 0.0;
    std::size_t next = 0;
    if (sample_at && samples)
        samples->assign(sample_at->size(), 0.0);
    const double tiny = 1e-13 * a;
    while (r < r_end) {
        if (sample_at && samples)
            while (next < sample_at->size() && (*sample_at)[next] <= r + 1e-14)
                (*samples)[next++] = std::max(q, 0.0);
        double step = h;
        if (sample_at && next < sample_at->size())
            step = std::min(step, (*sample_at)[next] - r);
        const double k1q = z, k1z = rhs(r, q, z);
        const double k2q = z + 0.5 * step * k1z, k2z = rhs(r + 0.5 * step, q + 0.5 * step * k1q, z + 0.5 * step * k1z);
        const double k3q = z + 0.5 * step * k2z, k3z = rhs(r + 0.5 * step, q + 0.5 * step * k2q, z + 0.5 * step * k2z);
        const double k4q = z + step * k3z, k4z = rhs(r + step, q + step * k3q, z + step * k3z);
        q += step / 6.0 * (k1q + 2.0 * k2q + 2.0 * k3q + k4q);
        z += step / 6.0 * (k1z + 2.0 * k2z + 2.0 * k3z + k4z);
        r += step;
        if (q <= 0.0)
            return {ShotOutcome::Overshoot, r};
        if (z > 0.0 && q < a)
            return {ShotOutcome::Undershoot, r};
        if (q < tiny) {
            // effectively converged to the decaying tail; pad remaining samples
            if (sample_at && samples)
                for (; next < sample_at->size(); ++next)
                    (*samples)[next] = q * std::exp(-((*sample_at)[next] - r));
            return {ShotOutcome::Overshoot, r};
        }
    }
    if (sample_at && samples)
        for (; next < sample_at->size(); ++next)
            (*samples)[next] = std::max(q, 0.0) * std::exp(-((*sample_at)[next] - r));
    return {ShotOutcome::Undershoot, r_end};
}

} // namespace

ComplexField GroundState::field() const {
    ComplexField f(grid);
    for (std::size_t i = 0; i < samples.size(); ++i)
        f[i] = samples[i];
    return f;
}

GroundState solve_ground_state(const ModelParams& params, GridPtr grid,
                               const GroundStateOptions& opts) {
    const int d = params.d;
    const double sigma = params.sigma1;
    if (d >= 3 && !(sigma < 2.0 / (d - 2)))
        throw SolverError("no-ground-state", "sigma1 >= 2/(d-2): no H^1 ground state");

    const double r_end = std::min(grid->r_max(), 60.0);

    // bracket the shooting parameter
    double a_lo = 1.0 + 1e-6, a_hi = 1.5;
    if (shoot(a_lo, d, sigma, r_end, opts.ode_step).outcome != ShotOutcome::Undershoot)
        throw SolverError("shooting-bracket", "lower bracket a=1+eps is not an undershoot");
    int grow = 0;
    while (shoot(a_hi, d, sigma, r_end, opts.ode_step).outcome == ShotOutcome::Undershoot) {
        a_hi *= 1.5;
        if (++grow > 24) {
            std::ostringstream os;
            os << "no overshoot found, bracket [" << a_lo << ", " << a_hi << "]";
            throw SolverError("shooting-bracket", os.str());
        }
    }
    for (int it = 0; it < 200 && (a_hi - a_lo) > 1e-16 * a_hi; ++it) {
        const double mid = 0.5 * (a_lo + a_hi);
        if (shoot(mid, d, sigma, r_end, opts.ode_step).outcome == ShotOutcome::Undershoot)
            a_lo = mid;
        else
            a_hi = mid;
    }
    const double a = 0.5 * (a_lo + a_hi);

    // sample the shot onto the grid as the Newton initializer
    std::vector<double> nodes(grid->nodes().begin(), grid->nodes().end());
    std::vector<double> q0;
    shoot(a, d, sigma, r_end, opts.ode_step, &nodes, &q0);

    // Newton polish on the discrete BVP; Robin tail row Q' + kappa Q = 0
    const std::size_t n = grid->size();
    const double kappa = 1.0 + 0.5 * (d - 1) / grid->r_max();
    Eigen::VectorXd q = Eigen::Map<Eigen::VectorXd>(q0.data(), static_cast<long>(n));

    auto residual = [&](const Eigen::VectorXd& u, Eigen::VectorXd& F) {
        std::vector<double> lap(n), du(n), d2u(n);
        std::span<const double> us(u.data(), n);
        grid->d1(us, du);
        grid->d2(us, d2u);
        for (std::size_t i = 0; i < n; ++i) {
            const double L = i == 0 ? d * d2u[0] : d2u[i] + (d - 1) / grid->r(i) * du[i];
            F[static_cast<long>(i)] =
                L - u[static_cast<long>(i)] +
                std::pow(std::abs(u[static_cast<long>(i)]), 2.0 * sigma) * u[static_cast<long>(i)];
        }
        F[static_cast<long>(n - 1)] = du[n - 1] + kappa * u[static_cast<long>(n - 1)];
    };

    Eigen::VectorXd F(n), Fnew(n);
    residual(q, F);
    Eigen::SparseMatrix<double> J(static_cast<long>(n), static_cast<long>(n));
    std::vector<Eigen::Triplet<double>> trips;
    Eigen::SparseLU<Eigen::SparseMatrix<double>> lu;

    int it = 0;
    for (; it < opts.max_newton; ++it) {
        if (F.lpNorm<Eigen::Infinity>() <= opts.newton_tol * std::max(1.0, q.lpNorm<Eigen::Infinity>()))
            break;
        trips.clear();
        const auto& d1r = grid->d1_rows();
        const auto& d2r = grid->d2_rows();
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const auto& r2 = d2r[i];
            const double c1 = i == 0 ? 0.0 : (d - 1) / grid->r(i);
            const double lapfac = i == 0 ? static_cast<double>(d) : 1.0;
            for (std::size_t k = 0; k < r2.len; ++k)
                trips.emplace_back(static_cast<int>(i), static_cast<int>(r2.start + k), lapfac * r2.c[k]);
            if (c1 != 0.0) {
                const auto& r1 = d1r[i];
                for (std::size_t k = 0; k < r1.len; ++k)
                    trips.emplace_back(static_cast<int>(i), static_cast<int>(r1.start + k), c1 * r1.c[k]);
            }
            const double qv = q[static_cast<long>(i)];
            trips.emplace_back(static_cast<int>(i), static_cast<int>(i),
                               -1.0 + (2.0 * sigma + 1.0) * std::pow(std::abs(qv), 2.0 * sigma));
        }
        {
            const auto& r1 = d1r[n - 1];
            for (std::size_t k = 0; k < r1.len; ++k)
                trips.emplace_back(static_cast<int>(n - 1), static_cast<int>(r1.start + k), r1.c[k]);
            trips.emplace_back(static_cast<int>(n - 1), static_cast<int>(n - 1), kappa);
        }
        J.setFromTriplets(trips.begin(), trips.end());
        lu.compute(J);
        if (lu.info() != Eigen::Success)
            throw SolverError("newton-divergence", "singular Jacobian in ground-state Newton");
        Eigen::VectorXd dq = lu.solve(-F);
        double step = 1.0;
        const double f0 = F.norm();
        bool accepted = false;
        for (int ls = 0; ls < 10; ++ls) {
            Eigen::VectorXd trial = q + step * dq;
            residual(trial, Fnew);
            if (Fnew.norm() < f0) {
                q = trial;
                F = Fnew;
                accepted = true;
                break;
            }
            step *= 0.5;
        }
        if (!accepted)
            throw SolverError("newton-divergence", "ground-state Newton line search stalled");
    }
    if (it == opts.max_newton)
        throw SolverError("newton-divergence", "ground-state Newton did not converge");

    GroundState gs;
    gs.params = params;
    gs.grid = std::move(grid);
    gs.samples.assign(q.data(), q.data() + n);
    gs.peak = gs.samples[0];
    gs.shoot_value = a;
    ComplexField f = gs.field();
    gs.mass = norm_l2_sq(f);
    gs.grad_sq = grad_norm_sq(f);
    return gs;
}

double ground_state_residual(const GroundState& gs) {
    const auto& g = *gs.grid;
    const std::size_t n = g.size();
    std::vector<double> du(n), d2u(n);
    g.d1(gs.samples, du);
    g.d2(gs.samples, d2u);
    double worst = 0.0;
    for (std::size_t i = 0; i + 1 < n; ++i) {
        const double L = i == 0 ? g.dim() * d2u[0] : d2u[i] + (g.dim() - 1) / g.r(i) * du[i];
        const double F = L - gs.samples[i] +
                         std::pow(std::abs(gs.samples[i]), 2.0 * gs.params.sigma1) * gs.samples[i];
        worst = std::max(worst, std::abs(F));
    }
    return worst;
}

} // namespace collapse
