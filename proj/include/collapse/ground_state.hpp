#pragma once

#include "collapse/field.hpp"
#include "collapse/params.hpp"

#include <vector>

namespace collapse {

// Positive decreasing solution of  Q'' + (d-1)/r Q' - Q + Q^{2 sigma1 + 1} = 0
// with Q'(0) = 0 and exponential decay, matched through a Robin condition at
// r_max.  Solved by bisection shooting on Q(0), then Newton on the discrete
// BVP so the residual is small in the grid's own operators.
struct GroundState {
    ModelParams params;
    GridPtr grid;
    std::vector<double> samples;
    double peak = 0.0;      // Q(0)
    double mass = 0.0;      // ||Q||_{L^2}^2
    double grad_sq = 0.0;   // ||Q'||_{L^2}^2
    double shoot_value = 0.0;

    ComplexField field() const;
};

struct GroundStateOptions {
    double ode_step = 5e-4;
    double newton_tol = 1e-11;
    int max_newton = 60;
};

GroundState solve_ground_state(const ModelParams& params, GridPtr grid,
                               const GroundStateOptions& opts = {});

// max-norm of the discrete residual over the interior rows
double ground_state_residual(const GroundState& gs);

} // namespace collapse
