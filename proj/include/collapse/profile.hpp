#pragma once

#include "collapse/field.hpp"
#include "collapse/ground_state.hpp"
#include "collapse/params.hpp"

#include <optional>
#include <vector>

namespace collapse {

// Localized core P_b: positive radial solution of
//   (-Lap + 1 - b^2 r^2 / 4) P = P^{2 sigma1 + 1}  on [0, R_b],  P(R_b) = 0,
// computed on its own uniform grid by damped Newton with continuation in b.
// The domain is truncated at r_trunc when R_b is larger (P decays like e^{-r}
// well before that for small b).
struct PbSolution {
    ModelParams params;
    double b = 0.0;
    double rho = 0.0;
    double R_b = 0.0;       // 2 sqrt(1-rho)/b (infinite for b = 0)
    double R_b_minus = 0.0; // sqrt(1-rho) R_b
    double R_domain = 0.0;  // actual solve domain end
    GridPtr grid;           // dedicated uniform solve grid
    std::vector<double> P, Pprime;
    double peak = 0.0;
    double residual_inf = 0.0;
    int newton_iters = 0;
};

struct PbOptions {
    std::size_t n = 3072;
    double r_trunc = 40.0;
    double b_step = 0.02;  // continuation step from b = 0
    double tol = 1e-11;
    int max_newton = 40;
};

PbSolution solve_Pb(const ModelParams& params, double b, double rho,
                    const PbOptions& opts = {}, const PbSolution* warm_start = nullptr);

// Assembled collapse core on the analysis grid.
struct SolitonProfile {
    ModelParams params;
    double b = 0.0;
    double rho = 0.0;
    double R_b = 0.0;
    double R_b_minus = 0.0;
    int fidelity = 0; // 0: Qhat only, 1: with (T_b, beta)
    GridPtr grid;
    std::vector<double> Pb, Pb_prime, phi;
    ComplexField Qhat;      // phi e^{-i b r^2/4} P_b
    ComplexField Psi_tilde; // localization defect: Lap Qhat - Qhat + i b D Qhat + |Qhat|^2s Qhat = -Psi_tilde
    std::optional<ComplexField> Tb; // first-order correction, Q_b = e^{-i b r^2/4}(phi P_b + s_c T_b)
    double beta = 0.0;
    double tb_sigma_min = 0.0; // smallest-singular-value estimate of the T_b system

    ComplexField Qb() const; // profile at the stored fidelity
};

SolitonProfile assemble_profile(const PbSolution& pb, GridPtr grid);

struct TbReport {
    double beta = 0.0;
    double sigma_min = 0.0;
    double solve_residual = 0.0;
};

// Upgrades the profile to first-order fidelity: solves the O(s_c)
// linearization of the b-flow equation on |y| <= R_b for (T_b, beta), with
// beta fixed by the discrete solvability condition.
TbReport solve_Tb(SolitonProfile& profile, const PbOptions& opts = {});

// Discrete defect of  i s_c beta d_b Q_b + Lap Q_b - Q_b + i b Lambda Q_b
//                     + |Q_b|^{2 sigma1} Q_b  =  -Psi_b.
// dQb_db is the ladder derivative at matching fidelity (pass nullptr to use
// beta = 0, the zeroth-order reading).
ComplexField profile_equation_defect(const SolitonProfile& profile,
                                     const ComplexField* dQb_db);

// sup of |defect| over r <= R_b^-
double interior_residual(const SolitonProfile& profile, const ComplexField* dQb_db);

// |2E[Q_b] - (i s_c beta d_b Q_b + Psi_b, Lambda Q_b) - s_c (2E[Q_b] + ||Q_b||^2)|
// with Psi_b the discrete defect above.
double pohozaev_residual(const SolitonProfile& profile, const ComplexField* dQb_db = nullptr);

} // namespace collapse
