#pragma once

#include "collapse/field.hpp"
#include "collapse/ground_state.hpp"
#include "collapse/params.hpp"
#include "collapse/profile.hpp"

#include <span>
#include <vector>

namespace collapse {

// Scalar functionals of the damped NLS flow.

double mass(const ComplexField& psi); // \int |psi|^2

// \int 1/2 |grad psi|^2 - |psi|^{2 sigma1 + 2} / (2 sigma1 + 2)
double energy(const ComplexField& psi, double sigma1);

// Vector momentum (grad psi, i psi): vanishes identically in radial symmetry
// (odd integrand); kept as a diagnostic.
double momentum(const ComplexField& psi);

// Scalar radial current Im \int conj(psi) d_r psi dmu.  This is the radial
// flux profile of the momentum integrand, not the momentum itself.
double phase_current(const ComplexField& psi);

// Instantaneous right-hand sides of the three balance laws.
double mass_rate(const ComplexField& psi, const ModelParams& p);   // -2 eta ||psi||^{2s2+2}_{L^{2s2+2}}
double energy_rate(const ComplexField& psi, const ModelParams& p);
double momentum_rate(const ComplexField& psi, const ModelParams& p); // 0 identically (radial)
double phase_current_rate(const ComplexField& psi, const ModelParams& p);

// Quadratic form of the linearized operator around the mass-critical ground
// state Q_c (the sigma = 2/d soliton on the same grid).
double quadratic_form_H(const ComplexField& f, const GroundState& Qc);

// f = -1/2 (i Qb_tilde, r d_r Qb_tilde) - (i xi_tilde, Lambda Qb_tilde)
double virial_f(const ComplexField& Qb_tilde, const ComplexField& xi_tilde,
                const ModelParams& p);

// cached f(b) samples for the \int_0^b f dv term
struct FLadder {
    std::vector<double> b;
    std::vector<double> f;

    double integral_to(double b_query) const; // trapezoid, throws on incomplete ladder
    double value_at(double b_query) const;    // linear interpolation
};

// J = \int (1 - chi_A)|xi|^2 + ||Q_b||^2 - ||Q||^2 + 2 (xi, Q_b) - b f + \int_0^b f
double lyapunov_J(const ComplexField& xi, const SolitonProfile& profile,
                  double b, double A, const FLadder& ladder, const GroundState& gs);

// K = ||Q_b||^2 - ||Q||^2 - b f + \int_0^b f
double K_of_b(double b, const SolitonProfile& profile, const FLadder& ladder,
              const GroundState& gs);

struct BalanceRecord {
    double t = 0.0;
    double tau = 0.0;
    double mass = 0.0;
    double energy = 0.0;
    double momentum = 0.0;
    double mass_rate = 0.0;
    double energy_rate = 0.0;
    double momentum_rate = 0.0;
    double cumulative_mass_dissipation = 0.0;
    double cumulative_energy_input = 0.0;
    double grad_norm = 0.0;
    double lambda_proxy = 0.0;
    double dt = 0.0;
    std::size_t step = 0;
    // scheme-consistent discrete invariants (exactly conserved at eta = 0)
    double mass_discrete = 0.0;
    double energy_discrete = 0.0;
    double far_field_ratio = 0.0;
};

} // namespace collapse
