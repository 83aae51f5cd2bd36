#pragma once

#include <string>

namespace collapse {

// Model parameters of i psi_t + Lap psi + |psi|^{2 sigma1} psi
//                      + i eta |psi|^{2 sigma2} psi = 0
// together with the derived exponents used throughout.
struct ModelParams {
    int d = 1;           // spatial dimension, radial reduction (1..3)
    double sigma1 = 1.0; // focusing exponent
    double sigma2 = 0.0; // damping exponent
    double eta = 0.0;    // damping coefficient >= 0
    double delta = 0.1;  // margin entering b_star

    // derived
    double s_c = 0.0;        // d/2 - 1/sigma1
    double sigma_star = 0.0; // s_c * sigma1 = 2 s_c / (d - 2 s_c)
    double sigma_sup = 0.0;  // 2/(d-2) - sigma1, +inf for d <= 2
    double sigma2_max = 0.0; // sigma1 for d <= 3, sigma_sup for d >= 4
    double b_star = 0.0;     // -pi (1+delta)/ln(s_c), NaN unless 0 < s_c < 1

    bool admissible = false; // 2/d < sigma1 and sigma_star < sigma2 <= sigma2_max
    bool eta_small = false;  // eta <= s_c^3
    std::string regime;      // "mass-supercritical" or "mass-critical-or-subcritical"

    bool mass_supercritical() const { return s_c > 0.0; }
};

// Populates every derived field.  A mass-critical or subcritical sigma1 is not
// an exception here (the ground-state and quadratic-form paths need it); it is
// reported through `regime` and admissible() = false.  Callers that require the
// supercritical regime use require_supercritical().
ModelParams derive_params(int d, double sigma1, double sigma2 = 0.0,
                          double eta = 0.0, double delta = 0.1);

// Throws SolverError(kind="mass-critical-or-subcritical") when s_c <= 0.
void require_supercritical(const ModelParams& p);

} // namespace collapse
