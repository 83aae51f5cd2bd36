#pragma once

namespace collapse {

// Order-7 smoothstep: s(0)=0, s(1)=1, first three derivatives vanish at both
// ends.  Building block of every cut-off below.
double smoothstep7(double t);
double smoothstep7_d1(double t);
double smoothstep7_d2(double t);

// Core cut-off phi_b: 1 on [0, R_b^-], 0 on [R_b, inf), C^3 in between.
struct CoreCutoff {
    double r_lo = 0.0; // R_b^-
    double r_hi = 0.0; // R_b

    double value(double r) const;
    double d1(double r) const;
    double d2(double r) const;
};

// Radiation cut-off phi_A: 1 on [0, A], 0 on [2A, inf).
struct FarCutoff {
    double A = 1.0;

    double value(double r) const;
    double d1(double r) const;
    double d2(double r) const;
};

// Mass-flux cut-off chi: 0 on [0, 1/2], 1 on [3, inf), monotone, with
// chi' constrained to [1/4, 1/2] on [1, 2].
double chi_flux(double r);
double chi_flux_d1(double r);

// chi_A(r) = chi_flux(r / A)
struct FluxCutoff {
    double A = 1.0;
    double value(double r) const { return chi_flux(r / A); }
    double d1(double r) const { return chi_flux_d1(r / A) / A; }
};

} // namespace collapse
