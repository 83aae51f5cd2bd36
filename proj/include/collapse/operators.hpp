#pragma once

#include "collapse/field.hpp"

namespace collapse {

// Real pairing (f,g) = Re \int f conj(g) dmu with the radial measure.
double real_pair(const ComplexField& f, const ComplexField& g);

double norm_l2_sq(const ComplexField& f);       // \int |f|^2
double grad_norm_sq(const ComplexField& f);     // \int |d_r f|^2
double weighted_l2_sq(const ComplexField& f);   // \int |f|^2 e^{-r}
double moment2(const ComplexField& f);          // \int r^2 |f|^2

ComplexField derivative(const ComplexField& f);             // d_r f
ComplexField laplacian(const ComplexField& f);              // f'' + (d-1)/r f', d f''(0) at r=0
ComplexField apply_Lambda(const ComplexField& f, double sigma1); // f/sigma1 + r f'
ComplexField apply_D(const ComplexField& f);                     // (d/2) f + r f'

} // namespace collapse
