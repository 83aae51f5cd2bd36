#include "collapse/params.hpp"

#include "collapse/errors.hpp"

#include <cmath>
#include <limits>

namespace collapse {

ModelParams derive_params(int d, double sigma1, double sigma2, double eta, double delta) {
    if (d < 1 || d > 3)
        throw ConfigError("bad-dimension", "dimension must be 1, 2 or 3, got " + std::to_string(d));
    if (!(sigma1 > 0.0))
        throw ConfigError("bad-exponent", "sigma1 must be positive");
    if (sigma2 < 0.0)
        throw ConfigError("bad-exponent", "sigma2 must be nonnegative");
    if (eta < 0.0)
        throw ConfigError("bad-damping", "eta must be nonnegative");
    if (!(delta > 0.0 && delta < 1.0))
        throw ConfigError("bad-margin", "delta must lie in (0,1)");

    ModelParams p;
    p.d = d;
    p.sigma1 = sigma1;
    p.sigma2 = sigma2;
    p.eta = eta;
    p.delta = delta;

    p.s_c = 0.5 * d - 1.0 / sigma1;
    p.sigma_star = p.s_c * sigma1;
    p.sigma_sup = (d >= 3) ? 2.0 / (d - 2) - sigma1 : std::numeric_limits<double>::infinity();
    p.sigma2_max = (d <= 3) ? sigma1 : p.sigma_sup;

    if (p.s_c > 0.0 && p.s_c < 1.0)
        p.b_star = -M_PI * (1.0 + delta) / std::log(p.s_c);
    else
        p.b_star = std::numeric_limits<double>::quiet_NaN();

    p.regime = p.s_c > 0.0 ? "mass-supercritical" : "mass-critical-or-subcritical";
    p.admissible = p.s_c > 0.0 && sigma2 > p.sigma_star && sigma2 <= p.sigma2_max;
    p.eta_small = p.s_c > 0.0 && eta <= p.s_c * p.s_c * p.s_c;
    return p;
}

void require_supercritical(const ModelParams& p) {
    if (!p.mass_supercritical())
        throw SolverError("mass-critical-or-subcritical",
                          "sigma1 <= 2/d: the collapse-core machinery needs s_c > 0 "
                          "(got s_c = " + std::to_string(p.s_c) + ")");
}

} // namespace collapse
