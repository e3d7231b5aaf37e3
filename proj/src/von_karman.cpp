#include "geogen/von_karman.hpp"

#include <cmath>

#include "geogen/bessel.hpp"

namespace geogen {

void VonKarmanParams::validate() const {
    if (!(A > 0.0) || !std::isfinite(A))
        throw ValidationError("VonKarmanParams: A must be positive");
    if (!(C > 0.0) || !std::isfinite(C))
        throw ValidationError("VonKarmanParams: C must be positive");
    if (!(L > 0.0) || !std::isfinite(L))
        throw ValidationError("VonKarmanParams: L must be positive");
    if (!(nu > 0.0 && nu <= 2.0))
        throw ValidationError("VonKarmanParams: nu must lie in (0, 2]");
}

double von_karman_cov(double z, const VonKarmanParams& p) {
    p.validate();
    if (z < 0.0) throw ValidationError("von_karman_cov: separation must be >= 0");
    const double scale = p.A * p.A * p.C;
    const double u = z / p.L;
    // Below this the direct product underflows in the Bessel factor long
    // before it departs measurably from the zero-lag limit.
    if (u < 1e-12) return scale * std::pow(2.0, p.nu - 1.0) * std::tgamma(p.nu);
    return scale * std::pow(u, p.nu) * bessel_k(p.nu, u);
}

}  // namespace geogen
