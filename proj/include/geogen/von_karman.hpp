#pragma once

#include "geogen/errors.hpp"

namespace geogen {

// Parameters of the von Karman (Matern-family) covariance governing vertical
// log-resistivity correlation: cov(z) = A^2 C (z/L)^nu K_nu(z/L).
struct VonKarmanParams {
    double A = 1.0;    // amplitude of logarithmic resistivity
    double C = 1.0;    // scale factor
    double L = 100.0;  // maximum correlation length, meters
    double nu = 0.5;   // roughness order

    void validate() const;
};

// Covariance at vertical separation z >= 0. At z = 0 the removable
// singularity is replaced by the analytic limit A^2 C 2^(nu-1) Gamma(nu).
double von_karman_cov(double z, const VonKarmanParams& p);

}  // namespace geogen
