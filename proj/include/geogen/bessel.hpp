#pragma once

namespace geogen {

// Modified Bessel function of the second kind K_nu(x).
// Valid for x > 0 and |nu| <= 2; throws std::domain_error otherwise.
// Uses Temme's series for x <= 2 and a Steed continued fraction for x > 2,
// with upward recurrence from the reduced order |mu| <= 1/2.
double bessel_k(double nu, double x);

}  // namespace geogen
