#include "geogen/bessel.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace geogen {
namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();
constexpr int kMaxIter = 20000;
constexpr double kPi = 3.14159265358979323846;
constexpr double kEuler = 0.57721566490153286060651209008240243;

// Coefficients for Temme's series at reduced order |mu| <= 1/2:
//   gampl = 1/Gamma(1+mu), gammi = 1/Gamma(1-mu),
//   gam1  = (gammi - gampl)/(2 mu)  (limit -euler at mu = 0),
//   gam2  = (gammi + gampl)/2.
void temme_gammas(double mu, double& gam1, double& gam2, double& gampl, double& gammi) {
    gampl = 1.0 / std::tgamma(1.0 + mu);
    gammi = 1.0 / std::tgamma(1.0 - mu);
    if (std::abs(mu) < 1e-6) {
        // series expansion of the difference quotient; the mu^2 coefficient is
        // euler^3/6 - euler*pi^2/12 + zeta(3)/3
        constexpr double c2 = 0.57721566490153286060651209008240243 *
                                      0.57721566490153286060651209008240243 *
                                      0.57721566490153286060651209008240243 / 6.0 -
                              0.57721566490153286060651209008240243 * kPi * kPi / 12.0 +
                              1.2020569031595942854 / 3.0;
        gam1 = -kEuler - c2 * mu * mu;
    } else {
        gam1 = (gammi - gampl) / (2.0 * mu);
    }
    gam2 = 0.5 * (gammi + gampl);
}

// K_mu(x) and K_{mu+1}(x) for x <= 2 via Temme's series.
void bessel_k_temme(double x, double mu, double& kmu, double& kmu1) {
    const double mu2 = mu * mu;
    const double xh = 0.5 * x;
    const double pimu = kPi * mu;
    const double fact = (std::abs(pimu) < 1e-12) ? 1.0 : pimu / std::sin(pimu);
    double d = -std::log(xh);
    double e = mu * d;
    const double fact2 = (std::abs(e) < 1e-12) ? 1.0 : std::sinh(e) / e;
    double gam1, gam2, gampl, gammi;
    temme_gammas(mu, gam1, gam2, gampl, gammi);
    double ff = fact * (gam1 * std::cosh(e) + gam2 * fact2 * d);
    double sum = ff;
    e = std::exp(e);
    double p = 0.5 * e / gampl;
    double q = 0.5 / (e * gammi);
    double c = 1.0;
    d = xh * xh;
    double sum1 = p;
    int i = 1;
    for (; i <= kMaxIter; ++i) {
        ff = (i * ff + p + q) / (i * i - mu2);
        c *= d / i;
        p /= (i - mu);
        q /= (i + mu);
        const double del = c * ff;
        sum += del;
        const double del1 = c * (p - i * ff);
        sum1 += del1;
        if (std::abs(del) < std::abs(sum) * kEps) break;
    }
    if (i > kMaxIter) throw std::runtime_error("bessel_k: series failed to converge");
    kmu = sum;
    kmu1 = sum1 * (2.0 / x);
}

// K_mu(x) and K_{mu+1}(x) for x > 2 via Steed's continued fraction CF2
// (Thompson-Barnett form).
void bessel_k_cf2(double x, double mu, double& kmu, double& kmu1) {
    const double mu2 = mu * mu;
    double b = 2.0 * (1.0 + x);
    double d = 1.0 / b;
    double h = d, delh = d;
    double q1 = 0.0, q2 = 1.0;
    const double a1 = 0.25 - mu2;
    double q = a1, c = a1;
    double a = -a1;
    double s = 1.0 + q * delh;
    int i = 2;
    for (; i <= kMaxIter; ++i) {
        a -= 2.0 * (i - 1);
        c = -a * c / i;
        const double qnew = (q1 - b * q2) / a;
        q1 = q2;
        q2 = qnew;
        q += c * qnew;
        b += 2.0;
        d = 1.0 / (b + a * d);
        delh = (b * d - 1.0) * delh;
        h += delh;
        const double dels = q * delh;
        s += dels;
        if (std::abs(dels / s) < kEps) break;
    }
    if (i > kMaxIter) throw std::runtime_error("bessel_k: continued fraction failed to converge");
    h = a1 * h;
    kmu = std::sqrt(kPi / (2.0 * x)) * std::exp(-x) / s;
    kmu1 = kmu * (mu + x + 0.5 - h) / x;
}

}  // namespace

double bessel_k(double nu, double x) {
    if (!(x > 0.0) || !std::isfinite(x))
        throw std::domain_error("bessel_k: x must be positive and finite");
    if (!std::isfinite(nu) || std::abs(nu) > 2.0)
        throw std::domain_error("bessel_k: order must lie in [-2, 2]");

    nu = std::abs(nu);  // K_{-nu} = K_nu
    const int nl = static_cast<int>(nu + 0.5);
    const double mu = nu - nl;  // reduced order in [-1/2, 1/2]

    double kmu, kmu1;
    if (x <= 2.0)
        bessel_k_temme(x, mu, kmu, kmu1);
    else
        bessel_k_cf2(x, mu, kmu, kmu1);

    // K_{mu+i+1} = 2(mu+i)/x K_{mu+i} + K_{mu+i-1}
    for (int i = 1; i <= nl; ++i) {
        const double knext = (mu + i) * (2.0 / x) * kmu1 + kmu;
        kmu = kmu1;
        kmu1 = knext;
    }
    return kmu;
}

}  // namespace geogen
