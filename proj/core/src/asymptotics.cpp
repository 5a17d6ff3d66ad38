#include "ssm/asymptotics.hpp"

#include <cmath>
#include <stdexcept>

namespace ssm {

namespace {

double saddle_fn(double z, double a, double tau) {
    double a2 = a * a, z2 = z * z;
    double u = 1.0 - a2 * z2;
    double v = z2 - a2;
    return tau * (1.0 + a2 * z2) / (u * u) - (a2 + z2) / (v * v);
}

double saddle_fn_d1(double z, double a, double tau) {
    double a2 = a * a, z2 = z * z;
    double u = 1.0 - a2 * z2;
    double v = z2 - a2;
    return 2.0 * a2 * tau * z * (3.0 + a2 * z2) / (u * u * u) +
           2.0 * z * (z2 + 3.0 * a2) / (v * v * v);
}

}  // namespace

double saddle_z0(double alpha, double tau) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("saddle_z0: alpha in (0,1)");
    double a2 = alpha * alpha;
    if (!(tau > a2 && tau < 1.0 / a2))
        throw std::invalid_argument("saddle_z0: tau must lie in (alpha^2, alpha^-2)");

    // The function increases from -inf to +inf across (alpha, 1/alpha);
    // endpoints are offset to stay away from the poles.
    double lo = alpha * (1.0 + 1e-9);
    double hi = (1.0 / alpha) * (1.0 - 1e-9);
    while (saddle_fn(lo, alpha, tau) > 0.0) lo = alpha + (lo - alpha) * 0.1;
    while (saddle_fn(hi, alpha, tau) < 0.0) hi = 1.0 / alpha - (1.0 / alpha - hi) * 0.1;
    for (int it = 0; it < 200; ++it) {
        double mid = 0.5 * (lo + hi);
        if (saddle_fn(mid, alpha, tau) < 0.0)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-13 * hi) break;
    }
    double z = 0.5 * (lo + hi);
    for (int it = 0; it < 4; ++it) {
        double step = saddle_fn(z, alpha, tau) / saddle_fn_d1(z, alpha, tau);
        double znew = z - step;
        if (znew > lo && znew < hi) z = znew;
    }
    return z;
}

double c_from_z0(double alpha, double z0) {
    double a2 = alpha * alpha, z2 = z0 * z0;
    double a4 = a2 * a2;
    return 4.0 * alpha * (1.0 - a4) * z0 * z2 / ((1.0 + a2 * z2) * (z2 - a2) * (z2 - a2));
}

ScalingConstants constants(double alpha, double tau) {
    ScalingConstants sc{};
    sc.alpha = alpha;
    sc.tau = tau;
    sc.z0 = saddle_z0(alpha, tau);
    double a2 = alpha * alpha, z2 = sc.z0 * sc.z0;
    double a4 = a2 * a2, z4 = z2 * z2;
    sc.c1 = 2.0 * alpha * sc.z0 * (tau / (1.0 - a2 * z2) + 1.0 / (z2 - a2));
    double v = z2 - a2;
    sc.sigma3 = 4.0 * alpha * (1.0 - a4) * ((1.0 + a4) * z2 + 3.0 * a2 * (1.0 + z4)) /
                ((1.0 - a4 * z4) * v * v * v);
    sc.g = std::cbrt(2.0 / sc.sigma3) / sc.z0;
    sc.c2 = 1.0 / sc.g;
    return sc;
}

std::pair<double, double> tau1_closed_form(double alpha) {
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("tau1_closed_form: alpha in (0,1)");
    double a2 = alpha * alpha;
    double c1 = 4.0 * alpha / (1.0 - a2);
    double c2 = std::cbrt(2.0 * alpha * (1.0 + 6.0 * a2 + a2 * a2)) / (1.0 - a2);
    return {c1, c2};
}

double sigma_value(double z, double alpha, double tau, double c) {
    return tau * std::log((1.0 + alpha * z) / (1.0 - alpha * z)) +
           std::log((z - alpha) / (z + alpha)) - c * std::log(z);
}

double sigma_d1(double z, double alpha, double tau, double c) {
    double a2 = alpha * alpha, z2 = z * z;
    return 2.0 * alpha * tau / (1.0 - a2 * z2) + 2.0 * alpha / (z2 - a2) - c / z;
}

double sigma_d2(double z, double alpha, double tau, double c) {
    double a2 = alpha * alpha, z2 = z * z;
    double u = 1.0 - a2 * z2;
    double v = z2 - a2;
    return 4.0 * alpha * z * (a2 * tau / (u * u) - 1.0 / (v * v)) + c / z2;
}

}  // namespace ssm
