#pragma once

#include <utility>

namespace ssm {

// Constants of the lambda_1 limit law: centering c1 = c and scale c2 = 1/g,
// derived from the double saddle point z0 of sigma(z).
struct ScalingConstants {
    double alpha;
    double tau;
    double z0;      // saddle, in (alpha, 1/alpha)
    double c1;      // mean growth constant c
    double c2;      // fluctuation scale 1/g
    double g;
    double sigma3;  // sigma'''(z0), positive
};

// Unique root in (alpha, 1/alpha) of
// tau (1+a^2 z^2)/(1-a^2 z^2)^2 - (a^2+z^2)/(z^2-a^2)^2 = 0.
// Requires alpha^2 < tau < alpha^-2.
double saddle_z0(double alpha, double tau);

ScalingConstants constants(double alpha, double tau);

// (c1, c2) at tau = 1: c1 = 4a/(1-a^2), c2 = (2a(1+6a^2+a^4))^(1/3)/(1-a^2).
std::pair<double, double> tau1_closed_form(double alpha);

// Equivalent expression c = 4a(1-a^4) z0^3 / ((1+a^2 z0^2)(z0^2-a^2)^2).
double c_from_z0(double alpha, double z0);

// sigma(z) = tau log((1+az)/(1-az)) + log((z-a)/(z+a)) - c log z and its
// first two derivatives; both vanish at (z0, c(z0)).
double sigma_value(double z, double alpha, double tau, double c);
double sigma_d1(double z, double alpha, double tau, double c);
double sigma_d2(double z, double alpha, double tau, double c);

}  // namespace ssm
