#pragma once

namespace ssm {

// Airy function values; full_accuracy marks the guaranteed range [-12, 12]
// (abs error <= 1e-10). Outside, values come from the asymptotic expansions
// and are returned with the flag cleared rather than failing.
struct AiryEval {
    double x;
    double ai;
    double ai_prime;
    bool full_accuracy;
};

AiryEval airy_eval(double x);
double airy_ai(double x);
double airy_ai_prime(double x);

// (Ai(x)Ai'(y) - Ai'(x)Ai(y))/(x - y), with the confluent diagonal value
// Ai'(m)^2 - m Ai(m)^2 at m = (x+y)/2 when |x-y| < 1e-6.
double airy_kernel(double x, double y);

// Tracy-Widom GUE distribution F2(s) as the Fredholm determinant of the Airy
// kernel on (s, infinity), by symmetrized Gauss-Legendre Nystrom
// discretization of order `order`.
double f2(double s, int order = 64);

// f2 together with an order-sufficiency flag: order_gap is the change under
// halving the quadrature order (spectral convergence makes it a tight error
// proxy), and converged marks order_gap <= tol.
struct F2Eval {
    double value;
    double order_gap;
    bool converged;
};
F2Eval f2_eval(double s, int order = 64, double tol = 1e-9);

// Determinant of the two-kernel direct-sum discretization; equals f2(s)^2.
double f2_direct_sum_det(double s, int order = 64);

}  // namespace ssm
