#pragma once

#include <vector>

namespace ssm {

// Gauss-Legendre rule on (-1,1): exact on polynomials of degree <= 2n-1.
struct QuadratureRule {
    int order = 0;
    std::vector<double> nodes;    // ascending
    std::vector<double> weights;  // positive
};

QuadratureRule gauss_legendre(int n);

}  // namespace ssm
