#pragma once

#include <cstdint>
#include <vector>

#include "ssm/ascent.hpp"

namespace ssm {

// Parameters sigma = (m, n, alpha) of the alpha-specialized measure.
struct MeasureParams {
    int m = 1;
    int n = 1;
    double alpha = 0.5;

    MeasureParams(int m_, int n_, double alpha_);
    double q() const { return alpha * alpha; }
    double tau() const { return static_cast<double>(m) / n; }
};

// Replica-indexed seed: distinct replica indices give independent streams and
// full determinism regardless of evaluation order.
struct Seed {
    std::uint64_t master = 0;
    std::uint64_t replica = 0;
};

// Counter-based splittable generator (splitmix64 stream keyed by the seed).
class CounterRng {
public:
    explicit CounterRng(Seed s);
    std::uint64_t next_u64();
    double next_unit();  // [0,1), 53 bits
    bool next_bit();

private:
    std::uint64_t state_;
};

// P(0) = (1-q)/(1+q), P(k) = P(k') = ((1-q)/(1+q)) q^k for k >= 1, q = alpha^2.
double entry_pmf(double alpha, int k, bool marked);

// Entries i.i.d. with entry_pmf, filled row-major from the bottom row.
PMatrix sample_matrix(const MeasureParams& sigma, Seed seed);

// reps independent draws of lambda1, replica r using Seed{master, r}.
std::vector<int> sample_lambda1_batch(const MeasureParams& sigma, std::uint64_t master,
                                      int reps);

// Exact law of lambda1 restricted to entries of value <= K. cdf[h] is a lower
// bound for P(lambda1 <= h), off by at most tail_bound (union bound on any
// entry exceeding K).
struct SmallDistribution {
    std::vector<double> cdf;
    double tail_bound = 0.0;
};
SmallDistribution exact_distribution_small(const MeasureParams& sigma, int K);

// Point of a planar configuration; coordinates must be pairwise distinct in
// x and in y.
struct PlanePoint {
    double x, y;
};

// Longest path from (1,0) moving up/left, turning exactly once, then moving
// up/right to (1,1), counted in collected points.
int single_turn_path_length(const std::vector<PlanePoint>& pts);

// Longest strictly-increasing chain after reflecting the configuration about
// the left edge and adjoining the mirror image; equals the single-turn value.
int symmetrized_chain_length(const std::vector<PlanePoint>& pts);

// Poisson(2 t^2) points in the unit square; both route computations are run
// on every draw and must agree.
int poisson_L(double t, Seed seed);

}  // namespace ssm
