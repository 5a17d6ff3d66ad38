#include "ssm/sampler.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>

namespace ssm {

MeasureParams::MeasureParams(int m_, int n_, double alpha_) : m(m_), n(n_), alpha(alpha_) {
    if (m < 1 || n < 1) throw std::invalid_argument("MeasureParams: need m,n >= 1");
    if (!(alpha > 0.0 && alpha < 1.0))
        throw std::invalid_argument("MeasureParams: alpha must lie in (0,1)");
}

namespace {

std::uint64_t splitmix_fin(std::uint64_t z) {
    z ^= z >> 30;
    z *= 0xBF58476D1CE4E5B9ull;
    z ^= z >> 27;
    z *= 0x94D049BB133111EBull;
    z ^= z >> 31;
    return z;
}

}  // namespace

CounterRng::CounterRng(Seed s)
    : state_(splitmix_fin(s.master + 0x9E3779B97F4A7C15ull * (s.replica + 1))) {}

std::uint64_t CounterRng::next_u64() {
    state_ += 0x9E3779B97F4A7C15ull;
    return splitmix_fin(state_);
}

double CounterRng::next_unit() { return (next_u64() >> 11) * 0x1.0p-53; }

bool CounterRng::next_bit() { return next_u64() >> 63; }

double entry_pmf(double alpha, int k, bool marked) {
    if (!(alpha > 0.0 && alpha < 1.0)) throw std::invalid_argument("entry_pmf: alpha in (0,1)");
    if (k < 0) throw std::invalid_argument("entry_pmf: negative value");
    if (k == 0 && marked) throw std::domain_error("entry_pmf: marked zero");
    const double q = alpha * alpha;
    const double p0 = (1.0 - q) / (1.0 + q);
    return k == 0 ? p0 : p0 * std::pow(q, k);
}

PMatrix sample_matrix(const MeasureParams& sigma, Seed seed) {
    CounterRng rng(seed);
    const double q = sigma.q();
    const double p0 = (1.0 - q) / (1.0 + q);
    const double logq = std::log(q);
    PMatrix a(sigma.m, sigma.n);
    for (int i = 1; i <= sigma.m; ++i)
        for (int j = 1; j <= sigma.n; ++j) {
            // One uniform decides zero-vs-positive and the geometric tail,
            // one bit decides the mark.
            double u = rng.next_unit();
            bool bit = rng.next_bit();
            if (u < p0) continue;
            double v = (u - p0) / (1.0 - p0);
            long long k = static_cast<long long>(std::ceil(std::log1p(-v) / logq));
            k = std::max(1ll, k);
            a.set(i, j, {static_cast<int>(k), bit});
        }
    return a;
}

std::vector<int> sample_lambda1_batch(const MeasureParams& sigma, std::uint64_t master,
                                      int reps) {
    if (reps < 1) throw std::invalid_argument("sample_lambda1_batch: reps >= 1");
    std::vector<int> out(reps);
    for (int r = 0; r < reps; ++r)
        out[r] = lambda1(sample_matrix(sigma, Seed{master, static_cast<std::uint64_t>(r)}));
    return out;
}

SmallDistribution exact_distribution_small(const MeasureParams& sigma, int K) {
    if (K < 0) throw std::invalid_argument("exact_distribution_small: K >= 0");
    const int cells = sigma.m * sigma.n;
    double states = std::pow(2.0 * K + 1.0, cells);
    if (states > 1e7)
        throw std::length_error("exact_distribution_small: (2K+1)^(mn) exceeds 1e7");

    // Cell codes: 0 -> empty, 2k-1 -> k marked, 2k -> k unmarked.
    std::vector<double> cell_prob(2 * K + 1);
    cell_prob[0] = entry_pmf(sigma.alpha, 0, false);
    for (int k = 1; k <= K; ++k) {
        cell_prob[2 * k - 1] = entry_pmf(sigma.alpha, k, true);
        cell_prob[2 * k] = entry_pmf(sigma.alpha, k, false);
    }

    std::vector<int> code(cells, 0);
    std::vector<double> mass;
    PMatrix a(sigma.m, sigma.n);
    auto entry_of = [](int c) -> PMatrix::Entry {
        if (c == 0) return {0, false};
        return {(c + 1) / 2, c % 2 == 1};
    };
    while (true) {
        double p = 1.0;
        for (int c = 0; c < cells; ++c) {
            p *= cell_prob[code[c]];
            a.set(c / sigma.n + 1, c % sigma.n + 1, entry_of(code[c]));
        }
        int l1 = lambda1(a);
        if (l1 >= static_cast<int>(mass.size())) mass.resize(l1 + 1, 0.0);
        mass[l1] += p;
        int c = 0;
        while (c < cells && code[c] == 2 * K) code[c++] = 0;
        if (c == cells) break;
        ++code[c];
    }

    SmallDistribution out;
    out.cdf.resize(mass.size());
    double acc = 0.0;
    for (std::size_t h = 0; h < mass.size(); ++h) {
        acc += mass[h];
        out.cdf[h] = acc;
    }
    const double q = sigma.q();
    out.tail_bound = cells * 2.0 * std::pow(q, K + 1) / (1.0 + q);
    return out;
}

namespace {

int poisson_count(double mean, CounterRng& rng) {
    // Exact inversion; means above 30 are split additively, which keeps the
    // running e^-mean away from underflow.
    int total = 0;
    while (mean > 30.0) {
        mean -= 30.0;
        total += poisson_count(30.0, rng);
    }
    double p = std::exp(-mean);
    double cum = p;
    double u = rng.next_unit();
    int k = 0;
    while (u > cum) {
        ++k;
        p *= mean / k;
        cum += p;
        if (k > 100000) break;
    }
    return total + k;
}

// Longest strictly-increasing-in-both chain; points must have distinct x, y.
int longest_increasing_chain(std::vector<PlanePoint> pts) {
    std::sort(pts.begin(), pts.end(),
              [](const PlanePoint& a, const PlanePoint& b) { return a.x < b.x; });
    std::vector<double> tails;  // tails[k] = smallest final y of a chain of length k+1
    for (const auto& p : pts) {
        auto it = std::lower_bound(tails.begin(), tails.end(), p.y);
        if (it == tails.end())
            tails.push_back(p.y);
        else
            *it = p.y;
    }
    return static_cast<int>(tails.size());
}

}  // namespace

// An up/left chain (x strictly decreasing, y strictly increasing), then an
// up/right chain, every y of the first part below every y of the second.
int single_turn_path_length(const std::vector<PlanePoint>& pts) {
    const int n = static_cast<int>(pts.size());
    std::vector<int> order(n);
    for (int i = 0; i < n; ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return pts[a].y < pts[b].y; });

    std::vector<int> up_left(n, 0), up_right(n, 0);
    for (int ii = 0; ii < n; ++ii) {
        int i = order[ii];
        int best = 0;
        for (int jj = 0; jj < ii; ++jj) {
            int j = order[jj];
            if (pts[j].x > pts[i].x) best = std::max(best, up_left[j]);
        }
        up_left[i] = best + 1;
    }
    for (int ii = n - 1; ii >= 0; --ii) {
        int i = order[ii];
        int best = 0;
        for (int jj = ii + 1; jj < n; ++jj) {
            int j = order[jj];
            if (pts[j].x > pts[i].x) best = std::max(best, up_right[j]);
        }
        up_right[i] = best + 1;
    }

    // Split below y(order[i]): first part among indices < i, second among >= i.
    std::vector<int> best_left(n + 1, 0), best_right(n + 1, 0);
    for (int i = 0; i < n; ++i) best_left[i + 1] = std::max(best_left[i], up_left[order[i]]);
    for (int i = n - 1; i >= 0; --i) best_right[i] = std::max(best_right[i + 1], up_right[order[i]]);
    int best = 0;
    for (int i = 0; i <= n; ++i) best = std::max(best, best_left[i] + best_right[i]);
    return best;
}

int symmetrized_chain_length(const std::vector<PlanePoint>& pts) {
    std::vector<PlanePoint> sym = pts;
    sym.reserve(2 * pts.size());
    for (const auto& p : pts) sym.push_back({-p.x, p.y});
    return longest_increasing_chain(sym);
}

int poisson_L(double t, Seed seed) {
    if (t < 0.0) throw std::invalid_argument("poisson_L: t >= 0");
    CounterRng rng(seed);
    if (t == 0.0) return 0;
    int n = poisson_count(2.0 * t * t, rng);

    std::vector<PlanePoint> pts;
    std::set<double> xs, ys;
    pts.reserve(n);
    while (static_cast<int>(pts.size()) < n) {
        double x = rng.next_unit();
        double y = rng.next_unit();
        // Coordinate ties have probability zero; duplicates from floating
        // collisions are redrawn.
        if (!xs.insert(x).second || !ys.insert(y).second) continue;
        pts.push_back({x, y});
    }

    int direct = single_turn_path_length(pts);
    int chain = symmetrized_chain_length(pts);
    if (direct != chain)
        throw std::logic_error("poisson_L: single-turn and symmetrized routes disagree");
    return direct;
}

}  // namespace ssm
