#include "ssm/ascent.hpp"

#include <algorithm>
#include <cstdint>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace ssm {

void PMatrix::set(int i, int j, Entry e) {
    if (i < 1 || i > rows_ || j < 1 || j > cols_)
        throw std::invalid_argument("PMatrix::set: index out of range");
    if (e.value < 0) throw std::invalid_argument("PMatrix::set: negative value");
    if (e.value == 0 && e.marked)
        throw std::invalid_argument("PMatrix::set: mark on a zero entry");
    a_[(i - 1) * cols_ + (j - 1)] = e;
}

Biword to_biword(const PMatrix& a) {
    Biword w;
    for (int j = 1; j <= a.cols(); ++j)
        for (int i = 1; i <= a.rows(); ++i) {
            const auto& e = a.at(i, j);
            for (int r = 0; r < e.value; ++r)
                w.pairs.push_back({j, PLetter{i, e.marked && r == 0}});
        }
    return w;
}

namespace {

// dp over letter codes 0..2V-1 (code 2k-2 = k', 2k-1 = k); kNone marks
// "no chain yet".
constexpr int kNone = 0;

// Longest valid psi ending exactly at each code, scanning rev(w): appending
// an unmarked k needs a strictly smaller predecessor code (one unmarked k
// per value), a marked k' allows equal codes (marked letters may repeat).
std::vector<int> best_psi_by_last(std::span<const PLetter> w, int vmax) {
    std::vector<int> dp(2 * vmax, kNone);
    for (std::size_t t = w.size(); t-- > 0;) {
        const PLetter& l = w[t];
        int c = l.code();
        int limit = l.marked ? c : c - 1;
        int best = 0;
        for (int c2 = 0; c2 <= limit; ++c2) best = std::max(best, dp[c2]);
        dp[c] = std::max(dp[c], best + 1);
    }
    return dp;
}

// Longest valid phi starting exactly at each code, scanning w right to left:
// prepending a marked k' needs a strictly larger successor code (one marked
// k' per value), an unmarked k allows equal codes.
std::vector<int> best_phi_by_first(std::span<const PLetter> w, int vmax) {
    std::vector<int> dp(2 * vmax, kNone);
    for (std::size_t t = w.size(); t-- > 0;) {
        const PLetter& l = w[t];
        int c = l.code();
        int limit = l.marked ? c + 1 : c;
        int best = 0;
        for (int c2 = 2 * vmax - 1; c2 >= limit; --c2) best = std::max(best, dp[c2]);
        dp[c] = std::max(dp[c], best + 1);
    }
    return dp;
}

int max_value(std::span<const PLetter> w) {
    int v = 0;
    for (const auto& l : w) v = std::max(v, l.value);
    return v;
}

int combine(const std::vector<int>& psi, const std::vector<int>& phi) {
    // max over last(psi) <= first(phi) of |psi| + |phi| - 1
    int best = 0;
    int psi_prefix = 0;
    for (std::size_t c = 0; c < psi.size(); ++c) {
        psi_prefix = std::max(psi_prefix, psi[c]);
        if (psi_prefix > 0 && phi[c] > 0) best = std::max(best, psi_prefix + phi[c] - 1);
    }
    return best;
}

}  // namespace

int L_word(std::span<const PLetter> w) {
    if (w.empty()) return 0;
    int vmax = max_value(w);
    return combine(best_psi_by_last(w, vmax), best_phi_by_first(w, vmax));
}

int L_word_brute(std::span<const PLetter> w) {
    if (w.size() > 14) throw std::length_error("L_word_brute: |w| <= 14");
    if (w.empty()) return 0;
    const int n = static_cast<int>(w.size());
    const int vmax = max_value(w);
    std::vector<int> best_psi(2 * vmax, 0), best_phi(2 * vmax, 0);

    // Valid subsequences are checked from scratch for every index subset.
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        std::vector<PLetter> fwd;
        for (int t = 0; t < n; ++t)
            if (mask & (1u << t)) fwd.push_back(w[t]);

        auto weakly_increasing = [](const std::vector<PLetter>& s) {
            for (std::size_t t = 1; t < s.size(); ++t)
                if (s[t].code() < s[t - 1].code()) return false;
            return true;
        };
        auto multiplicity_ok = [vmax](const std::vector<PLetter>& s, bool marked_side) {
            std::vector<int> cnt(vmax + 1, 0);
            for (const auto& l : s)
                if (l.marked == marked_side && ++cnt[l.value] > 1) return false;
            return true;
        };

        // phi: subsequence of w in forward order, marked letters distinct.
        if (weakly_increasing(fwd) && multiplicity_ok(fwd, true)) {
            int c = fwd.front().code();
            best_phi[c] = std::max(best_phi[c], static_cast<int>(fwd.size()));
        }
        // psi: subsequence of rev(w), i.e. fwd reversed, unmarked distinct.
        std::vector<PLetter> rev(fwd.rbegin(), fwd.rend());
        if (weakly_increasing(rev) && multiplicity_ok(rev, false)) {
            int c = rev.back().code();
            best_psi[c] = std::max(best_psi[c], static_cast<int>(rev.size()));
        }
    }

    int best = 0;
    int psi_prefix = 0;
    for (int c = 0; c < 2 * vmax; ++c) {
        psi_prefix = std::max(psi_prefix, best_psi[c]);
        if (psi_prefix > 0 && best_phi[c] > 0) best = std::max(best, psi_prefix + best_phi[c] - 1);
    }
    return best;
}

int lambda1(const PMatrix& a) {
    auto w = to_biword(a).bottoms();
    return L_word(w);
}

PMatrix parse_pmatrix(std::istream& in) {
    std::vector<std::vector<PMatrix::Entry>> grid;  // rows as displayed, top first
    std::string line;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::vector<PMatrix::Entry> row;
        std::string tok;
        while (ls >> tok) {
            PMatrix::Entry e;
            bool marked = tok.back() == '\'';
            if (marked) tok.pop_back();
            std::size_t used = 0;
            int value = std::stoi(tok, &used);
            if (used != tok.size() || value < 0)
                throw std::invalid_argument("parse_pmatrix: bad entry token");
            if (marked && value == 0) throw std::invalid_argument("parse_pmatrix: marked zero");
            e.value = value;
            e.marked = marked;
            row.push_back(e);
        }
        if (!row.empty()) grid.push_back(std::move(row));
    }
    if (grid.empty()) throw std::invalid_argument("parse_pmatrix: empty input");
    const int m = static_cast<int>(grid.size());
    const int n = static_cast<int>(grid[0].size());
    for (const auto& row : grid)
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("parse_pmatrix: ragged rows");
    PMatrix a(m, n);
    for (int d = 0; d < m; ++d)  // displayed row d is matrix row m-d (bottom-up)
        for (int j = 0; j < n; ++j) a.set(m - d, j + 1, grid[d][j]);
    return a;
}

PMatrix parse_pmatrix(const std::string& text) {
    std::istringstream in(text);
    return parse_pmatrix(in);
}

}  // namespace ssm
