#pragma once

#include <compare>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

namespace ssm {

// Letter of the marked alphabet 1' < 1 < 2' < 2 < ...; marked means primed.
struct PLetter {
    int value = 1;
    bool marked = false;

    // Total order of the alphabet.
    int code() const { return 2 * value - (marked ? 2 : 1); }
    friend bool operator==(const PLetter&, const PLetter&) = default;
    friend auto operator<=>(const PLetter& a, const PLetter& b) { return a.code() <=> b.code(); }
};

// Matrix over {0} union P; row 1 is the bottom row (rows are numbered from
// the lower left), marks only sit on nonzero entries.
class PMatrix {
public:
    struct Entry {
        int value = 0;
        bool marked = false;
    };

    PMatrix(int rows, int cols) : rows_(rows), cols_(cols), a_(rows * cols) {}

    int rows() const { return rows_; }
    int cols() const { return cols_; }

    // 1-based, i counted from the bottom.
    const Entry& at(int i, int j) const { return a_[(i - 1) * cols_ + (j - 1)]; }
    void set(int i, int j, Entry e);

private:
    int rows_, cols_;
    std::vector<Entry> a_;
};

// Column-scan biword: tops weakly increase; an entry of value a at (i,j)
// repeats the pair (j;i) a times, the first bottom letter marked when the
// entry is marked.
struct Biword {
    struct Pair {
        int top;
        PLetter bottom;
    };
    std::vector<Pair> pairs;

    std::vector<PLetter> bottoms() const {
        std::vector<PLetter> w;
        w.reserve(pairs.size());
        for (const auto& p : pairs) w.push_back(p.bottom);
        return w;
    }
};

Biword to_biword(const PMatrix& a);

// Length of the longest ascent pair (psi, phi): psi a subsequence of rev(w)
// and phi a subsequence of w, psi ++ phi weakly increasing, at most one
// unmarked k in psi and at most one marked k' in phi for every k. The two
// sides may reuse occurrences of w (in particular the turning letter), and
// the length of a pair is |psi| + |phi| - 1. Empty word gives 0.
int L_word(std::span<const PLetter> w);

// Exhaustive oracle over all subsequence pairs; guard |w| <= 14.
int L_word_brute(std::span<const PLetter> w);

// L of the biword bottom row; equals the first part of the shifted tableau
// associated to the matrix by the Sagan-Worley correspondence.
int lambda1(const PMatrix& a);

// Plain-text matrix format: rows top-to-bottom as displayed, entries "0",
// "k" or "k'" separated by blanks. The loader flips to bottom-up indexing.
PMatrix parse_pmatrix(std::istream& in);
PMatrix parse_pmatrix(const std::string& text);

}  // namespace ssm
