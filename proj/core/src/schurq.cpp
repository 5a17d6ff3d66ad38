#include "ssm/schurq.hpp"

#include <algorithm>

namespace ssm {

Specialization::Specialization(std::vector<Rational> values) : values_(std::move(values)) {
    for (const auto& v : values_) {
        if (v < 0 || v > 1)
            throw std::invalid_argument("Specialization: values must lie in [0,1]");
        if (v == 1) strict_interior_ = false;
    }
}

Specialization Specialization::alpha_spec(int m, const Rational& alpha) {
    if (m < 1) throw std::invalid_argument("alpha_spec: need m >= 1");
    if (!(alpha > 0 && alpha < 1))
        throw std::invalid_argument("alpha_spec: alpha must lie in (0,1)");
    return Specialization(std::vector<Rational>(m, alpha));
}

namespace {

bool all_values_equal(const std::vector<Rational>& v) {
    return std::all_of(v.begin(), v.end(), [&](const Rational& x) { return x == v[0]; });
}

}  // namespace

template <class T>
QCoeffTable<T> q_coeffs(const Specialization& spec, int cutoff) {
    if (cutoff < 0) throw std::invalid_argument("q_coeffs: negative cutoff");
    QCoeffTable<T> table;
    table.cutoff = cutoff;
    table.q.assign(cutoff + 1, T(0));
    table.q[0] = T(1);
    const auto& vals = spec.values();
    if (vals.empty() || cutoff == 0) return table;

    if (all_values_equal(vals) && vals[0] > 0) {
        // (1 - a^2 t^2) Q' = 2 m a Q gives
        // (k+1) q_{k+1} = 2 m a q_k + a^2 (k-1) q_{k-1}.
        const T a = scalar_from_rational<T>(vals[0]);
        const T a2 = a * a;
        const T two_m_a = T(2 * spec.size()) * a;
        table.q[1] = two_m_a;
        for (int k = 1; k < cutoff; ++k) {
            T v = two_m_a * table.q[k] + a2 * T(k - 1) * table.q[k - 1];
            table.q[k + 1] = v / T(k + 1);
        }
        return table;
    }

    // Incremental series multiply by (1 + x t), then divide by (1 - x t).
    for (const auto& val : vals) {
        const T x = scalar_from_rational<T>(val);
        for (int k = cutoff; k >= 1; --k) table.q[k] += x * table.q[k - 1];
        for (int k = 1; k <= cutoff; ++k) table.q[k] += x * table.q[k - 1];
    }
    return table;
}

bool is_valid_shifted_tableau(const StrictPartition& lambda, const TableauRows& rows) {
    const int len = lambda.length();
    if (static_cast<int>(rows.size()) != len) return false;
    for (int i = 0; i < len; ++i)
        if (static_cast<int>(rows[i].size()) != lambda.part(i)) return false;

    auto code = [](const TableauCell& c) { return 2 * c.value - (c.marked ? 2 : 1); };

    for (int i = 0; i < len; ++i) {
        for (int j = 0; j + 1 < lambda.part(i); ++j)
            if (code(rows[i][j]) > code(rows[i][j + 1])) return false;
        // Column comparisons: row i+1 is indented one cell to the right, so
        // rows[i+1][j] sits below rows[i][j+1].
        if (i + 1 < len)
            for (int j = 0; j < lambda.part(i + 1); ++j)
                if (code(rows[i][j + 1]) > code(rows[i + 1][j])) return false;
        // At most one marked k per row.
        for (int j = 0; j + 1 < lambda.part(i); ++j)
            if (rows[i][j].marked && rows[i][j + 1].marked &&
                rows[i][j].value == rows[i][j + 1].value)
                return false;
    }
    // At most one unmarked k per column (equal unmarked values in a column are
    // vertically adjacent because columns are weakly increasing).
    for (int i = 0; i + 1 < len; ++i)
        for (int j = 0; j < lambda.part(i + 1); ++j) {
            const TableauCell& above = rows[i][j + 1];
            const TableauCell& below = rows[i + 1][j];
            if (!above.marked && !below.marked && above.value == below.value) return false;
        }
    return true;
}

std::vector<int> tableau_value_counts(const TableauRows& rows, int max_value) {
    std::vector<int> counts(max_value, 0);
    for (const auto& row : rows)
        for (const auto& cell : row) {
            if (cell.value < 1 || cell.value > max_value)
                throw std::invalid_argument("tableau_value_counts: value out of range");
            ++counts[cell.value - 1];
        }
    return counts;
}

namespace {

// Backtracking filler shared by Q_lambda_comb and d_s. Cells are visited
// row-major; constraints are checked incrementally against the left and
// upper neighbours plus the per-row/per-column multiplicity rules.
template <class T>
class TableauEnumerator {
public:
    TableauEnumerator(const StrictPartition& lambda, const std::vector<T>& xs)
        : lambda_(lambda), xs_(xs), m_(static_cast<int>(xs.size())) {
        const int len = lambda.length();
        rows_.resize(len);
        for (int i = 0; i < len; ++i) rows_[i].assign(lambda.part(i), 0);
        row_marked_.assign(len, std::vector<char>(m_ + 1, 0));
        int max_col = len == 0 ? 0 : len + lambda.part(0);
        col_unmarked_.assign(max_col + 1, std::vector<char>(m_ + 1, 0));
    }

    T run() {
        acc_ = T(0);
        fill(0, 0, T(1));
        return acc_;
    }

private:
    // cell codes: k' -> 2k-1, k -> 2k; 0 is the empty sentinel
    void fill(int i, int j, T monomial) {
        if (i == lambda_.length()) {
            acc_ += monomial;
            return;
        }
        int ni = i, nj = j + 1;
        if (nj == lambda_.part(i)) {
            ni = i + 1;
            nj = 0;
        }
        int lo = 1;  // minimal admissible code
        if (j > 0) lo = std::max(lo, rows_[i][j - 1]);
        // The cell above (i,j) in shifted coordinates is rows_[i-1][j+1].
        if (i > 0 && j + 1 < static_cast<int>(rows_[i - 1].size())) {
            lo = std::max(lo, rows_[i - 1][j + 1]);
        }
        for (int code = lo; code <= 2 * m_; ++code) {
            int value = (code + 1) / 2;
            bool marked = (code % 2 == 1);
            if (marked) {
                if (row_marked_[i][value]) continue;
            } else {
                if (col_unmarked_[col_of(i, j)][value]) continue;
            }
            // A marked letter may repeat in a column but not in a row; an
            // unmarked letter may repeat in a row but not in a column.
            rows_[i][j] = code;
            if (marked)
                row_marked_[i][value] = 1;
            else
                col_unmarked_[col_of(i, j)][value] = 1;
            fill(ni, nj, monomial * xs_[value - 1]);
            if (marked)
                row_marked_[i][value] = 0;
            else
                col_unmarked_[col_of(i, j)][value] = 0;
        }
        rows_[i][j] = 0;
    }

    int col_of(int i, int j) const { return i + 1 + j; }  // 1-based shifted column

    const StrictPartition& lambda_;
    const std::vector<T>& xs_;
    int m_;
    std::vector<std::vector<int>> rows_;  // codes, 0 = empty
    std::vector<std::vector<char>> row_marked_;
    std::vector<std::vector<char>> col_unmarked_;
    T acc_{};
};

}  // namespace

template <class T>
T Q_lambda_comb(const Specialization& spec, const StrictPartition& lambda) {
    if (lambda.weight() > 12 || spec.size() > 6)
        throw std::length_error("Q_lambda_comb: enumeration guard (|lambda| <= 12, m <= 6)");
    if (lambda.length() > spec.size()) return T(0);  // diagonal needs l(lambda) distinct values
    auto xs = spec.values_as<T>();
    TableauEnumerator<T> en(lambda, xs);
    return en.run();
}

std::int64_t count_standard_shifted(const StrictPartition& lambda) {
    if (lambda.weight() > 20)
        throw std::length_error("count_standard_shifted: |lambda| <= 20");
    const int n = lambda.weight();
    Rational r(1);
    for (int k = 2; k <= n; ++k) r *= k;
    for (int i = 0; i < lambda.length(); ++i)
        for (int k = 2; k <= lambda.part(i); ++k) r /= k;
    for (int i = 0; i < lambda.length(); ++i)
        for (int j = i + 1; j < lambda.length(); ++j)
            r *= Rational(lambda.part(i) - lambda.part(j), lambda.part(i) + lambda.part(j));
    if (denominator(r) != 1)
        throw std::logic_error("count_standard_shifted: non-integer result");
    return numerator(r).convert_to<std::int64_t>();
}

std::int64_t d_s(const StrictPartition& lambda, int letters) {
    if (letters < 0) throw std::invalid_argument("d_s: negative letter count");
    Specialization ones{std::vector<Rational>(letters, Rational(1))};
    Rational q = Q_lambda_comb<Rational>(ones, lambda);
    if (denominator(q) != 1) throw std::logic_error("d_s: non-integer result");
    return numerator(q).convert_to<std::int64_t>();
}

template QCoeffTable<Rational> q_coeffs<Rational>(const Specialization&, int);
template QCoeffTable<double> q_coeffs<double>(const Specialization&, int);
template QCoeffTable<XScalar> q_coeffs<XScalar>(const Specialization&, int);
template QCoeffTable<MpFloat> q_coeffs<MpFloat>(const Specialization&, int);
template Rational Q_lambda_comb<Rational>(const Specialization&, const StrictPartition&);
template double Q_lambda_comb<double>(const Specialization&, const StrictPartition&);

}  // namespace ssm
