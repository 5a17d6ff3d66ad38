#pragma once

#include <compare>
#include <utility>
#include <vector>

namespace ssm {

// Partition with strictly decreasing positive parts; the empty partition is
// the empty list.
class StrictPartition {
public:
    StrictPartition() = default;
    explicit StrictPartition(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int weight() const { return weight_; }
    int length() const { return static_cast<int>(parts_.size()); }
    bool empty() const { return parts_.empty(); }
    int part(int i) const { return parts_[i]; }  // 0-based
    int largest() const { return parts_.empty() ? 0 : parts_[0]; }

    friend bool operator==(const StrictPartition&, const StrictPartition&) = default;
    friend auto operator<=>(const StrictPartition& a, const StrictPartition& b) {
        return a.parts_ <=> b.parts_;
    }

private:
    std::vector<int> parts_;
    int weight_ = 0;
};

// All strict partitions of weight N, lexicographically descending by parts.
std::vector<StrictPartition> enumerate_strict(int weight);

// All strict partitions with largest part <= max_part and weight <= max_weight,
// ordered by weight, then lexicographically descending within a weight.
std::vector<StrictPartition> enumerate_strict_bounded(int max_part, int max_weight);

// Cells (row, column), 1-based, of the shifted shape: row i spans columns
// i .. i + lambda_i - 1.
std::vector<std::pair<int, int>> shifted_cells(const StrictPartition& lambda);

}  // namespace ssm
