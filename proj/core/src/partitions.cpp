#include "ssm/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace ssm {

StrictPartition::StrictPartition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0) throw std::invalid_argument("StrictPartition: parts must be positive");
        if (i > 0 && parts_[i] >= parts_[i - 1])
            throw std::invalid_argument("StrictPartition: parts must strictly decrease");
    }
    weight_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

namespace {

// Descent over first parts keeps the output in lexicographic descending order.
void extend(std::vector<int>& stack, int remaining, int max_part,
            std::vector<StrictPartition>& out) {
    if (remaining == 0) {
        out.emplace_back(stack);
        return;
    }
    for (int p = std::min(remaining, max_part); p >= 1; --p) {
        // Parts below p must fit remaining - p: 1+2+...+(p-1) >= remaining - p needed.
        if ((p - 1) * p / 2 < remaining - p) continue;
        stack.push_back(p);
        extend(stack, remaining - p, p - 1, out);
        stack.pop_back();
    }
}

}  // namespace

std::vector<StrictPartition> enumerate_strict(int weight) {
    if (weight < 0) throw std::invalid_argument("enumerate_strict: negative weight");
    std::vector<StrictPartition> out;
    std::vector<int> stack;
    extend(stack, weight, weight, out);
    return out;
}

std::vector<StrictPartition> enumerate_strict_bounded(int max_part, int max_weight) {
    if (max_part < 0 || max_weight < 0)
        throw std::invalid_argument("enumerate_strict_bounded: negative bound");
    std::vector<StrictPartition> out;
    std::vector<int> stack;
    for (int w = 0; w <= max_weight; ++w) extend(stack, w, max_part, out);
    return out;
}

std::vector<std::pair<int, int>> shifted_cells(const StrictPartition& lambda) {
    std::vector<std::pair<int, int>> cells;
    cells.reserve(lambda.weight());
    for (int i = 1; i <= lambda.length(); ++i)
        for (int j = i; j < i + lambda.part(i - 1); ++j) cells.emplace_back(i, j);
    return cells;
}

}  // namespace ssm
