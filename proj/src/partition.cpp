#include "spancount/partition.hpp"

#include <string>

#include "spancount/errors.hpp"

namespace spancount {

partition::partition(std::vector<int> parts) : parts_(std::move(parts)) {
    if (parts_.size() < 2)
        throw validation_error(reject_code::bad_partition,
                               "partition needs at least 2 parts, got " +
                                   std::to_string(parts_.size()));
    offsets_.reserve(parts_.size() + 1);
    offsets_.push_back(0);
    for (int p : parts_) {
        if (p < 1)
            throw validation_error(reject_code::bad_partition,
                                   "part sizes must be >= 1, got " + std::to_string(p));
        offsets_.push_back(offsets_.back() + p);
    }
    n_ = offsets_.back();
    part_of_.resize(static_cast<std::size_t>(n_));
    for (int i = 0; i < num_parts(); ++i)
        for (int v = block_start(i); v < block_start(i) + parts_[static_cast<std::size_t>(i)]; ++v)
            part_of_[static_cast<std::size_t>(v)] = i;
}

std::vector<std::pair<int, int>> partition::cross_edges() const {
    std::vector<std::pair<int, int>> edges;
    edges.reserve(static_cast<std::size_t>(cross_edge_count()));
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (part_of(u) != part_of(v))
                edges.emplace_back(u, v);
    return edges;
}

std::int64_t partition::cross_edge_count() const {
    std::int64_t sum_sq = 0;
    for (int p : parts_)
        sum_sq += static_cast<std::int64_t>(p) * p;
    return (static_cast<std::int64_t>(n_) * n_ - sum_sq) / 2;
}

}  // namespace spancount
