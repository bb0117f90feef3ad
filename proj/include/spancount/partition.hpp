#pragma once

#include <cstdint>
#include <utility>
#include <vector>

namespace spancount {

/// Part sizes n₁,…,n_s of the complete multipartite host graph. Vertices get
/// global indices 0..n−1 with part i owning the contiguous block starting at
/// Σ_{k<i} n_k. Requires s ≥ 2 and every n_i ≥ 1.
class partition {
public:
    explicit partition(std::vector<int> parts);

    int num_parts() const noexcept { return static_cast<int>(parts_.size()); }
    int total() const noexcept { return n_; }
    int part_size(int i) const { return parts_[static_cast<std::size_t>(i)]; }
    const std::vector<int>& parts() const noexcept { return parts_; }
    int block_start(int i) const { return offsets_[static_cast<std::size_t>(i)]; }
    int part_of(int vertex) const { return part_of_[static_cast<std::size_t>(vertex)]; }

    /// All cross-part edges (u,v), u < v, in lexicographic order.
    std::vector<std::pair<int, int>> cross_edges() const;
    /// |E(K_{n₁,…,n_s})| = (n² − Σ n_i²) / 2.
    std::int64_t cross_edge_count() const;

    bool operator==(const partition&) const = default;

private:
    std::vector<int> parts_;
    std::vector<int> offsets_;  // size s+1, offsets_[s] == n
    std::vector<int> part_of_;  // vertex -> part lookup
    int n_ = 0;
};

}  // namespace spancount
