#pragma once

#include <utility>
#include <vector>

#include "spancount/partition.hpp"

namespace spancount {

class disjoint_set {
public:
    explicit disjoint_set(int n);

    int find(int v) const;
    /// Joins the classes of a and b; false if they were already joined.
    bool unite(int a, int b);
    int components() const noexcept { return components_; }

private:
    mutable std::vector<int> parent_;  // path halving on find
    std::vector<int> size_;
    int components_;
};

/// Validated spanning forest of a complete multipartite graph: cross-part
/// edges only, acyclic, no duplicates. Edges are stored as (u,v) with u < v,
/// sorted. Vertices not touched by any edge are singleton components.
class spanning_forest {
public:
    spanning_forest() = default;  // the empty forest

    const std::vector<std::pair<int, int>>& edges() const noexcept { return edges_; }
    int edge_count() const noexcept { return static_cast<int>(edges_.size()); }

    bool operator==(const spanning_forest&) const = default;

private:
    friend spanning_forest validate_forest(const partition&,
                                           std::vector<std::pair<int, int>>);
    std::vector<std::pair<int, int>> edges_;
};

/// Checks range, cross-part membership, duplicates and acyclicity, in that
/// order; throws validation_error naming the offending edge.
spanning_forest validate_forest(const partition& part,
                                std::vector<std::pair<int, int>> edges);

/// Component count of the graph ({0..n−1}, edges); no validation.
int count_components_after(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace spancount
