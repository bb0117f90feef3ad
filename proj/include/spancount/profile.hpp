#pragma once

#include <cstdint>
#include <vector>

#include "spancount/forest.hpp"
#include "spancount/partition.hpp"

namespace spancount {

/// Per-component bookkeeping of a forest inside its partition: component
/// sizes m_p, the s×c occupancy matrix N with n_{ip} = |X_i ∩ V(T_p)|, and
/// the scalars α_p = n·m_p − Σ_i n_i·n_{ip}. Components are numbered by
/// ascending smallest contained vertex.
struct component_profile {
    int component_count = 0;                       // c
    std::vector<int> component_of;                 // vertex -> component (0-based)
    std::vector<std::int64_t> sizes;               // m_p
    std::vector<std::vector<std::int64_t>> counts; // N, s rows by c columns
    std::vector<std::int64_t> alpha;               // α_p

    bool operator==(const component_profile&) const = default;
};

/// Derives the profile; cross-checks the counting identities (the three α
/// forms, the row/column sums of N, α_p ≥ m_p ≥ 1) and throws internal_error
/// if any fails.
component_profile decompose(const partition& part, const spanning_forest& forest);

/// Profile with components renumbered as perm[new] = old. Every counting
/// formula must be invariant under this.
component_profile reorder_components(const component_profile& profile,
                                     const std::vector<int>& perm);

}  // namespace spancount
