#pragma once

#include <cstdint>
#include <vector>

#include "spancount/profile.hpp"

namespace spancount {

/// The contracted multigraph K/F: one vertex per forest component, w_{pq}
/// parallel edges between components p and q, loops removed, plus its
/// Laplacian.
struct contracted_graph {
    int order = 0;                                        // c
    std::vector<std::vector<std::int64_t>> multiplicity;  // w, symmetric, zero diagonal
    std::vector<std::vector<std::int64_t>> laplacian;     // L, zero row sums
};

/// w_{pq} = m_p·m_q − Σ_i n_{ip}·n_{iq} for p ≠ q.
std::vector<std::vector<std::int64_t>> edge_multiplicities(const component_profile& profile);

std::vector<std::vector<std::int64_t>> laplacian_from_multiplicities(
    const std::vector<std::vector<std::int64_t>>& multiplicity);

/// diag(α₁,…,α_c) + Nᵀ(I_s − J_s)N, computed entrywise.
std::vector<std::vector<std::int64_t>> structural_laplacian(const component_profile& profile);

/// Asserts that the Laplacian built from the given multiplicities equals the
/// structural rank-s form. A mismatch is an implementation bug and throws
/// internal_error.
void check_contraction_structure(const component_profile& profile,
                                 const std::vector<std::vector<std::int64_t>>& multiplicity);

/// Builds K/F with the structural cross-check applied.
contracted_graph contract(const component_profile& profile);

}  // namespace spancount
