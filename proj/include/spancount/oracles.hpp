#pragma once

#include <functional>
#include <optional>

#include "spancount/contraction.hpp"
#include "spancount/forest.hpp"
#include "spancount/matrix.hpp"
#include "spancount/numeric.hpp"
#include "spancount/partition.hpp"

namespace spancount {

/// Spanning-tree count as the (1,1) cofactor of a Laplacian. The input is
/// checked to actually be one (square, integral, symmetric, zero row sums,
/// non-positive off-diagonal). With check_all_cofactors, adj L = τ·J is
/// verified entrywise.
big_int matrix_tree_count(const exact_matrix& laplacian, bool check_all_cofactors = false);

/// τ = ((−1)^{c−1}/c) · a₁ with a₁ the linear coefficient of det(xI − L);
/// cross-checked against matrix_tree_count before returning.
big_int charpoly_derivative_count(const exact_matrix& laplacian, int component_count);

/// Multigraph spanning-tree count by enumerating acyclic (c−1)-subsets of
/// the support edges and summing multiplicity products. Guard: c ≤ 10.
big_int brute_force_contracted(const contracted_graph& graph);

/// Counts completions of F to a spanning tree by enumerating subsets of the
/// remaining cross-part edges. Guard: n ≤ 8.
big_int brute_force_original(const partition& part, const spanning_forest& forest);

/// Every spanning forest of K_{n₁,…,n_s} (every acyclic cross-part edge
/// subset), visited in lexicographic edge-set order, the empty forest first.
/// Guard: n ≤ 8. max_edges caps the forest size when given.
void all_forests(const partition& part,
                 const std::function<void(const spanning_forest&)>& visit,
                 std::optional<int> max_edges = std::nullopt);

}  // namespace spancount
