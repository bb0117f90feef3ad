#pragma once

#include <cstdint>
#include <vector>

#include "spancount/numeric.hpp"
#include "spancount/partition.hpp"
#include "spancount/profile.hpp"

namespace spancount {

/// τ(K_n) = n^{n−2}; the single vertex counts as one (empty) tree.
big_int cayley(int n);

/// τ(K_{n₁,n₂}) = n₁^{n₂−1} · n₂^{n₁−1}.
big_int fiedler_sedlacek(int n1, int n2);

/// τ(K_{n₁,…,n_s}) = n^{s−2} · Π_i (n − n_i)^{n_i−1}.
big_int multipartite_total(const partition& part);

/// τ_F(K_n) = n^{c−2} · Π_p m_p for a forest with component sizes m_p.
/// Evaluated in rational arithmetic so c ∈ {1,2} needs no special casing;
/// integrality of the result is asserted.
big_int moon(int n, const std::vector<std::int64_t>& component_sizes);

/// The bipartite fixed-forest count
/// (1/(n₁n₂)) · Π_p(n_{1p}n₂ + n_{2p}n₁) · (1 − Σ_p n_{1p}n_{2p}/(n_{1p}n₂ + n_{2p}n₁)).
big_int dong_ge(const partition& part, const component_profile& profile);

}  // namespace spancount
