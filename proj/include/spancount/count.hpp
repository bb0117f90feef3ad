#pragma once

#include <optional>
#include <utility>

#include "spancount/matrix.hpp"
#include "spancount/numeric.hpp"
#include "spancount/partition.hpp"
#include "spancount/profile.hpp"

namespace spancount {

/// The s×s counting matrix Z(x) = I + Y(x) evaluated at x = 0 together with
/// its entrywise derivative there:
///   Z0[i][j]      = δ_ij − Σ_p n_{jp}(m_p − n_{ip}) / α_p
///   Zprime0[i][j] = −Σ_p n_{jp}(m_p − n_{ip}) / α_p²
/// Z0 is singular of rank s−1; both facts are checked at construction.
struct z_matrices {
    exact_matrix z0;
    exact_matrix zprime0;
    big_int prod_alpha;  // Π_p α_p
};

z_matrices build_z(const component_profile& profile);

/// Z(x) at an arbitrary rational point; x must avoid the poles {α_p}.
exact_matrix z_at(const component_profile& profile, const big_rat& x);

/// γ with adj Z(0) = γ(n·e − b)bᵀ, computed as cofactor C₁₁ / (n₁(n − n₁)).
/// With check_all_pairs, every C_ij/(n_i(n − n_j)) is asserted equal.
big_rat gamma_scalar(const z_matrices& z, const partition& part,
                     bool check_all_pairs = false);

enum class count_method {
    main_theorem,
    matrix_tree,
    charpoly_derivative,
    trace_form,
    brute_force_original,
    brute_force_contracted,
    closed_form_special_case,
};

const char* method_name(count_method m);

struct count_result {
    big_int value;
    count_method method = count_method::main_theorem;
    std::optional<std::pair<int, int>> cofactor_choice;  // 1-based (i,j)
    std::optional<big_rat> gamma;
};

/// τ_F = C_ij/(n_i(n − n_j)) · Π_p α_p, default choice (i,j) = (1,1).
/// The result is asserted to be a positive integer.
count_result main_count(const partition& part, const component_profile& profile,
                        std::optional<std::pair<int, int>> choice = std::nullopt,
                        bool check_all_pairs = false);

/// τ_F = (1/c)(Π_p α_p) · tr(−adj Z(0) · Z′(0)), evaluated literally via the
/// adjugate; the trace is asserted to equal c·γ before use.
count_result trace_form_count(const partition& part, const component_profile& profile);

}  // namespace spancount
