#include "spancount/count.hpp"

#include <string>

#include "spancount/errors.hpp"
#include "spancount/linalg.hpp"

namespace spancount {

z_matrices build_z(const component_profile& profile) {
    const int s = static_cast<int>(profile.counts.size());
    const int c = profile.component_count;
    z_matrices z;
    z.z0 = exact_matrix(static_cast<std::size_t>(s), static_cast<std::size_t>(s));
    z.zprime0 = exact_matrix(static_cast<std::size_t>(s), static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            big_rat value = i == j ? 1 : 0;
            big_rat slope = 0;
            for (int p = 0; p < c; ++p) {
                const auto pu = static_cast<std::size_t>(p);
                const std::int64_t num =
                    profile.counts[static_cast<std::size_t>(j)][pu] *
                    (profile.sizes[pu] - profile.counts[static_cast<std::size_t>(i)][pu]);
                if (num == 0) continue;
                const std::int64_t a = profile.alpha[pu];
                value -= make_rat(num, a);
                slope -= make_rat(num, a * a);
            }
            z.z0(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = value;
            z.zprime0(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = slope;
        }
    z.prod_alpha = 1;
    for (std::int64_t a : profile.alpha)
        z.prod_alpha *= a;

    if (det(z.z0) != 0)
        throw internal_error("build_z: Z(0) must be singular");
    if (rank(z.z0) != static_cast<std::size_t>(s - 1))
        throw internal_error("build_z: rank of Z(0) must be s-1");
    return z;
}

exact_matrix z_at(const component_profile& profile, const big_rat& x) {
    const int s = static_cast<int>(profile.counts.size());
    const int c = profile.component_count;
    for (std::int64_t a : profile.alpha)
        if (x == a)
            throw input_error("z_at: x = " + fraction_string(x) + " is a pole");
    exact_matrix z(static_cast<std::size_t>(s), static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i)
        for (int j = 0; j < s; ++j) {
            big_rat value = i == j ? 1 : 0;
            for (int p = 0; p < c; ++p) {
                const auto pu = static_cast<std::size_t>(p);
                const std::int64_t num =
                    profile.counts[static_cast<std::size_t>(j)][pu] *
                    (profile.sizes[pu] - profile.counts[static_cast<std::size_t>(i)][pu]);
                if (num == 0) continue;
                value += big_rat(num) / (x - profile.alpha[pu]);
            }
            z(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = value;
        }
    return z;
}

namespace {

big_rat cofactor_ratio(const exact_matrix& z0, const partition& part, int i, int j) {
    // i, j are 1-based part indices; the denominator is n_i(n − n_j).
    const std::int64_t ni = part.part_size(i - 1);
    const std::int64_t nj = part.part_size(j - 1);
    const big_rat c = cofactor(z0, static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1));
    return c / (ni * (part.total() - nj));
}

void check_choice(const partition& part, int i, int j) {
    if (i < 1 || i > part.num_parts() || j < 1 || j > part.num_parts())
        throw input_error("cofactor choice (" + std::to_string(i) + "," + std::to_string(j) +
                          ") out of range 1.." + std::to_string(part.num_parts()));
}

void check_all_ratios(const exact_matrix& z0, const partition& part, const big_rat& expected) {
    for (int i = 1; i <= part.num_parts(); ++i)
        for (int j = 1; j <= part.num_parts(); ++j)
            if (cofactor_ratio(z0, part, i, j) != expected)
                throw internal_error("cofactor choice (" + std::to_string(i) + "," +
                                     std::to_string(j) + ") disagrees with (1,1)");
}

}  // namespace

big_rat gamma_scalar(const z_matrices& z, const partition& part, bool check_all_pairs) {
    const big_rat gamma = cofactor_ratio(z.z0, part, 1, 1);
    if (check_all_pairs)
        check_all_ratios(z.z0, part, gamma);
    if (gamma <= 0)
        throw internal_error("gamma must be positive, got " + fraction_string(gamma));
    return gamma;
}

const char* method_name(count_method m) {
    switch (m) {
        case count_method::main_theorem: return "main";
        case count_method::matrix_tree: return "matrix-tree";
        case count_method::charpoly_derivative: return "charpoly";
        case count_method::trace_form: return "trace";
        case count_method::brute_force_original: return "brute-original";
        case count_method::brute_force_contracted: return "brute-contracted";
        case count_method::closed_form_special_case: return "closed-form";
    }
    return "unknown";
}

count_result main_count(const partition& part, const component_profile& profile,
                        std::optional<std::pair<int, int>> choice, bool check_all_pairs) {
    const auto [i, j] = choice.value_or(std::make_pair(1, 1));
    check_choice(part, i, j);
    const z_matrices z = build_z(profile);
    const big_rat ratio = cofactor_ratio(z.z0, part, i, j);
    if (check_all_pairs)
        check_all_ratios(z.z0, part, ratio);
    const big_rat tau = ratio * big_rat(z.prod_alpha);
    count_result result;
    result.value = require_integer(tau, "main_count");
    if (result.value < 1)
        throw internal_error("main_count: count must be positive, got " + result.value.str());
    result.method = count_method::main_theorem;
    result.cofactor_choice = std::make_pair(i, j);
    result.gamma = ratio;
    return result;
}

count_result trace_form_count(const partition& part, const component_profile& profile) {
    const z_matrices z = build_z(profile);
    const int c = profile.component_count;
    const exact_matrix adj = adjugate(z.z0);
    const std::size_t s = adj.rows();
    big_rat trace = 0;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = 0; k < s; ++k)
            trace -= adj(i, k) * z.zprime0(k, i);
    const big_rat gamma = gamma_scalar(z, part);
    if (trace != big_rat(c) * gamma)
        throw internal_error("trace_form_count: tr(-adj Z(0) Z'(0)) != c*gamma");
    const big_rat tau = big_rat(z.prod_alpha) * trace / c;
    count_result result;
    result.value = require_integer(tau, "trace_form_count");
    if (result.value < 1)
        throw internal_error("trace_form_count: count must be positive");
    result.method = count_method::trace_form;
    result.gamma = gamma;
    return result;
}

}  // namespace spancount
