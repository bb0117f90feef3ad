#include "spancount/contraction.hpp"

#include <string>

#include "spancount/errors.hpp"

namespace spancount {

std::vector<std::vector<std::int64_t>> edge_multiplicities(const component_profile& profile) {
    const int c = profile.component_count;
    const int s = static_cast<int>(profile.counts.size());
    std::vector<std::vector<std::int64_t>> w(
        static_cast<std::size_t>(c), std::vector<std::int64_t>(static_cast<std::size_t>(c), 0));
    for (int p = 0; p < c; ++p)
        for (int q = p + 1; q < c; ++q) {
            std::int64_t same_part = 0;
            for (int i = 0; i < s; ++i)
                same_part += profile.counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] *
                             profile.counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)];
            const std::int64_t wpq =
                profile.sizes[static_cast<std::size_t>(p)] * profile.sizes[static_cast<std::size_t>(q)] -
                same_part;
            w[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = wpq;
            w[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)] = wpq;
        }
    return w;
}

std::vector<std::vector<std::int64_t>> laplacian_from_multiplicities(
    const std::vector<std::vector<std::int64_t>>& multiplicity) {
    const std::size_t c = multiplicity.size();
    std::vector<std::vector<std::int64_t>> lap(c, std::vector<std::int64_t>(c, 0));
    for (std::size_t p = 0; p < c; ++p) {
        std::int64_t degree = 0;
        for (std::size_t q = 0; q < c; ++q) {
            if (q == p) continue;
            degree += multiplicity[p][q];
            lap[p][q] = -multiplicity[p][q];
        }
        lap[p][p] = degree;
    }
    return lap;
}

std::vector<std::vector<std::int64_t>> structural_laplacian(const component_profile& profile) {
    const int c = profile.component_count;
    const int s = static_cast<int>(profile.counts.size());
    // (Nᵀ(I_s − J_s)N)[p][q] = Σ_i n_{ip}·n_{iq} − m_p·m_q.
    std::vector<std::vector<std::int64_t>> lap(
        static_cast<std::size_t>(c), std::vector<std::int64_t>(static_cast<std::size_t>(c), 0));
    for (int p = 0; p < c; ++p)
        for (int q = 0; q < c; ++q) {
            std::int64_t dot = 0;
            for (int i = 0; i < s; ++i)
                dot += profile.counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)] *
                       profile.counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(q)];
            std::int64_t entry = dot - profile.sizes[static_cast<std::size_t>(p)] *
                                           profile.sizes[static_cast<std::size_t>(q)];
            if (p == q)
                entry += profile.alpha[static_cast<std::size_t>(p)];
            lap[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)] = entry;
        }
    return lap;
}

void check_contraction_structure(const component_profile& profile,
                                 const std::vector<std::vector<std::int64_t>>& multiplicity) {
    const auto combinatorial = laplacian_from_multiplicities(multiplicity);
    const auto structural = structural_laplacian(profile);
    const std::size_t c = static_cast<std::size_t>(profile.component_count);
    for (std::size_t p = 0; p < c; ++p)
        for (std::size_t q = 0; q < c; ++q)
            if (combinatorial[p][q] != structural[p][q])
                throw internal_error(
                    "contracted Laplacian structure mismatch at (" + std::to_string(p + 1) +
                    "," + std::to_string(q + 1) + "): " + std::to_string(combinatorial[p][q]) +
                    " vs " + std::to_string(structural[p][q]));
}

contracted_graph contract(const component_profile& profile) {
    contracted_graph g;
    g.order = profile.component_count;
    g.multiplicity = edge_multiplicities(profile);
    check_contraction_structure(profile, g.multiplicity);
    g.laplacian = laplacian_from_multiplicities(g.multiplicity);
    return g;
}

}  // namespace spancount
