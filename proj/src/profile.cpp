#include "spancount/profile.hpp"

#include <string>

#include "spancount/errors.hpp"

namespace spancount {

component_profile decompose(const partition& part, const spanning_forest& forest) {
    const int n = part.total();
    const int s = part.num_parts();

    disjoint_set joined(n);
    for (const auto& e : forest.edges())
        joined.unite(e.first, e.second);

    component_profile pr;
    pr.component_of.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> index_of_root(static_cast<std::size_t>(n), -1);
    for (int v = 0; v < n; ++v) {
        const int root = joined.find(v);
        if (index_of_root[static_cast<std::size_t>(root)] < 0) {
            index_of_root[static_cast<std::size_t>(root)] = pr.component_count++;
        }
        pr.component_of[static_cast<std::size_t>(v)] =
            index_of_root[static_cast<std::size_t>(root)];
    }

    const int c = pr.component_count;
    pr.sizes.assign(static_cast<std::size_t>(c), 0);
    pr.counts.assign(static_cast<std::size_t>(s),
                     std::vector<std::int64_t>(static_cast<std::size_t>(c), 0));
    for (int v = 0; v < n; ++v) {
        const int p = pr.component_of[static_cast<std::size_t>(v)];
        ++pr.sizes[static_cast<std::size_t>(p)];
        ++pr.counts[static_cast<std::size_t>(part.part_of(v))][static_cast<std::size_t>(p)];
    }

    pr.alpha.assign(static_cast<std::size_t>(c), 0);
    for (int p = 0; p < c; ++p) {
        std::int64_t dot = 0;
        for (int i = 0; i < s; ++i)
            dot += static_cast<std::int64_t>(part.part_size(i)) *
                   pr.counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
        pr.alpha[static_cast<std::size_t>(p)] =
            static_cast<std::int64_t>(n) * pr.sizes[static_cast<std::size_t>(p)] - dot;
    }

    // The counting identities are theorems for valid inputs; a violation is a
    // bug in this function, not a data error.
    std::int64_t size_total = 0;
    for (int p = 0; p < c; ++p)
        size_total += pr.sizes[static_cast<std::size_t>(p)];
    if (size_total != n)
        throw internal_error("decompose: component sizes do not sum to n");
    for (int i = 0; i < s; ++i) {
        std::int64_t row = 0;
        for (int p = 0; p < c; ++p)
            row += pr.counts[static_cast<std::size_t>(i)][static_cast<std::size_t>(p)];
        if (row != part.part_size(i))
            throw internal_error("decompose: row sum of N differs from part size");
    }
    for (int p = 0; p < c; ++p) {
        const auto pu = static_cast<std::size_t>(p);
        std::int64_t col = 0, by_parts = 0, by_counts = 0;
        for (int i = 0; i < s; ++i) {
            const auto iu = static_cast<std::size_t>(i);
            col += pr.counts[iu][pu];
            by_parts += static_cast<std::int64_t>(part.part_size(i)) *
                        (pr.sizes[pu] - pr.counts[iu][pu]);
            by_counts += static_cast<std::int64_t>(n - part.part_size(i)) * pr.counts[iu][pu];
        }
        if (col != pr.sizes[pu])
            throw internal_error("decompose: column sum of N differs from component size");
        if (by_parts != pr.alpha[pu] || by_counts != pr.alpha[pu])
            throw internal_error("decompose: the three alpha forms disagree at component " +
                                 std::to_string(p + 1));
        if (pr.alpha[pu] < pr.sizes[pu] || pr.sizes[pu] < 1)
            throw internal_error("decompose: alpha_p >= m_p >= 1 violated at component " +
                                 std::to_string(p + 1));
    }
    return pr;
}

component_profile reorder_components(const component_profile& profile,
                                     const std::vector<int>& perm) {
    const int c = profile.component_count;
    if (static_cast<int>(perm.size()) != c)
        throw input_error("reorder_components: permutation size mismatch");
    component_profile out;
    out.component_count = c;
    out.sizes.resize(static_cast<std::size_t>(c));
    out.alpha.resize(static_cast<std::size_t>(c));
    out.counts.assign(profile.counts.size(),
                      std::vector<std::int64_t>(static_cast<std::size_t>(c)));
    std::vector<int> new_of_old(static_cast<std::size_t>(c), -1);
    for (int q = 0; q < c; ++q) {
        const int old = perm[static_cast<std::size_t>(q)];
        if (old < 0 || old >= c || new_of_old[static_cast<std::size_t>(old)] != -1)
            throw input_error("reorder_components: not a permutation");
        new_of_old[static_cast<std::size_t>(old)] = q;
        out.sizes[static_cast<std::size_t>(q)] = profile.sizes[static_cast<std::size_t>(old)];
        out.alpha[static_cast<std::size_t>(q)] = profile.alpha[static_cast<std::size_t>(old)];
        for (std::size_t i = 0; i < profile.counts.size(); ++i)
            out.counts[i][static_cast<std::size_t>(q)] =
                profile.counts[i][static_cast<std::size_t>(old)];
    }
    out.component_of.reserve(profile.component_of.size());
    for (int p : profile.component_of)
        out.component_of.push_back(new_of_old[static_cast<std::size_t>(p)]);
    return out;
}

}  // namespace spancount
