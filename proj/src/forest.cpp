#include "spancount/forest.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "spancount/errors.hpp"

namespace spancount {

namespace {
std::string edge_str(std::pair<int, int> e) {
    return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}
}  // namespace

disjoint_set::disjoint_set(int n)
    : parent_(static_cast<std::size_t>(n)), size_(static_cast<std::size_t>(n), 1), components_(n) {
    std::iota(parent_.begin(), parent_.end(), 0);
}

int disjoint_set::find(int v) const {
    while (parent_[static_cast<std::size_t>(v)] != v) {
        parent_[static_cast<std::size_t>(v)] =
            parent_[static_cast<std::size_t>(parent_[static_cast<std::size_t>(v)])];
        v = parent_[static_cast<std::size_t>(v)];
    }
    return v;
}

bool disjoint_set::unite(int a, int b) {
    int ra = find(a), rb = find(b);
    if (ra == rb)
        return false;
    if (size_[static_cast<std::size_t>(ra)] < size_[static_cast<std::size_t>(rb)])
        std::swap(ra, rb);
    parent_[static_cast<std::size_t>(rb)] = ra;
    size_[static_cast<std::size_t>(ra)] += size_[static_cast<std::size_t>(rb)];
    --components_;
    return true;
}

spanning_forest validate_forest(const partition& part,
                                std::vector<std::pair<int, int>> edges) {
    const int n = part.total();
    for (auto& e : edges) {
        if (e.first < 0 || e.first >= n || e.second < 0 || e.second >= n)
            throw validation_error(reject_code::vertex_out_of_range,
                                   "edge " + edge_str(e) + " references a vertex outside 0.." +
                                       std::to_string(n - 1),
                                   e);
        if (e.first > e.second)
            std::swap(e.first, e.second);
        if (part.part_of(e.first) == part.part_of(e.second))
            throw validation_error(reject_code::intra_part_edge,
                                   "edge " + edge_str(e) + " joins two vertices of part " +
                                       std::to_string(part.part_of(e.first) + 1),
                                   e);
    }
    std::sort(edges.begin(), edges.end());
    auto dup = std::adjacent_find(edges.begin(), edges.end());
    if (dup != edges.end())
        throw validation_error(reject_code::duplicate_edge,
                               "duplicate edge " + edge_str(*dup), *dup);
    disjoint_set components(n);
    for (const auto& e : edges)
        if (!components.unite(e.first, e.second))
            throw validation_error(reject_code::cycle_detected,
                                   "edge " + edge_str(e) + " closes a cycle", e);
    spanning_forest f;
    f.edges_ = std::move(edges);
    return f;
}

int count_components_after(int n, const std::vector<std::pair<int, int>>& edges) {
    disjoint_set d(n);
    for (const auto& e : edges)
        d.unite(e.first, e.second);
    return d.components();
}

}  // namespace spancount
