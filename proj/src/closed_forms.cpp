#include "spancount/closed_forms.hpp"

#include <string>

#include "spancount/errors.hpp"

namespace spancount {

big_int cayley(int n) {
    if (n < 1)
        throw input_error("cayley: n must be >= 1");
    if (n == 1)
        return 1;
    return int_pow(n, static_cast<std::uint64_t>(n - 2));
}

big_int fiedler_sedlacek(int n1, int n2) {
    if (n1 < 1 || n2 < 1)
        throw input_error("fiedler_sedlacek: part sizes must be >= 1");
    return int_pow(n1, static_cast<std::uint64_t>(n2 - 1)) *
           int_pow(n2, static_cast<std::uint64_t>(n1 - 1));
}

big_int multipartite_total(const partition& part) {
    const int n = part.total();
    big_int out = int_pow(n, static_cast<std::uint64_t>(part.num_parts() - 2));
    for (int i = 0; i < part.num_parts(); ++i)
        out *= int_pow(n - part.part_size(i),
                       static_cast<std::uint64_t>(part.part_size(i) - 1));
    return out;
}

big_int moon(int n, const std::vector<std::int64_t>& component_sizes) {
    if (n < 1)
        throw input_error("moon: n must be >= 1");
    if (component_sizes.empty())
        throw input_error("moon: at least one component required");
    std::int64_t total = 0;
    for (std::int64_t m : component_sizes) {
        if (m < 1)
            throw input_error("moon: component sizes must be >= 1");
        total += m;
    }
    if (total != n)
        throw input_error("moon: component sizes sum to " + std::to_string(total) +
                          ", expected " + std::to_string(n));
    const auto c = static_cast<std::int64_t>(component_sizes.size());
    big_rat value = rat_pow(big_rat(n), c - 2);
    for (std::int64_t m : component_sizes)
        value *= m;
    return require_integer(value, "moon");
}

big_int dong_ge(const partition& part, const component_profile& profile) {
    if (part.num_parts() != 2)
        throw input_error("dong_ge: requires exactly 2 parts, got " +
                          std::to_string(part.num_parts()));
    const std::int64_t n1 = part.part_size(0);
    const std::int64_t n2 = part.part_size(1);
    big_rat product = 1;
    big_rat sum = 0;
    for (int p = 0; p < profile.component_count; ++p) {
        const auto pu = static_cast<std::size_t>(p);
        const std::int64_t term = profile.counts[0][pu] * n2 + profile.counts[1][pu] * n1;
        product *= term;
        sum += make_rat(profile.counts[0][pu] * profile.counts[1][pu], term);
    }
    big_rat tau = product * (big_rat(1) - sum) / (n1 * n2);
    const big_int value = require_integer(tau, "dong_ge");
    if (value < 1)
        throw internal_error("dong_ge: count must be positive, got " + value.str());
    return value;
}

}  // namespace spancount
