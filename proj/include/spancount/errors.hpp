#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

namespace spancount {

// Caller-supplied input is unusable. Maps to CLI exit code 2.
class input_error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class dimension_error : public input_error {
public:
    using input_error::input_error;
};

enum class reject_code {
    bad_partition,
    vertex_out_of_range,
    intra_part_edge,
    duplicate_edge,
    cycle_detected,
};

// Structured rejection from instance validation; carries the offending edge
// when one exists.
class validation_error : public input_error {
public:
    validation_error(reject_code code, const std::string& message,
                     std::optional<std::pair<int, int>> edge = std::nullopt)
        : input_error(message), code_(code), edge_(edge) {}

    reject_code code() const noexcept { return code_; }
    const std::optional<std::pair<int, int>>& edge() const noexcept { return edge_; }

private:
    reject_code code_;
    std::optional<std::pair<int, int>> edge_;
};

class parse_error : public input_error {
public:
    parse_error(std::string field, const std::string& message)
        : input_error(field.empty() ? message : field + ": " + message),
          field_(std::move(field)) {}

    const std::string& field() const noexcept { return field_; }

private:
    std::string field_;
};

// Brute-force guard refusal: the instance is too large to enumerate.
class guard_error : public input_error {
public:
    using input_error::input_error;
};

// A proven identity failed to hold. Always an implementation bug.
class internal_error : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

}  // namespace spancount
