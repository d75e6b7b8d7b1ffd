#pragma once

#include <span>
#include <vector>

namespace wre {

/// Maps values above 1 to 1 and below 0 to 0. Throws on non-finite input.
std::vector<double> clamp_curve(std::span<const double> values);

/// Repairs increases: when values[i] > values[i-1], the run up to the first
/// k with values[k] <= values[i-1] is replaced by the straight line from
/// values[i-1] to values[k]. With no such k the tail is held at values[i-1].
/// The first entry is never treated as a violation.
std::vector<double> enforce_monotone(std::span<const double> values);

/// clamp_curve then enforce_monotone. Idempotent; the identity on curves
/// already in [0, 1] and non-increasing.
std::vector<double> apply_filter(std::span<const double> values);

/// True when every value is in [0, 1] and the sequence is non-increasing.
bool is_valid_curve(std::span<const double> values) noexcept;

}  // namespace wre
