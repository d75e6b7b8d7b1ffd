#include "wre/filter.hpp"

#include <algorithm>
#include <cmath>

#include "wre/error.hpp"

namespace wre {

std::vector<double> clamp_curve(std::span<const double> values) {
  std::vector<double> out(values.begin(), values.end());
  for (double& v : out) {
    if (!std::isfinite(v)) throw Error("filter: curve contains a non-finite value");
    v = std::clamp(v, 0.0, 1.0);
  }
  return out;
}

std::vector<double> enforce_monotone(std::span<const double> values) {
  std::vector<double> out(values.begin(), values.end());
  const std::size_t n = out.size();
  std::size_t i = 1;
  while (i < n) {
    if (out[i] <= out[i - 1]) {
      ++i;
      continue;
    }
    const double anchor = out[i - 1];
    std::size_t k = i + 1;
    while (k < n && out[k] > anchor) ++k;
    if (k == n) {
      std::fill(out.begin() + static_cast<std::ptrdiff_t>(i), out.end(), anchor);
      break;
    }
    const double target = out[k];
    const auto span = static_cast<double>(k - (i - 1));
    for (std::size_t j = i; j < k; ++j) {
      const double t = static_cast<double>(j - (i - 1)) / span;
      // The max() keeps rounding from dipping below the right endpoint.
      out[j] = std::max(anchor - t * (anchor - target), target);
    }
    i = k + 1;
  }
  return out;
}

std::vector<double> apply_filter(std::span<const double> values) {
  return enforce_monotone(clamp_curve(values));
}

bool is_valid_curve(std::span<const double> values) noexcept {
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (!(values[i] >= 0.0 && values[i] <= 1.0)) return false;
    if (i > 0 && values[i] > values[i - 1]) return false;
  }
  return true;
}

}  // namespace wre
