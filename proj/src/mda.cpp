#include "wre/mda.hpp"

#include <algorithm>
#include <limits>

#include "wre/error.hpp"

namespace wre {

std::vector<double> MdaCurve::relative_values() const {
  std::vector<double> out(positions.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = relative(i);
  return out;
}

std::vector<std::uint32_t> MdaCurve::gcc_sizes() const {
  std::vector<std::uint32_t> out(positions.size());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = positions[i].gcc_size;
  return out;
}

MdaCurve stack(std::span<const AttackCurve> curves) {
  if (curves.empty()) throw Error("stack: need at least one attack curve");
  const std::size_t n = curves.front().node_count();
  for (const auto& c : curves) {
    if (c.node_count() != n || c.order.size() != n) {
      throw Error("stack: curves differ in length (" + std::to_string(c.node_count()) + " vs " +
                  std::to_string(n) + ")");
    }
  }
  MdaCurve mda;
  mda.positions.resize(n);
  for (const auto& c : curves) mda.source_strategies.push_back(c.strategy);
  for (std::size_t i = 0; i < n; ++i) {
    auto& pos = mda.positions[i];
    pos.gcc_size = std::numeric_limits<std::uint32_t>::max();
    for (const auto& c : curves) pos.gcc_size = std::min(pos.gcc_size, c.gcc_sizes[i]);
    for (std::uint32_t s = 0; s < curves.size(); ++s) {
      if (curves[s].gcc_sizes[i] == pos.gcc_size)
        pos.alternatives.push_back({s, curves[s].order[i]});
    }
    pos.winner_strategy = pos.alternatives.front().strategy;
    pos.winner_node = pos.alternatives.front().node;
  }
  return mda;
}

double destruction(const MdaCurve& mda, double g0) {
  if (mda.node_count() == 0) return 0.0;
  // (1/N) sum_i (g0 - G(i)) == g0 - mean G.
  return g0 - worst_robustness(mda);
}

double worst_robustness(const MdaCurve& mda) {
  const std::size_t n = mda.node_count();
  if (n == 0) return 0.0;
  // Summing integers first keeps R_W + D_MDA == 1 exact for connected graphs.
  double total = 0.0;
  for (const auto& p : mda.positions) total += p.gcc_size;
  return total / (static_cast<double>(n) * static_cast<double>(n));
}

std::vector<std::vector<std::size_t>> decompose(const MdaCurve& mda) {
  std::vector<std::vector<std::size_t>> owned(mda.source_strategies.size());
  for (std::size_t i = 0; i < mda.positions.size(); ++i)
    owned[mda.positions[i].winner_strategy].push_back(i);
  return owned;
}

std::vector<std::pair<std::size_t, std::size_t>> to_ranges(std::span<const std::size_t> positions) {
  std::vector<std::pair<std::size_t, std::size_t>> ranges;
  for (std::size_t p : positions) {
    if (!ranges.empty() && ranges.back().second + 1 == p) {
      ranges.back().second = p;
    } else {
      ranges.emplace_back(p, p);
    }
  }
  return ranges;
}

}  // namespace wre
