#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "wre/attack.hpp"

namespace wre {

/// A (strategy, node) pair: strategy indexes MdaCurve::source_strategies.
struct Candidate {
  std::uint32_t strategy = 0;
  NodeId node = 0;
  friend bool operator==(const Candidate&, const Candidate&) = default;
};

struct MdaPosition {
  std::uint32_t gcc_size = 0;
  std::uint32_t winner_strategy = 0;
  NodeId winner_node = 0;
  std::vector<Candidate> alternatives;  // every candidate attaining gcc_size
};

/// Pointwise minimum of several attack curves on one graph.
struct MdaCurve {
  std::vector<MdaPosition> positions;
  std::vector<std::string> source_strategies;

  std::size_t node_count() const noexcept { return positions.size(); }
  double relative(std::size_t i) const noexcept {
    return static_cast<double>(positions[i].gcc_size) / static_cast<double>(positions.size());
  }
  std::vector<double> relative_values() const;
  std::vector<std::uint32_t> gcc_sizes() const;
};

/// Stacks the curves: position i keeps min_s curves[s].gcc_sizes[i] and every
/// (strategy, node) attaining it. The first attaining strategy is the winner.
/// Throws on an empty list or curves of differing length.
MdaCurve stack(std::span<const AttackCurve> curves);

/// D_MDA = (1/N) sum_i (g0 - G_MDA(i)), with g0 the intact relative GCC.
double destruction(const MdaCurve& mda, double g0);

/// R_W = (1/N) sum_i G_MDA(i).
double worst_robustness(const MdaCurve& mda);

/// Positions (0-based) won by each source strategy. The lists partition
/// 0..N-1.
std::vector<std::vector<std::size_t>> decompose(const MdaCurve& mda);

/// Collapses sorted positions into inclusive [first, last] runs.
std::vector<std::pair<std::size_t, std::size_t>> to_ranges(std::span<const std::size_t> positions);

}  // namespace wre
