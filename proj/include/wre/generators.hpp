#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "wre/graph.hpp"

namespace wre {

enum class Model { BA, ER, WS, Regular };

std::string_view to_string(Model m) noexcept;
std::optional<Model> parse_model(std::string_view name) noexcept;

struct GeneratorConfig {
  Model model = Model::ER;
  std::size_t n = 0;
  unsigned mean_degree = 4;  // BA: m = k/2; ER: p = k/(n-1); WS/Regular: lattice/exact degree
  std::uint64_t seed = 0;
  double ws_rewire_prob = 0.1;
};

/// Throws wre::Error when the configuration is infeasible.
void validate(const GeneratorConfig& config);

/// Deterministic in `config`: equal configs give equal graphs.
Graph generate(const GeneratorConfig& config);

Graph barabasi_albert(std::size_t n, unsigned m, std::uint64_t seed);
Graph erdos_renyi(std::size_t n, double p, std::uint64_t seed);
Graph watts_strogatz(std::size_t n, unsigned k, double rewire_prob, std::uint64_t seed);
Graph random_regular(std::size_t n, unsigned k, std::uint64_t seed);

}  // namespace wre
