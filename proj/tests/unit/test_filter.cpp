#include <doctest.h>

#include <cmath>

#include "wre/error.hpp"
#include "wre/filter.hpp"
#include "wre/random.hpp"

using namespace wre;

namespace {

void check_close(const std::vector<double>& got, const std::vector<double>& want) {
  REQUIRE(got.size() == want.size());
  for (std::size_t i = 0; i < got.size(); ++i) CHECK(std::fabs(got[i] - want[i]) <= 1e-12);
}

}  // namespace

TEST_CASE("clamp examples") {
  check_close(clamp_curve(std::vector<double>{1.2, 0.5, -0.1}), {1.0, 0.5, 0.0});
  check_close(clamp_curve(std::vector<double>{0.9, 0.4, 0.0}), {0.9, 0.4, 0.0});
  check_close(clamp_curve(std::vector<double>{2.0, 2.0}), {1.0, 1.0});
  CHECK_THROWS_AS(clamp_curve(std::vector<double>{0.5, NAN}), Error);
  CHECK_THROWS_AS(apply_filter(std::vector<double>{INFINITY}), Error);
}

TEST_CASE("monotone repair examples") {
  check_close(enforce_monotone(std::vector<double>{1.0, 0.4, 0.6, 0.3}), {1.0, 0.4, 0.35, 0.3});
  check_close(enforce_monotone(std::vector<double>{1.0, 0.7, 0.2, 0.0}), {1.0, 0.7, 0.2, 0.0});
  check_close(enforce_monotone(std::vector<double>{0.5, 0.8, 0.9}), {0.5, 0.5, 0.5});
  // A longer run: anchor 0.6 at index 1, first k with value <= 0.6 is index 4.
  check_close(enforce_monotone(std::vector<double>{0.9, 0.6, 0.7, 0.8, 0.3, 0.1}),
              {0.9, 0.6, 0.5, 0.4, 0.3, 0.1});
  // The first entry is not compared against anything.
  check_close(enforce_monotone(std::vector<double>{0.2, 0.1}), {0.2, 0.1});
  CHECK(enforce_monotone(std::vector<double>{}).empty());
}

TEST_CASE("apply_filter examples") {
  check_close(apply_filter(std::vector<double>{1.3, 0.4, 0.6, -0.2}), {1.0, 0.4, 0.2, 0.0});
  check_close(apply_filter(std::vector<double>{0.5, 0.5, 0.5}), {0.5, 0.5, 0.5});
  const std::vector<double> valid{1.0, 0.99, 0.5, 0.5, 0.0};
  CHECK(apply_filter(valid) == valid);
}

TEST_CASE("filter output is valid, idempotent and keeps untouched values") {
  Rng rng(2024);
  for (int trial = 0; trial < 10000; ++trial) {
    std::vector<double> raw(1 + rng.below(60));
    for (double& v : raw) v = rng.uniform() * 1.6 - 0.3;
    const auto once = apply_filter(raw);
    REQUIRE(is_valid_curve(once));
    REQUIRE(apply_filter(once) == once);
    const auto clamped = clamp_curve(raw);
    const auto repaired = enforce_monotone(clamped);
    for (std::size_t i = 0; i < raw.size(); ++i) {
      // Values that are not above their repaired predecessor are kept.
      if (i == 0 || clamped[i] <= repaired[i - 1]) REQUIRE(repaired[i] == clamped[i]);
    }
  }
}

TEST_CASE("is_valid_curve") {
  CHECK(is_valid_curve(std::vector<double>{1.0, 1.0, 0.0}));
  CHECK_FALSE(is_valid_curve(std::vector<double>{0.5, 0.6}));
  CHECK_FALSE(is_valid_curve(std::vector<double>{1.1}));
  CHECK_FALSE(is_valid_curve(std::vector<double>{NAN}));
}
