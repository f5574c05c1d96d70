#pragma once

#include <cstdint>

#include "coldrec/data.hpp"

namespace coldrec {

struct SyntheticConfig {
  std::size_t n = 1000;  // players
  std::size_t m = 300;   // games
  std::size_t r = 40;    // tags
  std::size_t s = 20;    // questions
  double density = 0.05;        // target like fraction, in (0,1)
  std::size_t interaction_rank = 4;
  double noise = 0.0;           // per-entry flip probability, in [0, 0.5)
  std::uint64_t rng_seed = 0;
};

// Draws a dataset with a planted low-rank tag-by-question interaction:
// Bernoulli tags, uniform Likert answers, like probabilities given by a
// logistic squashing of the bilinear score with a bisection-calibrated
// intercept, then optional label noise. Fully determined by rng_seed.
Dataset generate_synthetic(const SyntheticConfig& config);

}  // namespace coldrec
