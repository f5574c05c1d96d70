#pragma once

#include <cstdint>
#include <random>
#include <string_view>
#include <vector>

namespace coldrec {

// Seeded random source with reproducible draws. The mt19937_64 engine is
// fully specified by the standard; the helpers below replace the std
// distributions, whose output sequences are implementation-defined.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : eng_(seed) {}

  std::uint64_t next_u64() { return eng_(); }

  // Unbiased integer in [0, bound), bound > 0. Rejection sampling.
  std::uint64_t next_below(std::uint64_t bound);

  // Uniform in [0, 1) with 53-bit resolution.
  double next_unit() { return static_cast<double>(eng_() >> 11) * 0x1.0p-53; }

  // Uniform integer in [lo, hi], inclusive.
  int next_int(int lo, int hi);

  // Standard normal via Box-Muller; one value cached between calls.
  double next_gaussian();

  // In-place Fisher-Yates shuffle.
  template <class T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::size_t j = static_cast<std::size_t>(next_below(i));
      std::swap(v[i - 1], v[j]);
    }
  }

  // `count` distinct indices drawn from [0, population), returned sorted.
  std::vector<std::size_t> sample(std::size_t population, std::size_t count);

 private:
  std::mt19937_64 eng_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

// Derives an independent child seed from a base seed and a label, so that
// separate phases of an algorithm consume separate streams.
std::uint64_t derive_seed(std::uint64_t base, std::string_view label);

}  // namespace coldrec
