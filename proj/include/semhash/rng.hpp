#pragma once

#include <cstdint>
#include <string_view>
#include <utility>
#include <vector>

namespace semhash {

// Source of randomness for augmentation, fold shuffling and the seeded
// trainers. An interface so tests can script draws; the production
// implementation below wraps a fixed splitmix64 generator, keeping results
// independent of the standard library's engines and distributions.
class RandomSource {
 public:
  virtual ~RandomSource() = default;
  virtual std::uint64_t next_u64() = 0;

  // Uniform integer in [0, n). n must be > 0.
  std::size_t uniform(std::size_t n) {
    unsigned __int128 m = static_cast<unsigned __int128>(next_u64()) * n;
    return static_cast<std::size_t>(m >> 64);
  }

  // Uniform double in [0, 1).
  double uniform_real() {
    return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
  }

  template <typename T>
  void shuffle(std::vector<T>& v) {
    for (std::size_t i = v.size(); i > 1; --i) {
      std::swap(v[i - 1], v[uniform(i)]);
    }
  }
};

class Rng final : public RandomSource {
 public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next_u64() override {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed from a base seed and a salt string,
// so per-cell generators in the benchmark do not overlap.
std::uint64_t salted_seed(std::uint64_t base, std::string_view salt);

// FNV-1a over a byte string; also used for the model file's preprocessing
// config tag.
std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace semhash
