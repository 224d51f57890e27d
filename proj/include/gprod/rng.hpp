#pragma once

#include <bit>
#include <cstdint>
#include <span>
#include <utility>

namespace gprod {

/// (seed, stream) pair identifying one reproducible random sequence.
struct RngSeed {
  std::uint64_t seed = 0;
  std::uint64_t stream = 0;

  constexpr RngSeed with_stream(std::uint64_t s) const { return {seed, s}; }
  friend constexpr bool operator==(const RngSeed&, const RngSeed&) = default;
};

constexpr std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

/// xoshiro256** seeded through SplitMix64 from (seed, stream).
///
/// All sampling helpers are implemented here rather than through <random>
/// distributions, whose algorithms are implementation-defined; output is
/// therefore bit-identical across compilers and platforms.
class Rng {
 public:
  using result_type = std::uint64_t;

  explicit Rng(RngSeed s = {}) {
    std::uint64_t sm = s.seed;
    const std::uint64_t a = splitmix64(sm);
    std::uint64_t mixed = a ^ (s.stream * 0xd1342543de82ef95ULL + 0x2545f4914f6cdd1dULL);
    for (auto& word : state_) word = splitmix64(mixed);
  }

  static constexpr result_type min() { return 0; }
  static constexpr result_type max() { return ~result_type{0}; }

  result_type operator()() {
    const std::uint64_t result = std::rotl(state_[1] * 5, 7) * 9;
    const std::uint64_t t = state_[1] << 17;
    state_[2] ^= state_[0];
    state_[3] ^= state_[1];
    state_[1] ^= state_[2];
    state_[0] ^= state_[3];
    state_[2] ^= t;
    state_[3] = std::rotl(state_[3], 45);
    return result;
  }

  /// Uniform on [0, 1) with 53 random bits.
  double uniform() { return static_cast<double>((*this)() >> 11) * 0x1.0p-53; }

  /// Bernoulli(p); p = 0 never fires and p = 1 always fires.
  bool bernoulli(double p) { return uniform() < p; }

  /// Uniform integer in [0, bound), Lemire's multiply-shift with rejection.
  std::uint64_t below(std::uint64_t bound) {
    if (bound == 0) return 0;
    unsigned __int128 m = static_cast<unsigned __int128>((*this)()) * bound;
    auto low = static_cast<std::uint64_t>(m);
    if (low < bound) {
      const std::uint64_t threshold = (0 - bound) % bound;
      while (low < threshold) {
        m = static_cast<unsigned __int128>((*this)()) * bound;
        low = static_cast<std::uint64_t>(m);
      }
    }
    return static_cast<std::uint64_t>(m >> 64);
  }

  template <class T>
  void shuffle(std::span<T> items) {
    for (std::size_t i = items.size(); i > 1; --i) {
      const auto j = static_cast<std::size_t>(below(i));
      std::swap(items[i - 1], items[j]);
    }
  }

 private:
  std::uint64_t state_[4];
};

}  // namespace gprod
