// relcomm - commutators of reflexive admissible relations on finite algebras
//
// Portable pseudorandom numbers. std::mt19937_64 is fully specified by the
// standard, but the std distributions are not, so bounded draws are done
// here by rejection sampling.

#pragma once

#include <cstdint>
#include <random>

namespace relcomm {

  inline std::uint64_t splitmix64(std::uint64_t x) noexcept {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  /// Seed for the \p index-th independent stream derived from \p seed.
  inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) noexcept {
    return splitmix64(splitmix64(seed) ^ splitmix64(index + 0x632be59bd9b4e019ull));
  }

  class Rng {
   public:
    explicit Rng(std::uint64_t seed) : _engine(seed) {}

    std::uint64_t next() {
      return _engine();
    }

    /// Uniform integer in [0, bound); bound must be positive.
    std::uint64_t below(std::uint64_t bound) {
      std::uint64_t const limit = ~std::uint64_t(0) - (~std::uint64_t(0) % bound);
      std::uint64_t       x;
      do {
        x = _engine();
      } while (x >= limit);
      return x % bound;
    }

   private:
    std::mt19937_64 _engine;
  };

}  // namespace relcomm
