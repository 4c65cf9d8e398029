#pragma once

#include <complex>
#include <cstdint>
#include <string_view>

namespace mcmimo {

// Seeded, splittable random stream (xoshiro256++ core, splitmix64 seeding).
// All stochastic code takes an explicit RngStream so that every result is a
// pure function of (master seed, stream label, stream index). Substreams for
// parallel work are derived with substream(), never by sharing a stream.
class RngStream {
 public:
  explicit RngStream(std::uint64_t seed);

  std::uint64_t next_u64();

  // Uniform on (0, 1]; 53-bit resolution.
  double uniform();

  // Standard normal, Box-Muller with a cached spare.
  double normal();

  // Circularly-symmetric complex Gaussian with total variance `var`
  // (real and imaginary parts each N(0, var/2)).
  std::complex<double> cnormal(double var = 1.0);

 private:
  std::uint64_t state_[4];
  double spare_ = 0.0;
  bool has_spare_ = false;
};

// Sub-seed derivation: splitmix64 chain over the master seed, an FNV-1a hash
// of the label, and the index. Documented so runs are reproducible across
// builds: seed' = mix(mix(mix(master) ^ fnv1a64(label)) ^ index).
std::uint64_t derive_seed(std::uint64_t master, std::string_view label,
                          std::uint64_t index);

inline RngStream substream(std::uint64_t master, std::string_view label,
                           std::uint64_t index = 0) {
  return RngStream(derive_seed(master, label, index));
}

std::uint64_t fnv1a64(std::string_view bytes);
std::uint64_t splitmix64(std::uint64_t& state);

}  // namespace mcmimo
