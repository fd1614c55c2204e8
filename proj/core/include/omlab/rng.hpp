#pragma once

#include <cstdint>
#include <random>

#include "omlab/complex_matrix.hpp"

namespace omlab {

// splitmix64 finalizer; used to derive decorrelated seeds from (base, index).
inline std::uint64_t mix64(std::uint64_t z) {
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b = 0) {
  return mix64(base ^ mix64(a + 0x100) ^ mix64(mix64(b + 0x9000)));
}

// Deterministic Gaussian source: mt19937_64 + explicit Box-Muller, so streams
// do not depend on the standard library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  double uniform() {  // [0, 1)
    return static_cast<double>(gen_() >> 11) * 0x1.0p-53;
  }

  double gaussian() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double phi = 2.0 * 3.141592653589793 * u2;
    spare_ = r * std::sin(phi);
    has_spare_ = true;
    return r * std::cos(phi);
  }

  // Standard complex normal: variance 1 overall, independent N(0, 1/2) parts.
  cplx cgauss() {
    const double re = gaussian();
    const double im = gaussian();
    return cplx{re * 0.7071067811865476, im * 0.7071067811865476};
  }

  // Unit vector with cgauss components, renormalized.
  std::vector<cplx> unit_vector(std::size_t n) {
    std::vector<cplx> v(n);
    double norm2 = 0.0;
    do {
      norm2 = 0.0;
      for (auto& z : v) {
        z = cgauss();
        norm2 += std::norm(z);
      }
    } while (norm2 == 0.0);
    const double inv = 1.0 / std::sqrt(norm2);
    for (auto& z : v) z *= inv;
    return v;
  }

 private:
  std::mt19937_64 gen_;
  bool has_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace omlab
