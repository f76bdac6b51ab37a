#pragma once

#include <Eigen/Dense>
#include <cmath>
#include <cstdint>

namespace ssr {

// Deterministic RNG with counter-based substreams.  Draw i of a simulation
// uses Rng::substream(seed, i), so results are identical no matter how draws
// are scheduled across threads.  Normal variates use Box-Muller on explicit
// 53-bit uniforms, which keeps output independent of the standard library's
// distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : state_(splitmix64(seed ^ 0x9e3779b97f4a7c15ull)) {
    // warm up past small-seed artifacts
    for (int i = 0; i < 4; ++i) next();
  }

  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(seed) ^ splitmix64(stream * 0xbf58476d1ce4e5b9ull + 0x94d049bb133111ebull));
  }

  std::uint64_t next() {
    // xorshift64* step on a splitmix-advanced state
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform on [0, 1)
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    double u1 = uniform();
    while (u1 <= 0.0) u1 = uniform();
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double a = 6.283185307179586476925286766559 * u2;
    spare_ = r * std::sin(a);
    have_spare_ = true;
    return r * std::cos(a);
  }

  Eigen::VectorXd normal_vector(Eigen::Index n) {
    Eigen::VectorXd v(n);
    for (Eigen::Index i = 0; i < n; ++i) v[i] = normal();
    return v;
  }

 private:
  static std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ull;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
    return x ^ (x >> 31);
  }

  std::uint64_t state_;
  double spare_ = 0.0;
  bool have_spare_ = false;
};

}  // namespace ssr
