// Deterministic random source. One global 64-bit seed; per-suite streams are
// derived with splitmix64 so every suite is independently reproducible.
#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <random>

namespace entroqubit {

inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : gen_(seed) {}

  // Stream `stream` derived from `seed`; distinct streams are independent.
  static Rng for_stream(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t s = seed ^ (0xa0761d6478bd642fULL * (stream + 1));
    return Rng(splitmix64(s));
  }

  std::uint64_t next_u64() { return gen_(); }

  // uniform in [0, 1) with 53 random bits; avoids the unspecified behaviour of
  // std::uniform_real_distribution so runs are reproducible everywhere
  double uniform01() { return (gen_() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  double angle() { return uniform(0.0, 2.0 * 3.14159265358979323846); }

  double gaussian() {
    // Box-Muller, cosine branch only
    double u1 = uniform01();
    while (u1 == 0.0) u1 = uniform01();
    const double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) *
           std::cos(2.0 * 3.14159265358979323846 * u2);
  }

  Eigen::VectorXd gaussian_vector(int n) {
    Eigen::VectorXd v(n);
    for (int i = 0; i < n; ++i) v(i) = gaussian();
    return v;
  }

  Eigen::VectorXd unit_vector(int n) {
    Eigen::VectorXd v = gaussian_vector(n);
    while (v.norm() < 1e-12) v = gaussian_vector(n);
    return v / v.norm();
  }

 private:
  std::mt19937_64 gen_;
};

}  // namespace entroqubit
