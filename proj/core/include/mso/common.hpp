#pragma once

#include <Eigen/Core>

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

namespace mso {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;

// Computational box D = [0,1]^d.
inline constexpr double kDomainLo = 0.0;
inline constexpr double kDomainHi = 1.0;

// Gradient-norm floor below which normals/curvature are undefined.
inline constexpr double kGradMin = 1e-8;

struct DegenerateGradient : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ShapeVanished : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ProjectionFailed : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct EigensolverFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct LinearSolveFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};
struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// All randomness flows through explicitly seeded generators. Uniform doubles
// are produced by a fixed 53-bit mapping so streams do not depend on the
// standard library's distribution implementation.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  double uniform() {  // [0,1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

  Vector uniform_point(int d) {
    Vector x(d);
    for (int i = 0; i < d; ++i) x[i] = uniform();
    return x;
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

// Stable child-seed derivation (splitmix64 over master ^ salt).
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t salt) {
  std::uint64_t z = master + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

inline bool in_domain(const Eigen::Ref<const Vector>& x) {
  for (int i = 0; i < x.size(); ++i)
    if (x[i] < kDomainLo || x[i] > kDomainHi) return false;
  return true;
}

}  // namespace mso
