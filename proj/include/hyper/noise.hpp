#pragma once

#include <Eigen/Dense>
#include <cstdint>

namespace hyper {

// Counter-based uniform stream: stateless given (seed, stream), so trials
// can be generated independently and in any order.
class RngStream {
  public:
    RngStream(std::uint64_t seed, std::uint64_t stream);

    std::uint64_t next_u64();
    double next_unit();          // [0,1)
    double next_unit_open();     // (0,1]

  private:
    std::uint64_t state_;
};

struct NoiseSpec {
    enum class Kind { Gaussian, Impulse };

    Kind kind = Kind::Gaussian;
    double level = 0.0;              // sigma or a
    bool whole_vector = false;       // impulse: one Bernoulli for the vector

    static NoiseSpec gaussian(double sigma) { return {Kind::Gaussian, sigma, false}; }
    static NoiseSpec impulse(double a, bool whole = false) {
        return {Kind::Impulse, a, whole};
    }
};

// Gaussian: i.i.d. N(0, level^2) via Box-Muller.  Impulse: per sample, with
// probability 1/2 a uniform draw from [-level, level], else 0 (whole_vector
// applies a single Bernoulli to the entire vector instead).  Deterministic
// given (spec, seed, stream, n).
Eigen::VectorXd generate_noise(const NoiseSpec& spec, std::uint64_t seed,
                               std::uint64_t stream, Eigen::Index n);

}  // namespace hyper
