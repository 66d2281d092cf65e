#include "hyper/noise.hpp"

#include <cmath>
#include <numbers>

namespace hyper {

namespace {

// splitmix64; the full 64-bit avalanche makes (seed, stream) keys
// statistically independent.
std::uint64_t mix(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = x;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t stream)
    : state_(mix(mix(seed) ^ (0x9e3779b97f4a7c15ULL * (stream + 1)))) {}

std::uint64_t RngStream::next_u64() {
    state_ += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double RngStream::next_unit() {
    return double(next_u64() >> 11) * 0x1.0p-53;
}

double RngStream::next_unit_open() {
    return (double(next_u64() >> 11) + 1.0) * 0x1.0p-53;
}

Eigen::VectorXd generate_noise(const NoiseSpec& spec, std::uint64_t seed,
                               std::uint64_t stream, Eigen::Index n) {
    RngStream rng(seed, stream);
    Eigen::VectorXd out(n);

    switch (spec.kind) {
        case NoiseSpec::Kind::Gaussian: {
            for (Eigen::Index j = 0; j < n; ++j) {
                // Box-Muller, cosine branch; two draws per sample keeps the
                // stream position independent of branch outcomes.
                const double u1 = rng.next_unit_open();
                const double u2 = rng.next_unit();
                out[j] = spec.level * std::sqrt(-2.0 * std::log(u1)) *
                         std::cos(2.0 * std::numbers::pi * u2);
            }
            break;
        }
        case NoiseSpec::Kind::Impulse: {
            if (spec.whole_vector) {
                const bool active = rng.next_unit() < 0.5;
                for (Eigen::Index j = 0; j < n; ++j) {
                    const double u = rng.next_unit();
                    out[j] = active ? spec.level * (1.0 - 2.0 * u) : 0.0;
                }
            } else {
                for (Eigen::Index j = 0; j < n; ++j) {
                    const bool active = rng.next_unit() < 0.5;
                    const double u = rng.next_unit();
                    out[j] = active ? spec.level * (1.0 - 2.0 * u) : 0.0;
                }
            }
            break;
        }
    }
    if (spec.level == 0.0) out.setZero();
    return out;
}

}  // namespace hyper
