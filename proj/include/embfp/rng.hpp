#pragma once

#include <cmath>
#include <cstdint>
#include <random>

#include "embfp/types.hpp"

namespace embfp {

// Deterministic random stream. The standard distribution objects are
// implementation-defined, so uniforms and normals are generated by hand to
// keep seeded outputs identical across toolchains.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // uniform in [0, 1)
    double uniform() {
        return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
    }

    double uniform(double lo, double hi) {
        return lo + (hi - lo) * uniform();
    }

    // standard normal, Marsaglia polar method (pair-cached)
    double normal() {
        if (has_spare_) {
            has_spare_ = false;
            return spare_;
        }
        double u, v, s;
        do {
            u = 2.0 * uniform() - 1.0;
            v = 2.0 * uniform() - 1.0;
            s = u * u + v * v;
        } while (s >= 1.0 || s == 0.0);
        const double f = std::sqrt(-2.0 * std::log(s) / s);
        spare_ = v * f;
        has_spare_ = true;
        return u * f;
    }

    Vector normal_vector(Eigen::Index n) {
        Vector out(n);
        for (Eigen::Index i = 0; i < n; ++i) out[i] = normal();
        return out;
    }

    Cloud normal_cloud(Eigen::Index rows, Eigen::Index cols) {
        Cloud out(rows, cols);
        for (Eigen::Index i = 0; i < rows; ++i)
            for (Eigen::Index j = 0; j < cols; ++j) out(i, j) = normal();
        return out;
    }

private:
    std::mt19937_64 eng_;
    double spare_ = 0.0;
    bool has_spare_ = false;
};

// Independent child seed for parallel/repeated experiments (splitmix64 step).
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + (index + 1) * 0x9E3779B97F4A7C15ull;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
}

}  // namespace embfp
