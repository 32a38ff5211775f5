#pragma once

#include <cstdint>
#include <vector>

#include "embfp/types.hpp"

namespace embfp {

struct SynthConfig {
    Eigen::Index N = 5000;        // points (needs N >= n+1 for the sphere fit downstream)
    Eigen::Index n = 128;         // dimension
    int clusters = 10;
    double suspect_noise = 0.01;  // sigma_s
    double ref_noise = 0.3;       // sigma_r, must exceed sigma_s
    std::uint64_t seed = 0;
};

void check_synth_config(const SynthConfig& cfg);

// Unit-norm Gaussian-mixture cloud: k cluster centers, fixed within-cluster
// spread, every row normalized onto the unit sphere.
Cloud gen_victim(const SynthConfig& cfg);

// victim + iid Gaussian noise, NOT renormalized (an extracted model's outputs
// need not be unit norm).
Cloud gen_suspect(const Cloud& victim, double sigma_s, std::uint64_t seed);

// M clean stand-ins. Default: independently rotated victim + noise sigma_r,
// rows renormalized — clean models answering the same inputs share coarse
// structure but not orientation. With `independent`, fully unrelated unit
// clouds instead.
std::vector<Cloud> gen_references(const Cloud& victim, int M, double sigma_r,
                                  std::uint64_t seed, bool independent = false);

}  // namespace embfp
