#include "embfp/synth.hpp"

#include "embfp/geometry.hpp"
#include "embfp/rng.hpp"

namespace embfp {

namespace {
// within-cluster std around each center (centers are standard normal draws)
constexpr double kClusterSpread = 0.3;
}

void check_synth_config(const SynthConfig& cfg) {
    require(cfg.n >= 2, "dimension must be at least 2");
    require(cfg.N >= cfg.n + 1, "need at least n+1 points for downstream sphere fits");
    require(cfg.clusters >= 1, "cluster count must be at least 1");
    require(cfg.suspect_noise >= 0.0, "suspect noise must be nonnegative");
    require(cfg.ref_noise > cfg.suspect_noise, "reference noise must exceed suspect noise");
}

Cloud gen_victim(const SynthConfig& cfg) {
    check_synth_config(cfg);
    Rng rng(cfg.seed);
    Cloud centers = rng.normal_cloud(cfg.clusters, cfg.n);
    Cloud out(cfg.N, cfg.n);
    for (Eigen::Index i = 0; i < cfg.N; ++i) {
        double norm;
        do {
            out.row(i) = centers.row(static_cast<Eigen::Index>(i % cfg.clusters)) +
                         kClusterSpread * rng.normal_vector(cfg.n).transpose();
            norm = out.row(i).norm();
        } while (norm < 1e-12);
        out.row(i) /= norm;
    }
    return out;
}

Cloud gen_suspect(const Cloud& victim, double sigma_s, std::uint64_t seed) {
    check_cloud(victim);
    require(sigma_s >= 0.0, "noise must be nonnegative");
    Rng rng(seed);
    return victim + sigma_s * rng.normal_cloud(victim.rows(), victim.cols());
}

std::vector<Cloud> gen_references(const Cloud& victim, int M, double sigma_r,
                                  std::uint64_t seed, bool independent) {
    check_cloud(victim);
    require(M >= 2, "need at least 2 references");
    require(sigma_r > 0.0, "reference noise must be positive");

    const Eigen::Index N = victim.rows(), n = victim.cols();
    std::vector<Cloud> refs;
    refs.reserve(static_cast<std::size_t>(M));
    for (int i = 0; i < M; ++i) {
        const std::uint64_t child = derive_seed(seed, static_cast<std::uint64_t>(i));
        Cloud c;
        if (independent) {
            Rng rng(child);
            c = rng.normal_cloud(N, n);
        } else {
            Matrix R = random_rotation(n, child);
            Rng rng(derive_seed(child, 1));
            c = victim * R.transpose() + sigma_r * rng.normal_cloud(N, n);
        }
        for (Eigen::Index j = 0; j < N; ++j) {
            const double norm = c.row(j).norm();
            require(norm > 1e-12, "degenerate reference row");
            c.row(j) /= norm;
        }
        refs.push_back(std::move(c));
    }
    return refs;
}

}  // namespace embfp
