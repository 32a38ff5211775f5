#include "embfp/report.hpp"

namespace embfp {

nlohmann::json make_report(const VerifyResult& result,
                           const std::map<std::string, std::uint64_t>& seeds,
                           const std::map<std::string, double>& timings_ms) {
    nlohmann::json j;
    j["schema_version"] = 1;
    j["s"] = result.s;
    j["reference_scores"] = result.reference_scores;
    j["mu"] = result.ttest.mu;
    j["sigma"] = result.ttest.sigma;
    j["t_value"] = result.ttest.t;
    j["p_value"] = result.ttest.p;
    j["threshold"] = result.threshold;
    j["verdict"] = result.stolen ? "stolen" : "not-proven";
    if (result.alignment) {
        const AlignmentEstimate& est = *result.alignment;
        const Eigen::Index n = est.rotation.rows();
        j["alignment"] = {
            {"alpha_e", est.alpha},
            {"d_e", std::vector<double>(est.translation.data(),
                                        est.translation.data() + est.translation.size())},
            {"rotation_frobenius_from_identity",
             (est.rotation - Matrix::Identity(n, n)).norm()},
            {"alignment_error", est.error},
        };
    }
    j["seeds"] = seeds;
    j["timings_ms"] = timings_ms;
    return j;
}

}  // namespace embfp
