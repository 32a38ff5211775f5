#include "embfp/verifier.hpp"

namespace embfp {

double similarity_score(const Cloud& a, const Cloud& b) {
    check_cloud(a);
    check_cloud(b);
    check_same_shape(a, b);
    return (a - b).rowwise().squaredNorm().mean();
}

namespace {

VerifyResult score_and_test(const Cloud& mapped_suspect, const Cloud& victim,
                            const std::vector<Cloud>& references, double threshold) {
    require(references.size() >= 2, "need at least 2 reference clouds");
    for (const Cloud& r : references) check_same_shape(victim, r);
    require(threshold > 0.0 && threshold < 1.0, "threshold must be in (0, 1)");

    VerifyResult out;
    out.threshold = threshold;
    out.s = similarity_score(mapped_suspect, victim);
    out.reference_scores.reserve(references.size());
    for (const Cloud& r : references)
        out.reference_scores.push_back(similarity_score(mapped_suspect, r));
    out.ttest = t_test(out.s, out.reference_scores);
    out.stolen = out.ttest.p <= threshold;
    return out;
}

}  // namespace

VerifyResult verify(const Cloud& suspect, const Cloud& victim,
                    const std::vector<Cloud>& references, double threshold) {
    AlignmentEstimate est = align(suspect, victim);
    Cloud mapped = apply_alignment(suspect, est);
    VerifyResult out = score_and_test(mapped, victim, references, threshold);
    out.alignment = std::move(est);
    return out;
}

VerifyResult verify_direct(const Cloud& suspect, const Cloud& victim,
                           const std::vector<Cloud>& references, double threshold) {
    return score_and_test(suspect, victim, references, threshold);
}

}  // namespace embfp
