#include <doctest.h>

#include "embfp/attacksim.hpp"
#include "embfp/estimator.hpp"
#include "embfp/rng.hpp"

using namespace embfp;

namespace {

Cloud unit_cloud(Eigen::Index N, Eigen::Index n, std::uint64_t seed) {
    Rng rng(seed);
    Cloud c = rng.normal_cloud(N, n);
    c.rowwise().normalize();
    return c;
}

}  // namespace

TEST_CASE("sample_attack: zero-angle rotation is the identity recipe") {
    AttackSpec spec;
    spec.kind = AttackKind::rotation;
    spec.rotation_degrees = 0.0;
    RstParams p = sample_attack(spec, 6);
    CHECK((p.rotation - Matrix::Identity(6, 6)).cwiseAbs().maxCoeff() == 0.0);
    CHECK(p.scale == 1.0);
    CHECK(p.translation.norm() == 0.0);
}

TEST_CASE("sample_attack: mixed draws are deterministic per seed") {
    AttackSpec spec;
    spec.kind = AttackKind::mixed;
    spec.seed = 99;
    RstParams a = sample_attack(spec, 12);
    RstParams b = sample_attack(spec, 12);
    CHECK((a.rotation - b.rotation).cwiseAbs().maxCoeff() == 0.0);
    CHECK(a.scale == b.scale);
    CHECK((a.translation - b.translation).norm() == 0.0);
    CHECK(a.scale >= 0.1);
    CHECK(a.scale <= 10.0);
    CHECK(a.translation.cwiseAbs().maxCoeff() <= 10.0);
}

TEST_CASE("sample_attack: translation length and seeded direction") {
    AttackSpec spec;
    spec.kind = AttackKind::translation;
    spec.translation_len = 5.0;
    spec.seed = 31;
    RstParams p = sample_attack(spec, 9);
    CHECK(p.translation.norm() == doctest::Approx(5.0).epsilon(1e-12));
    CHECK((p.translation - 5.0 * random_unit_direction(9, 31)).norm() == 0.0);
}

TEST_CASE("sample_attack: out-of-range parameters are rejected") {
    AttackSpec spec;
    spec.kind = AttackKind::rotation;
    spec.rotation_degrees = 200.0;
    CHECK_THROWS_AS(sample_attack(spec, 4), std::invalid_argument);
    spec.rotation_degrees = 0.0;
    spec.scale_factor = 0.05;
    CHECK_THROWS_AS(sample_attack(spec, 4), std::invalid_argument);
    spec.scale_factor = 1.0;
    spec.translation_len = 11.0;
    CHECK_THROWS_AS(sample_attack(spec, 4), std::invalid_argument);
    spec.translation_len = 0.0;
    spec.order = "XYZ";
    CHECK_THROWS_AS(sample_attack(spec, 4), std::invalid_argument);
}

TEST_CASE("attack: identity recipe returns the cloud unchanged") {
    Cloud c = unit_cloud(50, 8, 1);
    AttackSpec spec;
    spec.kind = AttackKind::rotation;
    spec.rotation_degrees = 0.0;
    auto [out, params] = attack(c, spec);
    CHECK((out - c).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("attack: every kind and order aligns back to the victim") {
    Cloud victim = unit_cloud(400, 16, 2);
    AttackSpec spec;
    spec.seed = 5;

    spec.kind = AttackKind::rotation;
    spec.rotation_degrees = 60.0;
    CHECK(align(attack(victim, spec).first, victim).error <= 1e-9);

    spec.kind = AttackKind::scaling;
    spec.scale_factor = 7.5;
    CHECK(align(attack(victim, spec).first, victim).error <= 1e-9);

    spec.kind = AttackKind::translation;
    spec.translation_len = 3.0;
    CHECK(align(attack(victim, spec).first, victim).error <= 1e-9);

    spec.kind = AttackKind::mixed;
    std::vector<Cloud> outs;
    for (const char* order : {"RST", "RTS", "SRT", "STR", "TRS", "TSR"}) {
        spec.order = order;
        auto [out, params] = attack(victim, spec);
        CHECK(align(out, victim).error <= 1e-9);
        outs.push_back(out);
    }
    // rotation and scaling commute, so the six orders collapse into four maps
    // that differ only in the effective shift: d, alpha*d, R*d, alpha*R*d
    CHECK((outs[0] - outs[2]).cwiseAbs().maxCoeff() <= 1e-12);  // RST == SRT
    CHECK((outs[4] - outs[5]).cwiseAbs().maxCoeff() <= 1e-12);  // TRS == TSR
    const std::size_t reps[4] = {0, 1, 3, 4};
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = i + 1; j < 4; ++j)
            CHECK((outs[reps[i]] - outs[reps[j]]).cwiseAbs().maxCoeff() > 1e-6);
}

TEST_CASE("attack: composite map replays the attacked cloud from the victim") {
    Cloud victim = unit_cloud(500, 12, 3);
    AttackSpec spec;
    spec.kind = AttackKind::mixed;
    spec.seed = 17;
    auto [attacked, params] = attack(victim, spec);
    AlignmentEstimate est = align(attacked, victim);
    CHECK((apply_alignment(attacked, est) - victim).cwiseAbs().maxCoeff() <= 1e-7);
}

TEST_CASE("attack: preserved pairwise geometry per kind") {
    Cloud c = unit_cloud(60, 10, 4);
    auto dist = [](const Cloud& x, Eigen::Index i, Eigen::Index j) {
        return (x.row(i) - x.row(j)).norm();
    };
    auto cosine = [](const Cloud& x, Eigen::Index i, Eigen::Index j) {
        return x.row(i).dot(x.row(j)) / (x.row(i).norm() * x.row(j).norm());
    };

    AttackSpec spec;
    spec.seed = 23;
    spec.kind = AttackKind::rotation;
    spec.rotation_degrees = -120.0;
    Cloud rot = attack(c, spec).first;
    spec.kind = AttackKind::scaling;
    spec.scale_factor = 0.4;
    Cloud sc = attack(c, spec).first;
    spec.kind = AttackKind::translation;
    spec.translation_len = 8.0;
    Cloud tr = attack(c, spec).first;

    for (Eigen::Index i = 0; i < 20; i += 2) {
        CHECK(dist(rot, i, i + 1) == doctest::Approx(dist(c, i, i + 1)).epsilon(1e-9));
        CHECK(cosine(rot, i, i + 1) == doctest::Approx(cosine(c, i, i + 1)).epsilon(1e-9));
        CHECK(cosine(sc, i, i + 1) == doctest::Approx(cosine(c, i, i + 1)).epsilon(1e-9));
        CHECK(dist(tr, i, i + 1) == doctest::Approx(dist(c, i, i + 1)).epsilon(1e-9));
    }
}
