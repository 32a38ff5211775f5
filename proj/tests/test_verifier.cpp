#include <doctest.h>

#include "embfp/attacksim.hpp"
#include "embfp/rng.hpp"
#include "embfp/synth.hpp"
#include "embfp/verifier.hpp"

using namespace embfp;

namespace {

struct Fixture {
    Cloud victim;
    Cloud suspect;
    std::vector<Cloud> refs;
};

Fixture make_fixture(std::uint64_t seed) {
    SynthConfig cfg;
    cfg.N = 600;
    cfg.n = 16;
    cfg.clusters = 4;
    cfg.seed = seed;
    Fixture f;
    f.victim = gen_victim(cfg);
    f.suspect = gen_suspect(f.victim, cfg.suspect_noise, derive_seed(seed, 1));
    f.refs = gen_references(f.victim, 3, cfg.ref_noise, derive_seed(seed, 2));
    return f;
}

}  // namespace

TEST_CASE("similarity_score: zero on identical clouds, exact on a hand case") {
    Rng rng(1);
    Cloud a = rng.normal_cloud(10, 4);
    CHECK(similarity_score(a, a) == 0.0);

    Cloud b = a;
    b.row(0).array() += 2.0;  // one row displaced by 2 in each of 4 coords
    CHECK(similarity_score(a, b) == doctest::Approx(16.0 / 10.0).epsilon(1e-12));
}

TEST_CASE("verify: an exact copy of the victim is flagged") {
    Fixture f = make_fixture(3);
    VerifyResult r = verify(f.victim, f.victim, f.refs);
    CHECK(r.s < 1e-12);
    CHECK(r.ttest.t > 0.0);
    CHECK(r.ttest.p <= 1e-3);
    CHECK(r.stolen);
    CHECK(r.alignment.has_value());
}

TEST_CASE("verify: noisy extraction is flagged, and the verdict survives transforms") {
    Fixture f = make_fixture(4);
    VerifyResult base = verify(f.suspect, f.victim, f.refs);
    CHECK(base.stolen);

    AttackSpec spec;
    spec.kind = AttackKind::mixed;
    for (std::uint64_t s : {11ull, 12ull, 13ull}) {
        spec.seed = s;
        auto [attacked, params] = attack(f.suspect, spec);
        VerifyResult r = verify(attacked, f.victim, f.refs);
        CHECK(r.stolen);
        CHECK(r.ttest.t == doctest::Approx(base.ttest.t).epsilon(0.05));
    }
}

TEST_CASE("verify: score identity between report fields") {
    Fixture f = make_fixture(5);
    VerifyResult r = verify(f.suspect, f.victim, f.refs);
    Cloud mapped = apply_alignment(f.suspect, *r.alignment);
    CHECK(similarity_score(mapped, f.victim) == doctest::Approx(r.s).epsilon(1e-12));
    for (std::size_t i = 0; i < f.refs.size(); ++i)
        CHECK(similarity_score(mapped, f.refs[i]) ==
              doctest::Approx(r.reference_scores[i]).epsilon(1e-12));
}

TEST_CASE("verify: contract violations") {
    Fixture f = make_fixture(6);
    CHECK_THROWS_AS(verify(f.suspect, f.victim, {f.refs[0]}), std::invalid_argument);
    CHECK_THROWS_AS(verify(f.suspect, f.victim, f.refs, 0.0), std::invalid_argument);
    std::vector<Cloud> clones{f.victim, f.victim, f.victim};
    CHECK_THROWS_AS(verify(f.victim, f.victim, clones), std::domain_error);

    Cloud wide(600, 17);
    wide.setZero();
    wide.leftCols(16) = f.suspect;
    CHECK_THROWS_AS(verify(wide, f.victim, f.refs), std::invalid_argument);
}

TEST_CASE("verify_direct: unaligned protocol clears an unrelated cloud") {
    Fixture f = make_fixture(7);
    Rng rng(900);
    Cloud innocent = rng.normal_cloud(600, 16);
    innocent.rowwise().normalize();

    VerifyResult r = verify_direct(innocent, f.victim, f.refs);
    CHECK(!r.alignment.has_value());
    CHECK(r.ttest.p > 1e-3);
    CHECK(!r.stolen);

    // and still flags a verbatim copy, which needs no alignment
    VerifyResult copy = verify_direct(f.victim, f.victim, f.refs);
    CHECK(copy.stolen);
}

TEST_CASE("verify: threshold moves the verdict line") {
    Fixture f = make_fixture(8);
    VerifyResult r = verify(f.suspect, f.victim, f.refs);
    CHECK(r.stolen == (r.ttest.p <= r.threshold));

    // bracket the observed p from both sides
    VerifyResult lenient = verify(f.suspect, f.victim, f.refs,
                                  std::min(0.9, r.ttest.p * 2.0));
    CHECK(lenient.stolen);
    VerifyResult strict = verify(f.suspect, f.victim, f.refs, r.ttest.p * 0.5);
    CHECK(!strict.stolen);
}
