#include "embfp/attacksim.hpp"

#include <cmath>

#include "embfp/rng.hpp"

namespace embfp {

AttackKind attack_kind_from_string(const std::string& s) {
    if (s == "rotation") return AttackKind::rotation;
    if (s == "scaling") return AttackKind::scaling;
    if (s == "translation") return AttackKind::translation;
    if (s == "mixed") return AttackKind::mixed;
    throw std::invalid_argument("unknown attack kind: " + s);
}

std::string to_string(AttackKind k) {
    switch (k) {
        case AttackKind::rotation: return "rotation";
        case AttackKind::scaling: return "scaling";
        case AttackKind::translation: return "translation";
        case AttackKind::mixed: return "mixed";
    }
    return "?";
}

void check_attack_spec(const AttackSpec& spec) {
    check_order(spec.order);
    require(spec.rotation_degrees >= -180.0 && spec.rotation_degrees <= 180.0,
            "rotation angle must be in [-180, 180] degrees");
    require(spec.scale_factor >= 0.1 && spec.scale_factor <= 10.0,
            "scale factor must be in [0.1, 10]");
    require(spec.translation_len >= 0.0 && spec.translation_len <= 10.0,
            "translation length must be in [0, 10]");
}

RstParams sample_attack(const AttackSpec& spec, Eigen::Index n) {
    check_attack_spec(spec);
    require(n >= 2, "attacks need dimension >= 2");

    RstParams p;
    p.order = spec.order;
    p.rotation = Matrix::Identity(n, n);
    p.scale = 1.0;
    p.translation = Vector::Zero(n);

    switch (spec.kind) {
        case AttackKind::rotation:
            p.rotation = random_rotation_in_plane(n, spec.rotation_degrees, spec.seed);
            break;
        case AttackKind::scaling:
            p.scale = spec.scale_factor;
            break;
        case AttackKind::translation:
            p.translation =
                spec.translation_len * random_unit_direction(n, spec.seed);
            break;
        case AttackKind::mixed: {
            Rng rng(spec.seed);
            const double deg = rng.uniform(-180.0, 180.0);
            p.scale = rng.uniform(0.1, 10.0);
            for (Eigen::Index i = 0; i < n; ++i)
                p.translation[i] = rng.uniform(-10.0, 10.0);
            p.rotation = random_rotation_in_plane(n, deg, derive_seed(spec.seed, 1));
            break;
        }
    }
    return p;
}

std::pair<Cloud, RstParams> attack(const Cloud& cloud, const AttackSpec& spec) {
    check_cloud(cloud);
    RstParams params = sample_attack(spec, cloud.cols());
    return {apply_rst(cloud, params), params};
}

}  // namespace embfp
