#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "embfp/geometry.hpp"
#include "embfp/types.hpp"

namespace embfp {

enum class AttackKind { rotation, scaling, translation, mixed };

AttackKind attack_kind_from_string(const std::string& s);
std::string to_string(AttackKind k);

// A seeded attack recipe. Single kinds use the explicit parameter below and
// leave the other components at identity; `mixed` draws all three groups at
// random: angle in [-180, 180] degrees, scale in [0.1, 10], translation
// per-component uniform in [-10, 10].
struct AttackSpec {
    AttackKind kind = AttackKind::mixed;
    double rotation_degrees = 0.0;            // used by kind=rotation
    double scale_factor = 1.0;                // used by kind=scaling
    double translation_len = 0.0;             // used by kind=translation; direction is seeded
    std::string order = "RST";
    std::uint64_t seed = 0;
};

void check_attack_spec(const AttackSpec& spec);

// Concrete transform for a cloud of dimension n. Deterministic given spec.
RstParams sample_attack(const AttackSpec& spec, Eigen::Index n);

// Applies one global transform to every row; the returned ground truth is for
// test oracles (an attacker would not publish it).
std::pair<Cloud, RstParams> attack(const Cloud& cloud, const AttackSpec& spec);

}  // namespace embfp
