// embfp: point-cloud fingerprint toolkit for embedding models.
//
// Verifies whether a suspect embedding model was extracted from a victim by
// aligning their output clouds under rotation/scale/translation and testing
// whether the suspect sits significantly closer to the victim than clean
// reference models do. Also ships analyses showing how three watermark
// decision rules behave under the same transform family.

#include <cstdio>
#include <cstdlib>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "embfp/attacksim.hpp"
#include "embfp/ecf.hpp"
#include "embfp/estimator.hpp"
#include "embfp/geometry.hpp"
#include "embfp/report.hpp"
#include "embfp/rng.hpp"
#include "embfp/synth.hpp"
#include "embfp/verifier.hpp"
#include "embfp/watermarks.hpp"

using namespace embfp;
using nlohmann::json;

namespace {

double now_ms() {
    using clock = std::chrono::steady_clock;
    return std::chrono::duration<double, std::milli>(clock::now().time_since_epoch()).count();
}

void emit(const json& j, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << j.dump(2) << "\n";
    } else {
        std::ofstream os(out_path);
        if (!os) throw std::runtime_error("cannot open for writing: " + out_path);
        os << j.dump(2) << "\n";
    }
}

int cmd_synth(const SynthConfig& cfg, int refs, bool independent_refs,
              const std::string& out_dir) {
    check_synth_config(cfg);
    require(refs >= 2, "need at least 2 references");
    std::filesystem::create_directories(out_dir);
    Cloud victim = gen_victim(cfg);
    Cloud suspect = gen_suspect(victim, cfg.suspect_noise, derive_seed(cfg.seed, 1001));
    std::vector<Cloud> references =
        gen_references(victim, refs, cfg.ref_noise, derive_seed(cfg.seed, 2002), independent_refs);

    write_ecf(out_dir + "/victim.ecf", victim);
    write_ecf(out_dir + "/suspect.ecf", suspect);
    for (int i = 0; i < refs; ++i)
        write_ecf(out_dir + "/ref_" + std::to_string(i + 1) + ".ecf", references[static_cast<std::size_t>(i)]);
    std::cerr << "wrote victim, suspect and " << refs << " references to " << out_dir << "\n";
    return 0;
}

int cmd_attack(const std::string& in, const std::string& out, const std::string& params_out,
               const AttackSpec& spec) {
    Cloud cloud = read_ecf(in);
    auto [attacked, params] = attack(cloud, spec);
    write_ecf(out, attacked);

    json j;
    j["kind"] = to_string(spec.kind);
    j["order"] = params.order;
    j["seed"] = spec.seed;
    j["scale"] = params.scale;
    j["translation"] = std::vector<double>(params.translation.data(),
                                           params.translation.data() + params.translation.size());
    const Eigen::Index n = params.rotation.rows();
    j["rotation_frobenius_from_identity"] = (params.rotation - Matrix::Identity(n, n)).norm();
    std::string sidecar = params_out.empty() ? out + ".params.json" : params_out;
    emit(j, sidecar);
    return 0;
}

int cmd_verify(const std::string& suspect_path, const std::string& victim_path,
               const std::vector<std::string>& ref_paths, double threshold,
               const std::string& out_path) {
    const double t0 = now_ms();
    Cloud suspect = read_ecf(suspect_path);
    Cloud victim = read_ecf(victim_path);
    std::vector<Cloud> refs;
    refs.reserve(ref_paths.size());
    for (const std::string& p : ref_paths) refs.push_back(read_ecf(p));
    const double t1 = now_ms();

    VerifyResult result = verify(suspect, victim, refs, threshold);
    const double t2 = now_ms();

    json report = make_report(result, {}, {{"load", t1 - t0}, {"verify", t2 - t1}});
    emit(report, out_path);
    return result.stolen ? 0 : 1;
}

int cmd_wm_analyze(const std::string& scheme, Eigen::Index dim, std::uint64_t seed,
                   double degrees, double scale_factor, double translate_len, int trials,
                   double mix_weight, const std::string& out_path) {
    json j;
    j["scheme"] = scheme;
    j["dim"] = dim;
    j["seed"] = seed;

    if (scheme == "embmarker") {
        // Trigger embeddings mix toward a secret target; detection is the mean
        // cosine gap between trigger and normal clouds. A rotation moves every
        // cosine; 180 degrees applies the full point reflection (even dims),
        // which exactly negates the statistic.
        const Eigen::Index N = 400;
        Vector target = random_unit_direction(dim, derive_seed(seed, 7));
        TargetMixScheme tm{target, mix_weight};
        Cloud normal(N, dim), trigger(N, dim);
        for (Eigen::Index i = 0; i < N; ++i) {
            Vector e = random_unit_direction(dim, derive_seed(seed, 100 + static_cast<std::uint64_t>(i)));
            normal.row(i) = e.transpose();
            trigger.row(i) = targetmix_insert(e, tm).transpose();
        }
        Matrix R;
        if (degrees == 180.0 || degrees == -180.0) {
            require(dim % 2 == 0, "full point reflection needs an even dimension");
            R = -Matrix::Identity(dim, dim);
        } else {
            R = random_rotation_in_plane(dim, degrees, derive_seed(seed, 8));
        }
        const Vector rotated_target = R * target;
        const double before = distribution_distance(normal, trigger, target);
        const double after = distribution_distance(rotate(normal, R), rotate(trigger, R),
                                                   rotated_target);
        const double after_unknown_target = distribution_distance(rotate(normal, R),
                                                                  rotate(trigger, R), target);
        j["mix_weight"] = mix_weight;
        j["degrees"] = degrees;
        j["distance_before"] = before;
        j["distance_after_known_target"] = after;        // attacker can't hide geometry itself
        j["distance_after"] = after_unknown_target;      // what the defender actually measures
    } else if (scheme == "linear") {
        const int bits = 32;
        Rng rng(derive_seed(seed, 1));
        LinearDecoderScheme dec;
        for (int i = 0; i < bits; ++i) dec.weights.push_back(rng.normal_vector(dim));
        Vector e_m = rng.normal_vector(dim);
        const double rate = rotation_bit_flip_rate(dec, e_m, trials, derive_seed(seed, 2));
        j["bits"] = bits;
        j["trials"] = trials;
        j["bit_flip_rate"] = rate;
    } else if (scheme == "matrixkey") {
        MatrixKeyScheme key = make_matrix_key(dim, seed);
        Vector e_o = random_unit_direction(dim, derive_seed(seed, 11));
        RstParams none{Matrix::Identity(dim, dim), 1.0, Vector::Zero(dim), "RST"};
        RstParams scaling{Matrix::Identity(dim, dim), scale_factor, Vector::Zero(dim), "RST"};
        Vector d = translate_len * random_unit_direction(dim, derive_seed(seed, 12));
        RstParams translation{Matrix::Identity(dim, dim), 1.0, d, "RST"};
        j["residual_no_attack"] = matrixkey_residual(key, e_o, none);
        j["scale_factor"] = scale_factor;
        j["residual_scaling"] = matrixkey_residual(key, e_o, scaling);
        j["residual_scaling_formula"] = std::abs(scale_factor - 1.0) * e_o.norm();
        j["translation_len"] = translate_len;
        j["residual_translation"] = matrixkey_residual(key, e_o, translation);
        j["residual_translation_formula"] = (key.T_pinv * d).norm();
    } else {
        throw std::invalid_argument("unknown scheme: " + scheme +
                                    " (expected embmarker, linear or matrixkey)");
    }
    emit(j, out_path);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    if (const char* threads = std::getenv("ECF_THREADS")) {
        const int k = std::atoi(threads);
        if (k > 0) Eigen::setNbThreads(k);
    }

    CLI::App app{"embedding-cloud fingerprint toolkit"};
    app.require_subcommand(1);

    // synth
    SynthConfig cfg;
    int refs = 3;
    bool independent_refs = false;
    std::string out_dir;
    auto* synth = app.add_subcommand("synth", "generate victim/suspect/reference clouds");
    synth->add_option("--n", cfg.N, "points per cloud")->capture_default_str();
    synth->add_option("--dim", cfg.n, "embedding dimension")->capture_default_str();
    synth->add_option("--clusters", cfg.clusters, "mixture components")->capture_default_str();
    synth->add_option("--suspect-noise", cfg.suspect_noise, "suspect noise std")
        ->capture_default_str();
    synth->add_option("--ref-noise", cfg.ref_noise, "reference noise std")->capture_default_str();
    synth->add_option("--refs", refs, "reference cloud count")->capture_default_str();
    synth->add_flag("--independent-refs", independent_refs,
                    "references unrelated to the victim instead of rotated+noised variants");
    synth->add_option("--seed", cfg.seed, "rng seed")->capture_default_str();
    synth->add_option("--out-dir", out_dir, "output directory")->required();

    // attack
    std::string atk_in, atk_out, atk_params_out, atk_kind = "mixed";
    AttackSpec spec;
    auto* atk = app.add_subcommand("attack", "apply a seeded transform to a cloud");
    atk->add_option("--in", atk_in, "input .ecf")->required();
    atk->add_option("--out", atk_out, "output .ecf")->required();
    atk->add_option("--params-out", atk_params_out,
                    "ground-truth transform JSON (default: <out>.params.json)");
    atk->add_option("--kind", atk_kind, "rotation|scaling|translation|mixed")
        ->capture_default_str();
    atk->add_option("--degrees", spec.rotation_degrees, "angle for --kind rotation")
        ->capture_default_str();
    atk->add_option("--scale", spec.scale_factor, "factor for --kind scaling")
        ->capture_default_str();
    atk->add_option("--translate-len", spec.translation_len, "length for --kind translation")
        ->capture_default_str();
    atk->add_option("--order", spec.order, "application order, permutation of RST")
        ->capture_default_str();
    atk->add_option("--seed", spec.seed, "rng seed")->capture_default_str();

    // verify
    std::string v_suspect, v_victim, v_out;
    std::vector<std::string> v_refs;
    double threshold = 1e-3;
    auto* ver = app.add_subcommand("verify", "test a suspect cloud against victim + references");
    ver->add_option("--suspect", v_suspect, "suspect .ecf")->required();
    ver->add_option("--victim", v_victim, "victim .ecf")->required();
    ver->add_option("--refs", v_refs, "reference .ecf files")->required()->expected(-1);
    ver->add_option("--threshold", threshold, "p-value cutoff")->capture_default_str();
    ver->add_option("--out", v_out, "report path (default: stdout)");

    // wm-analyze
    std::string w_scheme, w_out;
    Eigen::Index w_dim = 128;
    std::uint64_t w_seed = 0;
    double w_degrees = 180.0, w_scale = 3.0, w_translate = 1.0, w_mix = 0.5;
    int w_trials = 10000;
    auto* wma = app.add_subcommand("wm-analyze", "watermark behavior under transforms");
    wma->add_option("--scheme", w_scheme, "embmarker|linear|matrixkey")->required();
    wma->add_option("--dim", w_dim, "embedding dimension")->capture_default_str();
    wma->add_option("--seed", w_seed, "rng seed")->capture_default_str();
    wma->add_option("--degrees", w_degrees, "rotation angle (180 = point reflection)")
        ->capture_default_str();
    wma->add_option("--scale", w_scale, "scaling factor")->capture_default_str();
    wma->add_option("--translate-len", w_translate, "translation length")->capture_default_str();
    wma->add_option("--trials", w_trials, "Monte-Carlo trials")->capture_default_str();
    wma->add_option("--mix-weight", w_mix, "trigger mix weight")->capture_default_str();
    wma->add_option("--out", w_out, "report path (default: stdout)");

    // import / export
    std::string imp_csv, imp_out, exp_in, exp_csv;
    auto* imp = app.add_subcommand("import", "CSV -> ECF");
    imp->add_option("--csv", imp_csv, "input CSV")->required();
    imp->add_option("--out", imp_out, "output .ecf")->required();
    auto* exp = app.add_subcommand("export", "ECF -> CSV");
    exp->add_option("--in", exp_in, "input .ecf")->required();
    exp->add_option("--csv", exp_csv, "output CSV")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;  // help/version exit 0; flag errors exit 2
    }

    try {
        if (synth->parsed()) return cmd_synth(cfg, refs, independent_refs, out_dir);
        if (atk->parsed()) {
            spec.kind = attack_kind_from_string(atk_kind);
            return cmd_attack(atk_in, atk_out, atk_params_out, spec);
        }
        if (ver->parsed()) return cmd_verify(v_suspect, v_victim, v_refs, threshold, v_out);
        if (wma->parsed())
            return cmd_wm_analyze(w_scheme, w_dim, w_seed, w_degrees, w_scale, w_translate,
                                  w_trials, w_mix, w_out);
        if (imp->parsed()) {
            write_ecf(imp_out, read_csv(imp_csv));
            return 0;
        }
        if (exp->parsed()) {
            write_csv(exp_csv, read_ecf(exp_in));
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
