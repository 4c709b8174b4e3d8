#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "qcmp/extremal.hpp"
#include "qcmp/io.hpp"
#include "qcmp/nogo.hpp"
#include "qcmp/povm.hpp"
#include "qcmp/states.hpp"

namespace {

using namespace qcmp;

struct RunConfig {
    int n = 0;
    int d = 0;
    double threshold = 0.0;
    double epsilon = -1.0; // < 0 means "search"
    int samples = 200;
    double tolerance = -1.0; // < 0 means defaults
    std::uint64_t seed = 1;
    std::string side = "s2";
    std::string input_path;
    std::string output_path;
};

Side parse_side(const std::string& s) {
    if (s == "s1" || s == "S1") return Side::S1;
    if (s == "s2" || s == "S2") return Side::S2;
    throw UserError("side must be s1 or s2, got '" + s + "'");
}

void emit_or_print(const RunConfig& cfg, const std::string& content) {
    if (cfg.output_path.empty()) {
        std::cout << content;
    } else {
        write_file_atomic(cfg.output_path, content);
    }
}

int run_closeness(const RunConfig& cfg) {
    const StateEnsemble e = read_ensemble_file(cfg.input_path);
    std::cout << fmt17(closeness(e)) << '\n';
    return 0;
}

int run_cmin(const RunConfig& cfg) {
    std::cout << fmt17(c_min(cfg.n, cfg.d)) << '\n';
    return 0;
}

int run_minimal(const RunConfig& cfg) {
    const StateEnsemble e = minimal_ensemble(cfg.n, cfg.d);
    std::ostringstream out;
    write_ensemble(out, e);
    emit_or_print(cfg, out.str());
    std::cerr << "minimal ensemble n=" << cfg.n << " d=" << cfg.d
              << " closeness=" << fmt17(closeness(e)) << '\n';
    return 0;
}

int run_witness(const RunConfig& cfg) {
    const Side side = parse_side(cfg.side);
    const StateEnsemble base = cfg.input_path.empty()
        ? sample_region(cfg.n, cfg.d, cfg.threshold, side, cfg.seed)
        : read_ensemble_file(cfg.input_path);
    const double eps =
        cfg.epsilon >= 0.0 ? cfg.epsilon : select_epsilon(base, cfg.threshold, side);
    const PerturbedFamily fam = build_family(base, cfg.threshold, eps, side);
    const SpanningCertificate cert = spanning_certificate(fam, cfg.seed);
    emit_or_print(cfg, certificate_csv(cert, cfg.seed));
    std::cerr << "witness n=" << cfg.n << " d=" << cfg.d << " A=" << fmt17(cfg.threshold)
              << " side=" << cfg.side << " seed=" << cfg.seed
              << " verdict=" << (cert.verdict ? "true" : "false")
              << " residual=" << fmt17(cert.residual) << '\n';
    return 0;
}

PovmTolerances tolerances(const RunConfig& cfg) {
    PovmTolerances tol;
    if (cfg.tolerance >= 0.0) {
        tol.hermiticity = cfg.tolerance;
        tol.completeness = cfg.tolerance;
        tol.positivity = cfg.tolerance;
    }
    return tol;
}

int run_compare(const RunConfig& cfg) {
    const Povm povm = comparison_povm(cfg.n, cfg.d);
    const PovmValidation report = validate_povm(povm, tolerances(cfg));
    if (!cfg.input_path.empty()) {
        const StateEnsemble e = read_ensemble_file(cfg.input_path);
        if (e.size() != cfg.n || e.dim() != cfg.d) {
            throw DimensionError("input ensemble does not match --n/--d");
        }
        const ProductState product = kron_state(e.states());
        for (const PovmElement& el : povm.elements()) {
            std::cout << "Prob(" << el.label << ") = "
                      << fmt17(outcome_probability(el.op, product)) << '\n';
        }
    }
    if (!cfg.output_path.empty()) {
        write_file_atomic(cfg.output_path, validation_csv(report));
    }
    std::cerr << "comparison POVM n=" << cfg.n << " d=" << cfg.d << " validation "
              << (report.passed ? "pass" : "fail") << " completeness_residue="
              << fmt17(report.completeness_residue) << '\n';
    return report.passed ? 0 : 2;
}

int run_decay(const RunConfig& cfg) {
    const DecayCurve curve =
        nullspace_decay(cfg.n, cfg.d, cfg.threshold, parse_side(cfg.side), cfg.samples, cfg.seed);
    emit_or_print(cfg, decay_csv(curve));
    std::cerr << "nullspace-decay n=" << cfg.n << " d=" << cfg.d << " A=" << fmt17(cfg.threshold)
              << " side=" << cfg.side << " seed=" << cfg.seed << " final_dim="
              << curve.samples.back().second << '\n';
    return 0;
}

int run_validate(const RunConfig& cfg) {
    std::vector<PovmElement> elements;
    for (auto& [label, op] : read_operators_file(cfg.input_path)) {
        elements.push_back({label, std::move(op)});
    }
    const PovmValidation report = validate_povm(Povm(std::move(elements)), tolerances(cfg));
    const std::string csv = validation_csv(report);
    emit_or_print(cfg, csv);
    std::cerr << "validate-povm " << (report.passed ? "pass" : "fail") << '\n';
    return report.passed ? 0 : 2;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Closeness-threshold measurement toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_common = [&cfg](CLI::App* cmd, bool needs_nd) {
        if (needs_nd) {
            cmd->add_option("--n", cfg.n, "number of states")->required();
            cmd->add_option("--d", cfg.d, "local Hilbert space dimension")->required();
        }
        cmd->add_option("--seed", cfg.seed, "RNG seed (echoed in outputs)");
        cmd->add_option("--output", cfg.output_path, "output file path");
    };

    auto* closeness_cmd = app.add_subcommand("closeness", "average pairwise fidelity of an ensemble file");
    closeness_cmd->add_option("--input", cfg.input_path, "ensemble file")->required();

    auto* cmin_cmd = app.add_subcommand("cmin", "minimum achievable closeness");
    cmin_cmd->add_option("--n", cfg.n)->required();
    cmin_cmd->add_option("--d", cfg.d)->required();

    auto* minimal_cmd = app.add_subcommand("minimal", "ensemble achieving the minimum closeness");
    add_common(minimal_cmd, true);

    auto* witness_cmd = app.add_subcommand(
        "witness", "spanning certificate forcing an unambiguous detector element to zero");
    add_common(witness_cmd, true);
    witness_cmd->add_option("--threshold", cfg.threshold, "threshold A")->required();
    witness_cmd->add_option("--epsilon", cfg.epsilon, "perturbation size (searched when omitted)");
    witness_cmd->add_option("--side", cfg.side, "region side: s1 or s2");
    witness_cmd->add_option("--input", cfg.input_path, "base ensemble file (sampled when omitted)");

    auto* compare_cmd = app.add_subcommand("compare", "A=1 symmetric-complement comparison POVM");
    add_common(compare_cmd, true);
    compare_cmd->add_option("--input", cfg.input_path, "ensemble whose product state is measured");
    compare_cmd->add_option("--tolerance", cfg.tolerance, "validation tolerance override");

    auto* decay_cmd = app.add_subcommand("nullspace-decay", "span growth of sampled product states");
    add_common(decay_cmd, true);
    decay_cmd->add_option("--threshold", cfg.threshold, "threshold A")->required();
    decay_cmd->add_option("--side", cfg.side, "region side: s1 or s2")->required();
    decay_cmd->add_option("--samples", cfg.samples, "maximum sample count");

    auto* validate_cmd = app.add_subcommand("validate-povm", "positivity/completeness report");
    validate_cmd->add_option("--input", cfg.input_path, "operator block file")->required();
    validate_cmd->add_option("--output", cfg.output_path, "output CSV path");
    validate_cmd->add_option("--tolerance", cfg.tolerance, "validation tolerance override");

    CLI11_PARSE(app, argc, argv);

    try {
        if (closeness_cmd->parsed()) return run_closeness(cfg);
        if (cmin_cmd->parsed()) return run_cmin(cfg);
        if (minimal_cmd->parsed()) return run_minimal(cfg);
        if (witness_cmd->parsed()) return run_witness(cfg);
        if (compare_cmd->parsed()) return run_compare(cfg);
        if (decay_cmd->parsed()) return run_decay(cfg);
        if (validate_cmd->parsed()) return run_validate(cfg);
    } catch (const qcmp::NumericalError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const qcmp::UserError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    } catch (const qcmp::Error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 1;
}
