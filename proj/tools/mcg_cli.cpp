// Command-line front end: slope queries, relator emission, derivation
// checking, and matrix verification.  Exit codes: 0 verified / success,
// 1 verification failed, 2 parse or usage error.

#include <CLI11.hpp>

#include "mcg/curve_config.hpp"
#include "mcg/derivation.hpp"
#include "mcg/errors.hpp"
#include "mcg/relations.hpp"
#include "mcg/representation.hpp"
#include "mcg/slope.hpp"

#include <iostream>
#include <string>

namespace {

using namespace mcg;

SurfaceKind surface_from_flag(const std::string& flag) {
    if (flag == "torus")
        return SurfaceKind::OneHoledTorus;
    if (flag == "s04")
        return SurfaceKind::FourHoledSphere;
    throw parse_error("unknown surface '" + flag + "' (expected torus or s04)");
}

int run_resolve(const std::string& s1, const std::string& s2) {
    Slope alpha = Slope::parse(s1);
    Slope beta = Slope::parse(s2);
    if (!is_neighbor(alpha, beta)) {
        std::cerr << "not Farey neighbors: |det| = " << abs(det(alpha, beta)) << "\n";
        return 1;
    }
    std::cout << resolve(alpha, beta).str() << "\n";
    return 0;
}

int run_neighbors(const std::string& s, long height) {
    for (const Slope& n : farey_neighbors(Slope::parse(s), height))
        std::cout << n.str() << "\n";
    return 0;
}

int run_twist(const std::string& s1, const std::string& s2, long long n,
              const std::string& surface) {
    Slope alpha = Slope::parse(s1);
    Slope beta = Slope::parse(s2);
    std::cout << twist(alpha, beta, n, surface_from_flag(surface)).str() << "\n";
    return 0;
}

int run_intersect(const std::string& s1, const std::string& s2, const std::string& surface) {
    std::cout << intersection_number(Slope::parse(s1), Slope::parse(s2),
                                     surface_from_flag(surface))
              << "\n";
    return 0;
}

int run_check(const std::string& path) {
    DerivationScript script = DerivationScript::parse_file(path);
    Word current = script.start;
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        const auto& step = script.steps[i];
        try {
            current = apply_step(current, step, script.config);
        } catch (const step_error& e) {
            std::cout << "FAIL step " << i + 1 << " (" << step.rule.str() << " at "
                      << step.position << "): " << e.what() << "\n";
            return 1;
        }
        std::cout << "ok " << i + 1 << " " << step.rule.str() << " at " << step.position << "\n";
    }
    if (current != script.target) {
        std::cout << "FAIL: final word differs from target\n";
        return 1;
    }
    std::cout << "PASS " << script.steps.size() << " steps; final word matches target\n";
    return 0;
}

int run_emit(const std::string& path) {
    CurveConfig cfg = CurveConfig::parse_file(path);
    for (const auto& rel : relators_from_config(cfg)) {
        RuleRef ref{false, rel.name, rel.participants};
        std::cout << ref.str() << " " << to_string(rel.relator) << "\n";
    }
    return 0;
}

int run_verify(const std::string& config_path, const std::string& binding_path,
               const std::string& surface, long height) {
    CurveConfig cfg = CurveConfig::parse_file(config_path);
    Binding binding = Binding::parse_file(binding_path);
    SurfaceKind kind = surface_from_flag(surface);

    auto unbound = binding.unbound_labels(cfg);
    if (!unbound.empty()) {
        std::cerr << "unbound labels:";
        for (const auto& l : unbound)
            std::cerr << " " << l;
        std::cerr << "\n";
        return 2;
    }

    bool all_ok = true;
    auto relators = relators_from_config(cfg);
    for (const auto& rel : relators) {
        RuleRef ref{false, rel.name, rel.participants};
        bool ok = verify_relation_in_rep(rel, binding, kind);
        if (ok && height >= 1)
            ok = action_trivial_on_slopes(rel.relator, binding, kind, height);
        std::cout << (ok ? "ok " : "FAIL ") << ref.str() << "\n";
        all_ok = all_ok && ok;
    }
    if (!all_ok) {
        std::cout << "FAIL\n";
        return 1;
    }
    std::cout << "PASS " << relators.size() << " relators verified (" << to_string(kind) << ")\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"slope calculus and twist-word tools for the one-holed torus "
                 "and the four-holed sphere"};
    app.require_subcommand(1);

    std::string arg1, arg2, surface = "torus";
    long long twist_power = 1;
    long height = 0;

    auto* farey = app.add_subcommand("farey", "exact slope arithmetic");
    farey->require_subcommand(1);
    auto* resolve_cmd = farey->add_subcommand("resolve", "resolution of two neighbor slopes");
    resolve_cmd->add_option("alpha", arg1)->required();
    resolve_cmd->add_option("beta", arg2)->required();
    auto* neighbors_cmd = farey->add_subcommand("neighbors", "Farey neighbors up to a height");
    neighbors_cmd->add_option("alpha", arg1)->required();
    neighbors_cmd->add_option("--height", height)->required()->check(CLI::PositiveNumber);
    auto* twist_cmd = farey->add_subcommand("twist", "Dehn twist of one slope along another");
    twist_cmd->add_option("alpha", arg1)->required();
    twist_cmd->add_option("beta", arg2)->required();
    twist_cmd->add_option("--n", twist_power, "twist power (may be negative)");
    twist_cmd->add_option("--surface", surface)->check(CLI::IsMember({"torus", "s04"}));
    auto* intersect_cmd = farey->add_subcommand("intersect", "geometric intersection number");
    intersect_cmd->add_option("alpha", arg1)->required();
    intersect_cmd->add_option("beta", arg2)->required();
    intersect_cmd->add_option("--surface", surface)->check(CLI::IsMember({"torus", "s04"}));

    auto* words = app.add_subcommand("words", "twist-word algebra");
    words->require_subcommand(1);
    auto* check_cmd = words->add_subcommand("check", "check a derivation script step by step");
    check_cmd->add_option("script", arg1)->required();
    auto* emit_cmd = words->add_subcommand("emit", "emit the relators of a curve config");
    emit_cmd->add_option("config", arg1)->required();

    auto* rep = app.add_subcommand("rep", "integer-matrix verification");
    rep->require_subcommand(1);
    auto* verify_cmd = rep->add_subcommand("verify", "verify all relators under a binding");
    verify_cmd->add_option("config", arg1)->required();
    verify_cmd->add_option("binding", arg2)->required();
    verify_cmd->add_option("--surface", surface)->required()->check(CLI::IsMember({"torus", "s04"}));
    verify_cmd->add_option("--height", height, "also require relators to fix slopes up to here")
        ->check(CLI::NonNegativeNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (resolve_cmd->parsed())
            return run_resolve(arg1, arg2);
        if (neighbors_cmd->parsed())
            return run_neighbors(arg1, height);
        if (twist_cmd->parsed())
            return run_twist(arg1, arg2, twist_power, surface);
        if (intersect_cmd->parsed())
            return run_intersect(arg1, arg2, surface);
        if (check_cmd->parsed())
            return run_check(arg1);
        if (emit_cmd->parsed())
            return run_emit(arg1);
        if (verify_cmd->parsed())
            return run_verify(arg1, arg2, surface, height);
    } catch (const mcg::parse_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mcg::unbound_label_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const mcg::unrepresentable_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
