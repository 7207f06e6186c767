// Acceptance suite: runs every contract check at its stated tolerance and
// prints one pass/fail line per criterion.  Matrix and slope checks are exact
// integer equalities; fixture checks run through the installed CLI binary.

#include "mcg/curve_config.hpp"
#include "mcg/derivation.hpp"
#include "mcg/relations.hpp"
#include "mcg/representation.hpp"
#include "mcg/slope.hpp"
#include "mcg/word.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

using namespace mcg;
namespace fs = std::filesystem;

namespace {

const fs::path kFixtures = MCG_FIXTURES_DIR;
const std::string kCli = MCG_CLI_PATH;

int failures = 0;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void report(int id, const std::string& label, bool ok, double seconds) {
    std::ostringstream line;
    line << (ok ? "[PASS] " : "[FAIL] ") << id << ". " << label << " (" << seconds << " s)";
    std::cout << line.str() << "\n";
    if (!ok)
        ++failures;
}

int run_cli(const std::string& args, std::string* output = nullptr) {
    fs::path out_file = fs::temp_directory_path() / "mcg_acceptance_out.txt";
    std::string cmd = kCli + " " + args + " > " + out_file.string() + " 2>&1";
    int status = std::system(cmd.c_str());
    if (output) {
        std::ifstream in(out_file);
        std::ostringstream buf;
        buf << in.rdbuf();
        *output = buf.str();
    }
    if (status == -1)
        return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

std::string fixture(const char* name) {
    return (kFixtures / name).string();
}

std::vector<std::pair<Slope, Slope>> neighbor_pairs(long height) {
    std::vector<std::pair<Slope, Slope>> out;
    auto slopes = slopes_up_to_height(height);
    for (const Slope& a : slopes)
        for (const Slope& b : slopes)
            if (is_neighbor(a, b))
                out.emplace_back(a, b);
    return out;
}

void criterion_main_reduction() {
    Timer t;
    bool ok = run_cli("words check " + fixture("gervais_vprime.deriv")) == 0 &&
              run_cli("words check " + fixture("vprime_conjugation.deriv")) == 0;
    double secs = t.seconds();
    report(1, "main reduction fixture and its conjugation step check via the CLI, under 1 s",
           ok && secs < 1.0, secs);
}

void criterion_equation_fixtures() {
    Timer t;
    bool ok = true;
    for (const char* name : {"eq1.deriv", "eq2.deriv", "eq3.deriv", "eq4.deriv", "eq5.deriv"})
        ok = ok && run_cli("words check " + fixture(name)) == 0;
    report(2, "equation fixtures eq1..eq5 check via the CLI", ok, t.seconds());
}

void criterion_conjugation_form() {
    Timer t;
    bool ok = run_cli("words check " + fixture("three_prime.deriv")) == 0;
    double secs = t.seconds();
    report(3, "conjugation-form fixture checks via the CLI, under 1 s", ok && secs < 1.0, secs);
}

void criterion_mutation_sweep() {
    Timer t;
    DerivationScript script = DerivationScript::parse_file(kFixtures / "gervais_vprime.deriv");
    bool baseline = check_derivation(script).passed;

    std::set<std::string> rule_texts;
    for (const auto& step : script.steps)
        rule_texts.insert(step.rule.str());

    std::size_t mutants = 0, detected = 0;
    auto try_mutant = [&](DerivationScript mutant, std::size_t step_index) {
        ++mutants;
        DerivationReport report = check_derivation(mutant);
        if (!report.passed && report.failed_step && *report.failed_step == step_index)
            ++detected;
    };

    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        for (const auto& text : rule_texts) {
            if (text == script.steps[i].rule.str())
                continue;
            DerivationScript mutant = script;
            mutant.steps[i].rule = parse_rule_spec(text);
            try_mutant(std::move(mutant), i);
        }
        {
            DerivationScript mutant = script;
            mutant.steps[i].position += 1;
            try_mutant(std::move(mutant), i);
        }
        if (script.steps[i].position > 0) {
            DerivationScript mutant = script;
            mutant.steps[i].position -= 1;
            try_mutant(std::move(mutant), i);
        }
    }
    std::ostringstream label;
    label << "mutation sweep on the main fixture: " << detected << "/" << mutants
          << " single-step perturbations rejected at the right step";
    report(4, label.str(), baseline && mutants > 0 && detected == mutants, t.seconds());
}

void criterion_double_resolution() {
    Timer t;
    auto pairs = neighbor_pairs(30);
    std::size_t checked = 0, good = 0;
    for (const auto& [a, b] : pairs) {
        ++checked;
        if (resolve(resolve(a, b), a) == b && resolve(a, resolve(b, a)) == b)
            ++good;
    }
    double secs = t.seconds();
    std::ostringstream label;
    label << "double resolution recovers the second curve on " << checked
          << " neighbor pairs up to height 30, under 5 s";
    report(5, label.str(), checked > 1000 && good == checked && secs < 5.0, secs);
}

void criterion_farey_triangle() {
    Timer t;
    auto pairs = neighbor_pairs(30);
    std::size_t good = 0;
    for (const auto& [a, b] : pairs) {
        Slope c = resolve(a, b);
        if (is_neighbor(c, a) && is_neighbor(c, b))
            ++good;
    }
    report(6, "resolution closes the Farey triangle on all neighbor pairs up to height 30",
           good == pairs.size() && !pairs.empty(), t.seconds());
}

void criterion_matrix_shadows() {
    Timer t;
    IntMat2 ma = twist_matrix(Slope::zero(), SurfaceKind::OneHoledTorus);
    IntMat2 mb = twist_matrix(Slope::infinity(), SurfaceKind::OneHoledTorus);
    IntMat2 aba = ma * mb * ma;
    bool ok = aba == mb * ma * mb && aba.pow(2) == IntMat2::identity().negated() &&
              aba.pow(4) == IntMat2::identity();
    report(7, "exact matrix identities for the standard crossing pair: braid, square is "
              "-identity, fourth power is identity",
           ok, t.seconds());
}

void criterion_lantern_shadow() {
    Timer t;
    Binding binding;
    binding.bind_slope("a", Slope::zero());
    binding.bind_slope("b", Slope::infinity());
    binding.bind_slope("ab", Slope(-1, 1));
    Word word = parse_word("a b ab");
    IntMat2 value = evaluate_word(word, binding, SurfaceKind::FourHoledSphere);
    bool is_pm_identity =
        value == IntMat2::identity() || value == IntMat2::identity().negated();
    bool fixes = action_trivial_on_slopes(word, binding, SurfaceKind::FourHoledSphere, 100);
    bool cli_ok = run_cli("rep verify " + fixture("lantern.cfg") + " " +
                          fixture("lantern_s04.bind") + " --surface s04 --height 100") == 0;
    double secs = t.seconds();
    report(8, "lantern word evaluates to plus or minus identity and fixes every slope up to "
              "height 100, under 5 s",
           is_pm_identity && fixes && cli_ok && secs < 5.0, secs);
}

void criterion_conjugation_covariance() {
    Timer t;
    auto pairs = neighbor_pairs(20);
    std::size_t good = 0;
    for (const auto& [a, b] : pairs) {
        IntMat2 ma = twist_matrix(a, SurfaceKind::OneHoledTorus);
        IntMat2 mb = twist_matrix(b, SurfaceKind::OneHoledTorus);
        if (twist_matrix(resolve(a, b), SurfaceKind::OneHoledTorus) == ma * mb * ma.inverse())
            ++good;
    }
    report(9, "twist conjugation covariance at the matrix level on all neighbor pairs up to "
              "height 20",
           good == pairs.size() && !pairs.empty(), t.seconds());
}

void criterion_twist_resolve() {
    Timer t;
    auto pairs = neighbor_pairs(30);
    std::size_t good = 0;
    for (const auto& [a, b] : pairs) {
        bool torus = twist(a, b, 1, SurfaceKind::OneHoledTorus) == resolve(a, b);
        bool sphere =
            twist(a, b, 1, SurfaceKind::FourHoledSphere) == resolve(a, resolve(a, b));
        if (torus && sphere)
            ++good;
    }
    report(10, "one twist equals one (resp. two) resolution steps on all neighbor pairs up to "
               "height 30",
           good == pairs.size() && !pairs.empty(), t.seconds());
}

void criterion_emit_round_trip() {
    Timer t;
    std::string emitted;
    int code = run_cli("words emit " + fixture("gervais_fig1.cfg"), &emitted);
    std::string emitted_again;
    run_cli("words emit " + fixture("gervais_fig1.cfg"), &emitted_again);

    bool ok = code == 0 && !emitted.empty() && emitted == emitted_again;

    CurveConfig cfg = CurveConfig::parse_file(kFixtures / "gervais_fig1.cfg");
    std::set<RelName> seen;
    std::istringstream lines(emitted);
    std::string line;
    while (ok && std::getline(lines, line)) {
        if (line.empty())
            continue;
        auto space = line.find(' ');
        if (space == std::string::npos) {
            ok = false;
            break;
        }
        RuleRef ref = parse_rule_spec(line.substr(0, space));
        Word relator = parse_word(line.substr(space + 1));
        auto inst = instantiate(cfg, ref.name, ref.participants);
        ok = inst.has_value() && inst->relator == relator;
        seen.insert(ref.name);
    }
    ok = ok && seen.size() == 6; // every template is represented

    ok = ok && run_cli("rep verify " + fixture("gervais_fig1.cfg") + " " +
                       fixture("gervais_fig1_torus.bind") + " --surface torus --height 30") == 0;
    report(11, "emitted relators re-parse, match their templates, and verify under the torus "
               "binding via the CLI",
           ok, t.seconds());
}

} // namespace

int main() {
    criterion_main_reduction();
    criterion_equation_fixtures();
    criterion_conjugation_form();
    criterion_mutation_sweep();
    criterion_double_resolution();
    criterion_farey_triangle();
    criterion_matrix_shadows();
    criterion_lantern_shadow();
    criterion_conjugation_covariance();
    criterion_twist_resolve();
    criterion_emit_round_trip();

    if (failures) {
        std::cout << failures << " criterion(s) failed\n";
        return 1;
    }
    std::cout << "all 11 criteria passed\n";
    return 0;
}
