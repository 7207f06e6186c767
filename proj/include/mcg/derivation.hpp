#pragma once

/**
 * Step-checked rewriting of twist words.
 *
 * A derivation script pins a start word, a target word, and a sequence of
 * steps.  Each step names a rewriting rule (a relation instance from the
 * script's curve config, or the built-in free cancellation), a 0-based
 * position, and the exact word the step must produce.  The checker accepts a
 * step iff some rewrite variant of the named rule transforms the current word
 * at that position into exactly the expected word.
 *
 * Script grammar (line-based, '#' comments):
 *
 *   config <path>                      # resolved relative to the script file
 *   start <letter>+
 *   step <rule>(<l1>[,<l2>]) at <pos>  # or: step cancel at <pos>
 *   expect <letter>+
 *   ...
 *   target <letter>+                   # must equal the last expected word
 */

#include "mcg/curve_config.hpp"
#include "mcg/relations.hpp"
#include "mcg/word.hpp"

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace mcg {

struct RuleRef {
    bool is_cancel = false;
    RelName name = RelName::Trivial;
    std::vector<std::string> participants;

    std::string str() const; // "cancel", "braid(a,b)", ...
    friend bool operator==(const RuleRef&, const RuleRef&) = default;
};

RuleRef parse_rule_spec(std::string_view text);

struct DerivationStep {
    RuleRef rule;
    std::size_t position = 0;
    Word expected;
};

struct DerivationScript {
    std::string config_path; // as written in the file
    CurveConfig config;
    Word start;
    std::vector<DerivationStep> steps;
    Word target; // equals steps.back().expected

    static DerivationScript parse(std::istream& in, const std::filesystem::path& base_dir,
                                  const std::string& what);
    static DerivationScript parse_file(const std::filesystem::path& path);
};

enum class StepErrorKind { UnknownRule, PositionOutOfBounds, NoVariantMatches };

struct step_error : std::runtime_error {
    StepErrorKind kind;
    step_error(StepErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Applies one step; throws step_error when it is illegal.
Word apply_step(const Word& w, const DerivationStep& step, const CurveConfig& cfg);

struct DerivationReport {
    bool passed = false;
    std::size_t steps_applied = 0;
    std::optional<std::size_t> failed_step; // 0-based
    std::string reason;
};

DerivationReport check_derivation(const DerivationScript& script);

} // namespace mcg
