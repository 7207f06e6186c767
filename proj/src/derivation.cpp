#include "mcg/derivation.hpp"

#include "mcg/errors.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace mcg {

std::string RuleRef::str() const {
    if (is_cancel)
        return "cancel";
    std::string out = to_string(name) + "(";
    for (std::size_t i = 0; i < participants.size(); ++i) {
        if (i)
            out += ',';
        out += participants[i];
    }
    return out + ")";
}

RuleRef parse_rule_spec(std::string_view text) {
    if (text == "cancel")
        return RuleRef{true, RelName::Trivial, {}};
    auto open = text.find('(');
    if (open == std::string_view::npos || text.back() != ')')
        throw parse_error("bad rule spec '" + std::string(text) + "'");
    auto name = rel_name_from(text.substr(0, open));
    if (!name)
        throw parse_error("unknown rule name in '" + std::string(text) + "'");
    std::string_view inside = text.substr(open + 1, text.size() - open - 2);
    std::vector<std::string> parts;
    while (!inside.empty()) {
        auto comma = inside.find(',');
        std::string_view token = inside.substr(0, comma);
        if (!is_valid_label(token))
            throw parse_error("bad participant in '" + std::string(text) + "'");
        parts.emplace_back(token);
        if (comma == std::string_view::npos)
            break;
        inside.remove_prefix(comma + 1);
    }
    if (parts.size() != rel_arity(*name))
        throw parse_error("rule '" + std::string(text) + "' has the wrong participant count");
    return RuleRef{false, *name, std::move(parts)};
}

namespace {

[[noreturn]] void fail(const std::string& what, int line_no, const std::string& msg) {
    throw parse_error(what + ":" + std::to_string(line_no) + ": " + msg);
}

void require_known_labels(const Word& w, const CurveConfig& cfg, const std::string& what,
                          int line_no) {
    for (const auto& letter : w)
        if (!cfg.has_label(letter.label))
            fail(what, line_no, "letter '" + letter.label + "' is not a declared curve");
}

} // namespace

DerivationScript DerivationScript::parse(std::istream& in, const std::filesystem::path& base_dir,
                                         const std::string& what) {
    DerivationScript script;
    bool have_config = false, have_start = false, have_target = false;
    std::optional<DerivationStep> pending;

    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        std::string body = raw.substr(0, raw.find('#'));
        std::istringstream line(body);
        std::string directive;
        if (!(line >> directive))
            continue;
        if (have_target)
            fail(what, no, "content after target");

        if (directive == "config") {
            std::string path, extra;
            if (!(line >> path) || (line >> extra))
                fail(what, no, "config needs exactly one path");
            if (have_config)
                fail(what, no, "duplicate config line");
            script.config_path = path;
            script.config = CurveConfig::parse_file(base_dir / path);
            have_config = true;
        } else if (directive == "start") {
            if (!have_config)
                fail(what, no, "start before config");
            if (have_start)
                fail(what, no, "duplicate start line");
            std::string rest;
            std::getline(line, rest);
            script.start = parse_word(rest);
            require_known_labels(script.start, script.config, what, no);
            have_start = true;
        } else if (directive == "step") {
            if (!have_start)
                fail(what, no, "step before start");
            if (pending)
                fail(what, no, "step without expect before it");
            std::string spec, at, pos_text, extra;
            if (!(line >> spec >> at >> pos_text) || at != "at" || (line >> extra))
                fail(what, no, "step syntax: step <rule> at <pos>");
            DerivationStep step;
            step.rule = parse_rule_spec(spec);
            try {
                std::size_t used = 0;
                step.position = std::stoull(pos_text, &used);
                if (used != pos_text.size())
                    throw std::invalid_argument(pos_text);
            } catch (const std::exception&) {
                fail(what, no, "bad position '" + pos_text + "'");
            }
            pending = std::move(step);
        } else if (directive == "expect") {
            if (!pending)
                fail(what, no, "expect without a step");
            std::string rest;
            std::getline(line, rest);
            pending->expected = parse_word(rest);
            require_known_labels(pending->expected, script.config, what, no);
            script.steps.push_back(std::move(*pending));
            pending.reset();
        } else if (directive == "target") {
            if (pending)
                fail(what, no, "target while a step is missing its expect");
            if (script.steps.empty())
                fail(what, no, "target before any steps");
            std::string rest;
            std::getline(line, rest);
            script.target = parse_word(rest);
            require_known_labels(script.target, script.config, what, no);
            if (script.target != script.steps.back().expected)
                fail(what, no, "target differs from the last expected word");
            have_target = true;
        } else {
            fail(what, no, "unknown directive '" + directive + "'");
        }
    }
    if (!have_target)
        fail(what, no, "missing target line");
    return script;
}

DerivationScript DerivationScript::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open script file '" + path.string() + "'");
    return parse(in, path.parent_path(), path.filename().string());
}

Word apply_step(const Word& w, const DerivationStep& step, const CurveConfig& cfg) {
    const std::size_t pos = step.position;
    if (step.rule.is_cancel) {
        if (pos + 2 > w.size())
            throw step_error(StepErrorKind::PositionOutOfBounds,
                             "cancel at " + std::to_string(pos) + " runs past the word");
        if (!is_inverse_pair(w[pos], w[pos + 1]))
            throw step_error(StepErrorKind::NoVariantMatches,
                             "letters at " + std::to_string(pos) + " are not an inverse pair");
        Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos) + 2, w.end());
        if (out != step.expected)
            throw step_error(StepErrorKind::NoVariantMatches,
                             "cancellation does not produce the expected word");
        return out;
    }

    auto inst = instantiate(cfg, step.rule.name, step.rule.participants);
    if (!inst)
        throw step_error(StepErrorKind::UnknownRule,
                         "rule " + step.rule.str() + " is not supported by the config");
    if (pos > w.size())
        throw step_error(StepErrorKind::PositionOutOfBounds,
                         "position " + std::to_string(pos) + " is past the word end");
    for (const auto& [lhs, rhs] : rewrite_variants(*inst)) {
        if (pos + lhs.size() > w.size())
            continue;
        if (!std::equal(lhs.begin(), lhs.end(), w.begin() + static_cast<std::ptrdiff_t>(pos)))
            continue;
        Word out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
        out.insert(out.end(), rhs.begin(), rhs.end());
        out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(pos + lhs.size()), w.end());
        if (out == step.expected)
            return out;
    }
    throw step_error(StepErrorKind::NoVariantMatches,
                     "no variant of " + step.rule.str() + " at " + std::to_string(pos) +
                         " produces the expected word");
}

DerivationReport check_derivation(const DerivationScript& script) {
    DerivationReport report;
    Word current = script.start;
    for (std::size_t i = 0; i < script.steps.size(); ++i) {
        try {
            current = apply_step(current, script.steps[i], script.config);
        } catch (const step_error& e) {
            report.failed_step = i;
            report.reason = e.what();
            return report;
        }
        ++report.steps_applied;
    }
    if (current != script.target) {
        report.failed_step = script.steps.empty() ? 0 : script.steps.size() - 1;
        report.reason = "final word differs from target";
        return report;
    }
    report.passed = true;
    return report;
}

} // namespace mcg
