#include "mcg/representation.hpp"

#include "mcg/errors.hpp"

#include <algorithm>
#include <fstream>
#include <istream>
#include <sstream>

namespace mcg {

void Binding::bind_slope(const std::string& label, Slope s) {
    map_.insert_or_assign(label, std::move(s));
}

void Binding::bind_boundary_like(const std::string& label) {
    map_.insert_or_assign(label, std::nullopt);
}

bool Binding::is_bound(const std::string& label) const {
    return map_.count(label) != 0;
}

const Slope* Binding::slope_if_any(const std::string& label) const {
    auto it = map_.find(label);
    if (it == map_.end())
        throw unbound_label_error("label '" + label + "' is not bound");
    return it->second ? &*it->second : nullptr;
}

std::vector<std::string> Binding::unbound_labels(const CurveConfig& cfg) const {
    std::vector<std::string> out;
    for (const auto& label : cfg.labels())
        if (!is_bound(label))
            out.push_back(label);
    return out;
}

Binding Binding::parse(std::istream& in, const std::string& what) {
    Binding binding;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        std::string body = raw.substr(0, raw.find('#'));
        std::istringstream line(body);
        std::string directive;
        if (!(line >> directive))
            continue;
        std::string label, value, extra;
        if (directive != "bind" || !(line >> label >> value) || (line >> extra))
            throw parse_error(what + ":" + std::to_string(no) +
                              ": expected 'bind <label> <slope|boundary>'");
        if (!is_valid_label(label))
            throw parse_error(what + ":" + std::to_string(no) + ": bad label '" + label + "'");
        if (value == "boundary")
            binding.bind_boundary_like(label);
        else
            binding.bind_slope(label, Slope::parse(value));
    }
    return binding;
}

Binding Binding::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open binding file '" + path.string() + "'");
    return parse(in, path.filename().string());
}

IntMat2 evaluate_word(const Word& w, const Binding& binding, SurfaceKind kind) {
    IntMat2 acc = IntMat2::identity();
    for (const auto& letter : w) {
        const Slope* slope = binding.slope_if_any(letter.label);
        if (!slope)
            continue;
        IntMat2 m = twist_matrix(*slope, kind);
        if (letter.sign < 0)
            m = m.inverse();
        acc = acc * m;
    }
    return acc;
}

bool verify_relation_in_rep(const RelationInstance& rel, const Binding& binding,
                            SurfaceKind kind) {
    if (rel.name == RelName::Chain && kind == SurfaceKind::OneHoledTorus) {
        for (const auto& letter : rel.relator) {
            if (std::find(rel.participants.begin(), rel.participants.end(), letter.label) !=
                rel.participants.end())
                continue;
            if (binding.slope_if_any(letter.label) != nullptr)
                throw unrepresentable_error(
                    "chain relator boundary '" + letter.label +
                    "' carries a slope; the torus shadow kills boundary twists");
        }
    }
    IntMat2 value = evaluate_word(rel.relator, binding, kind);
    if (value == IntMat2::identity())
        return true;
    if (kind == SurfaceKind::FourHoledSphere && value == IntMat2::identity().negated())
        return true;
    return false;
}

bool action_trivial_on_slopes(const Word& w, const Binding& binding, SurfaceKind kind, long h) {
    IntMat2 m = evaluate_word(w, binding, kind);
    for (const Slope& s : slopes_up_to_height(h))
        if (apply_matrix(m, s) != s)
            return false;
    return true;
}

} // namespace mcg
