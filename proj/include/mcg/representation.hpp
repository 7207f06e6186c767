#pragma once

/**
 * Integer-matrix shadows of twist words.
 *
 * A binding assigns each curve label either a slope (its twist acts by the
 * transvection of that slope) or marks it boundary-like (boundary components
 * and null-homotopic curves, whose twists act trivially here).  The torus
 * homology shadow kills the boundary twist of the one-holed torus; the
 * four-holed-sphere slope shadow kills all four boundary twists and is
 * projective, so -identity is trivial there.  Relations are therefore
 * verified modulo the representation's kernel; nothing here claims
 * faithfulness.
 *
 * Binding file grammar (line-based, '#' comments):
 *
 *   bind <label> <slope>
 *   bind <label> boundary
 */

#include "mcg/curve_config.hpp"
#include "mcg/relations.hpp"
#include "mcg/slope.hpp"
#include "mcg/word.hpp"

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace mcg {

class Binding {
public:
    void bind_slope(const std::string& label, Slope s);
    void bind_boundary_like(const std::string& label);

    bool is_bound(const std::string& label) const;
    // nullptr for boundary-like labels; throws unbound_label_error otherwise.
    const Slope* slope_if_any(const std::string& label) const;

    std::vector<std::string> unbound_labels(const CurveConfig& cfg) const;

    static Binding parse(std::istream& in, const std::string& what);
    static Binding parse_file(const std::filesystem::path& path);

private:
    std::map<std::string, std::optional<Slope>> map_;
};

// Product of twist matrices, leftmost letter as leftmost factor (leftmost
// acts last as a function); boundary-like letters contribute the identity.
IntMat2 evaluate_word(const Word& w, const Binding& binding, SurfaceKind kind);

// True iff the relator evaluates to the identity, or to -identity on the
// four-holed sphere.  A chain relator whose boundary label carries a slope is
// rejected on the torus (throws unrepresentable_error): the homology shadow
// cannot see that twist, so checking it would be meaningless.
bool verify_relation_in_rep(const RelationInstance& rel, const Binding& binding,
                            SurfaceKind kind);

// True iff the evaluated matrix fixes every slope of height <= h.
bool action_trivial_on_slopes(const Word& w, const Binding& binding, SurfaceKind kind, long h);

} // namespace mcg
