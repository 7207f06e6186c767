#pragma once

/**
 * Relator templates over a declared curve system.
 *
 *   trivial(t)      t                                   (null-homotopic twist)
 *   commute(x,y)    x y x' y'                           (disjoint pair)
 *   res-conj(x,y)   p x y' x'       with p = product    (once-crossing pair)
 *   lantern(x,y)    x y p B'        with B the boundary product
 *   chain(x,y)      (x y x)^4 B'
 *   braid(x,y)      x y x y' x' y'
 *
 * Each relator equals the identity in the presented group.  A relator also
 * carries its rewriting rules: for every cyclic rotation r of the relator or
 * of its inverse and every split r = s t, an occurrence of s may be replaced
 * by t^{-1}.
 */

#include "mcg/curve_config.hpp"
#include "mcg/word.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcg {

enum class RelName { Trivial, Commute, ResConj, Lantern, Chain, Braid };

std::string to_string(RelName name);
std::optional<RelName> rel_name_from(std::string_view text);
std::size_t rel_arity(RelName name); // 1 for trivial, 2 otherwise

struct RelationInstance {
    RelName name;
    std::vector<std::string> participants;
    Word relator; // freely reduced, nonempty
};

// Builds the relator for the named template on the given participants, or
// nullopt when the config lacks the required kind / product / boundary data.
std::optional<RelationInstance> instantiate(const CurveConfig& cfg, RelName name,
                                            const std::vector<std::string>& participants);

// Every instance the config supports, deterministically ordered: templates in
// declaration order, participants sorted.  Unordered templates (commute,
// chain, braid) fire once per pair with sorted participants; res-conj and
// lantern follow the declared product orientations.
std::vector<RelationInstance> relators_from_config(const CurveConfig& cfg);

// All rewriting rules carried by the relator, deduplicated and sorted.
std::vector<std::pair<Word, Word>> rewrite_variants(const RelationInstance& rel);

} // namespace mcg
