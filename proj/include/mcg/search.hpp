#pragma once

#include "mcg/curve_config.hpp"
#include "mcg/word.hpp"

#include <cstddef>

namespace mcg {

enum class SearchOutcome { Equal, NotFound };

// Bounded breadth-first search over single-variant rewrites of the config's
// relators, freely reducing after every move.  Equal is definitive; NotFound
// only means no chain of <= depth moves was found, never a disproof.
SearchOutcome equal_by_search(const Word& w1, const Word& w2, const CurveConfig& cfg,
                              std::size_t depth);

} // namespace mcg
