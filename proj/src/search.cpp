#include "mcg/search.hpp"

#include "mcg/relations.hpp"

#include <unordered_set>
#include <vector>

namespace mcg {

SearchOutcome equal_by_search(const Word& w1, const Word& w2, const CurveConfig& cfg,
                              std::size_t depth) {
    const Word source = free_reduce(w1);
    const Word goal = free_reduce(w2);
    if (source == goal)
        return SearchOutcome::Equal;

    std::vector<std::pair<Word, Word>> moves;
    for (const auto& rel : relators_from_config(cfg)) {
        auto variants = rewrite_variants(rel);
        moves.insert(moves.end(), variants.begin(), variants.end());
    }

    std::unordered_set<std::string> visited{to_string(source)};
    std::vector<Word> frontier{source};
    for (std::size_t level = 0; level < depth && !frontier.empty(); ++level) {
        std::vector<Word> next;
        for (const Word& w : frontier) {
            for (const auto& [lhs, rhs] : moves) {
                if (lhs.size() > w.size())
                    continue;
                for (std::size_t pos = 0; pos + lhs.size() <= w.size(); ++pos) {
                    if (!std::equal(lhs.begin(), lhs.end(),
                                    w.begin() + static_cast<std::ptrdiff_t>(pos)))
                        continue;
                    Word candidate(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(pos));
                    candidate.insert(candidate.end(), rhs.begin(), rhs.end());
                    candidate.insert(candidate.end(),
                                     w.begin() + static_cast<std::ptrdiff_t>(pos + lhs.size()),
                                     w.end());
                    candidate = free_reduce(std::move(candidate));
                    if (candidate == goal)
                        return SearchOutcome::Equal;
                    if (visited.insert(to_string(candidate)).second)
                        next.push_back(std::move(candidate));
                }
            }
        }
        frontier = std::move(next);
    }
    return SearchOutcome::NotFound;
}

} // namespace mcg
