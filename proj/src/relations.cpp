#include "mcg/relations.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace mcg {

std::string to_string(RelName name) {
    switch (name) {
    case RelName::Trivial: return "trivial";
    case RelName::Commute: return "commute";
    case RelName::ResConj: return "res-conj";
    case RelName::Lantern: return "lantern";
    case RelName::Chain: return "chain";
    case RelName::Braid: return "braid";
    }
    return "?";
}

std::optional<RelName> rel_name_from(std::string_view text) {
    if (text == "trivial") return RelName::Trivial;
    if (text == "commute") return RelName::Commute;
    if (text == "res-conj") return RelName::ResConj;
    if (text == "lantern") return RelName::Lantern;
    if (text == "chain") return RelName::Chain;
    if (text == "braid") return RelName::Braid;
    return std::nullopt;
}

std::size_t rel_arity(RelName name) {
    return name == RelName::Trivial ? 1 : 2;
}

namespace {

Letter pos(const std::string& l) { return Letter{l, +1}; }
Letter neg(const std::string& l) { return Letter{l, -1}; }

// Inverting the product of the boundary labels in declared order.
void append_boundary_inverse(Word& w, const std::vector<std::string>& boundary) {
    for (auto it = boundary.rbegin(); it != boundary.rend(); ++it)
        w.push_back(neg(*it));
}

} // namespace

std::optional<RelationInstance> instantiate(const CurveConfig& cfg, RelName name,
                                            const std::vector<std::string>& participants) {
    if (participants.size() != rel_arity(name))
        return std::nullopt;
    for (const auto& l : participants)
        if (!cfg.has_label(l))
            return std::nullopt;

    Word relator;
    switch (name) {
    case RelName::Trivial: {
        if (!cfg.is_trivial(participants[0]))
            return std::nullopt;
        relator = {pos(participants[0])};
        break;
    }
    case RelName::Commute: {
        const auto& x = participants[0];
        const auto& y = participants[1];
        if (cfg.pair_kind(x, y) != PairKind::Disjoint)
            return std::nullopt;
        relator = {pos(x), pos(y), neg(x), neg(y)};
        break;
    }
    case RelName::ResConj: {
        const auto& x = participants[0];
        const auto& y = participants[1];
        if (cfg.pair_kind(x, y) != PairKind::Perp)
            return std::nullopt;
        auto p = cfg.product(x, y);
        if (!p)
            return std::nullopt;
        relator = {pos(*p), pos(x), neg(y), neg(x)};
        break;
    }
    case RelName::Lantern: {
        const auto& x = participants[0];
        const auto& y = participants[1];
        if (cfg.pair_kind(x, y) != PairKind::Perp0)
            return std::nullopt;
        auto p = cfg.product(x, y);
        const auto* b = cfg.boundary(x, y);
        if (!p || !b)
            return std::nullopt;
        relator = {pos(x), pos(y), pos(*p)};
        append_boundary_inverse(relator, *b);
        break;
    }
    case RelName::Chain: {
        const auto& x = participants[0];
        const auto& y = participants[1];
        if (cfg.pair_kind(x, y) != PairKind::Perp)
            return std::nullopt;
        const auto* b = cfg.boundary(x, y);
        if (!b)
            return std::nullopt;
        for (int i = 0; i < 4; ++i) {
            relator.push_back(pos(x));
            relator.push_back(pos(y));
            relator.push_back(pos(x));
        }
        append_boundary_inverse(relator, *b);
        break;
    }
    case RelName::Braid: {
        const auto& x = participants[0];
        const auto& y = participants[1];
        if (cfg.pair_kind(x, y) != PairKind::Perp)
            return std::nullopt;
        relator = {pos(x), pos(y), pos(x), neg(y), neg(x), neg(y)};
        break;
    }
    }
    if (relator.empty() || !is_freely_reduced(relator))
        throw std::domain_error("degenerate relation instance " + to_string(name));
    return RelationInstance{name, participants, std::move(relator)};
}

std::vector<RelationInstance> relators_from_config(const CurveConfig& cfg) {
    std::vector<RelationInstance> out;
    auto add = [&](RelName name, const std::vector<std::string>& parts) {
        if (auto inst = instantiate(cfg, name, parts))
            out.push_back(std::move(*inst));
    };

    for (const auto& t : cfg.trivial())
        add(RelName::Trivial, {t});
    for (const auto& [x, y] : cfg.pairs_of_kind(PairKind::Disjoint))
        add(RelName::Commute, {x, y});
    for (const auto& [pair, product] : cfg.products()) {
        (void)product;
        if (cfg.pair_kind(pair.first, pair.second) == PairKind::Perp)
            add(RelName::ResConj, {pair.first, pair.second});
    }
    for (const auto& [pair, product] : cfg.products()) {
        (void)product;
        if (cfg.pair_kind(pair.first, pair.second) == PairKind::Perp0)
            add(RelName::Lantern, {pair.first, pair.second});
    }
    for (const auto& [x, y] : cfg.pairs_of_kind(PairKind::Perp))
        add(RelName::Chain, {x, y});
    for (const auto& [x, y] : cfg.pairs_of_kind(PairKind::Perp))
        add(RelName::Braid, {x, y});
    return out;
}

std::vector<std::pair<Word, Word>> rewrite_variants(const RelationInstance& rel) {
    std::set<std::pair<Word, Word>> seen;
    const Word inv = inverse_of(rel.relator);
    for (const Word* base : {&rel.relator, &inv}) {
        for (std::size_t offset = 0; offset < base->size(); ++offset) {
            Word rot = rotated(*base, offset);
            for (std::size_t split = 0; split <= rot.size(); ++split) {
                Word lhs(rot.begin(), rot.begin() + static_cast<std::ptrdiff_t>(split));
                Word tail(rot.begin() + static_cast<std::ptrdiff_t>(split), rot.end());
                seen.emplace(std::move(lhs), inverse_of(tail));
            }
        }
    }
    return {seen.begin(), seen.end()};
}

} // namespace mcg
