#pragma once

/**
 * A declared curve system: a finite label set with pairwise relation kinds
 * (disjoint / crossing once / crossing twice with zero algebraic
 * intersection), resolution products, trivial labels, and boundary multisets.
 *
 * Everything here is declarative data; nothing is computed from topology.
 * The file grammar (UTF-8, line-based, '#' comments):
 *
 *   curves <label>+
 *   trivial <label>+
 *   disjoint <l1> <l2>
 *   perp <l1> <l2> <product-label>
 *   perp0 <l1> <l2> <product-label>
 *   boundary <l1> <l2> <label>+
 *
 * Pair kinds and boundaries are unordered in (l1, l2); products are ordered
 * (the product of l1 resolved along l2 from l1).  Boundary multisets keep the
 * declared order.
 */

#include <filesystem>
#include <iosfwd>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace mcg {

enum class PairKind { Disjoint, Perp, Perp0 };

std::string to_string(PairKind kind);

class CurveConfig {
public:
    using LabelPair = std::pair<std::string, std::string>;

    void add_curve(const std::string& label);
    void mark_trivial(const std::string& label);
    void set_pair_kind(const std::string& l1, const std::string& l2, PairKind kind);
    void set_product(const std::string& l1, const std::string& l2, const std::string& product);
    void set_boundary(const std::string& l1, const std::string& l2,
                      std::vector<std::string> labels);

    const std::set<std::string>& labels() const { return labels_; }
    const std::set<std::string>& trivial() const { return trivial_; }
    bool has_label(const std::string& label) const { return labels_.count(label) != 0; }
    bool is_trivial(const std::string& label) const { return trivial_.count(label) != 0; }

    std::optional<PairKind> pair_kind(const std::string& l1, const std::string& l2) const;
    std::optional<std::string> product(const std::string& l1, const std::string& l2) const;
    const std::vector<std::string>* boundary(const std::string& l1, const std::string& l2) const;

    // Unordered pairs of the given kind, sorted.
    std::vector<LabelPair> pairs_of_kind(PairKind kind) const;
    // Declared products as ((l1, l2), product), sorted by the ordered pair.
    std::vector<std::pair<LabelPair, std::string>> products() const;

    static CurveConfig parse(std::istream& in, const std::string& what);
    static CurveConfig parse_file(const std::filesystem::path& path);

private:
    static LabelPair unordered(const std::string& l1, const std::string& l2);
    void require_label(const std::string& label, const char* where) const;

    std::set<std::string> labels_;
    std::set<std::string> trivial_;
    std::map<LabelPair, PairKind> pair_kind_;               // key sorted
    std::map<LabelPair, std::string> product_;              // key ordered
    std::map<LabelPair, std::vector<std::string>> boundary_; // key sorted
};

} // namespace mcg
