#include "mcg/curve_config.hpp"

#include "mcg/errors.hpp"
#include "mcg/word.hpp"

#include <fstream>
#include <istream>
#include <sstream>

namespace mcg {

std::string to_string(PairKind kind) {
    switch (kind) {
    case PairKind::Disjoint: return "disjoint";
    case PairKind::Perp: return "perp";
    case PairKind::Perp0: return "perp0";
    }
    return "?";
}

CurveConfig::LabelPair CurveConfig::unordered(const std::string& l1, const std::string& l2) {
    return l1 <= l2 ? LabelPair{l1, l2} : LabelPair{l2, l1};
}

void CurveConfig::require_label(const std::string& label, const char* where) const {
    if (!has_label(label))
        throw std::invalid_argument(std::string(where) + ": unknown curve '" + label + "'");
}

void CurveConfig::add_curve(const std::string& label) {
    if (!is_valid_label(label))
        throw std::invalid_argument("bad curve label '" + label + "'");
    labels_.insert(label);
}

void CurveConfig::mark_trivial(const std::string& label) {
    require_label(label, "trivial");
    trivial_.insert(label);
}

void CurveConfig::set_pair_kind(const std::string& l1, const std::string& l2, PairKind kind) {
    require_label(l1, "pair");
    require_label(l2, "pair");
    if (l1 == l2)
        throw std::invalid_argument("pair needs two distinct curves, got '" + l1 + "' twice");
    auto key = unordered(l1, l2);
    auto it = pair_kind_.find(key);
    if (it != pair_kind_.end() && it->second != kind)
        throw std::invalid_argument("conflicting pair kinds for {" + key.first + ", " +
                                    key.second + "}");
    pair_kind_[key] = kind;
}

void CurveConfig::set_product(const std::string& l1, const std::string& l2,
                              const std::string& product) {
    require_label(l1, "product");
    require_label(l2, "product");
    require_label(product, "product");
    auto kind = pair_kind(l1, l2);
    if (!kind || (*kind != PairKind::Perp && *kind != PairKind::Perp0))
        throw std::invalid_argument("product of " + l1 + ", " + l2 +
                                    " needs a crossing pair (perp or perp0)");
    LabelPair key{l1, l2};
    auto it = product_.find(key);
    if (it != product_.end() && it->second != product)
        throw std::invalid_argument("conflicting products for (" + l1 + ", " + l2 + ")");
    product_[key] = product;
}

void CurveConfig::set_boundary(const std::string& l1, const std::string& l2,
                               std::vector<std::string> labels) {
    require_label(l1, "boundary");
    require_label(l2, "boundary");
    for (const auto& l : labels)
        require_label(l, "boundary");
    auto kind = pair_kind(l1, l2);
    if (!kind || (*kind != PairKind::Perp && *kind != PairKind::Perp0))
        throw std::invalid_argument("boundary of " + l1 + ", " + l2 +
                                    " needs a crossing pair (perp or perp0)");
    if (*kind == PairKind::Perp && labels.size() != 1)
        throw std::invalid_argument("boundary of a once-crossing pair has exactly one curve");
    if (*kind == PairKind::Perp0 && (labels.empty() || labels.size() > 4))
        throw std::invalid_argument("boundary of a twice-crossing pair has 1 to 4 curves");
    auto key = unordered(l1, l2);
    auto it = boundary_.find(key);
    if (it != boundary_.end() && it->second != labels)
        throw std::invalid_argument("conflicting boundaries for {" + key.first + ", " +
                                    key.second + "}");
    boundary_[key] = std::move(labels);
}

std::optional<PairKind> CurveConfig::pair_kind(const std::string& l1,
                                               const std::string& l2) const {
    auto it = pair_kind_.find(unordered(l1, l2));
    if (it == pair_kind_.end())
        return std::nullopt;
    return it->second;
}

std::optional<std::string> CurveConfig::product(const std::string& l1,
                                                const std::string& l2) const {
    auto it = product_.find(LabelPair{l1, l2});
    if (it == product_.end())
        return std::nullopt;
    return it->second;
}

const std::vector<std::string>* CurveConfig::boundary(const std::string& l1,
                                                      const std::string& l2) const {
    auto it = boundary_.find(unordered(l1, l2));
    return it == boundary_.end() ? nullptr : &it->second;
}

std::vector<CurveConfig::LabelPair> CurveConfig::pairs_of_kind(PairKind kind) const {
    std::vector<LabelPair> out;
    for (const auto& [pair, k] : pair_kind_)
        if (k == kind)
            out.push_back(pair);
    return out; // map iteration is already sorted
}

std::vector<std::pair<CurveConfig::LabelPair, std::string>> CurveConfig::products() const {
    return {product_.begin(), product_.end()};
}

namespace {

std::vector<std::string> tokenize(const std::string& line) {
    std::string body = line.substr(0, line.find('#'));
    std::istringstream in(body);
    std::vector<std::string> tokens;
    std::string t;
    while (in >> t)
        tokens.push_back(t);
    return tokens;
}

[[noreturn]] void fail(const std::string& what, int line_no, const std::string& msg) {
    throw parse_error(what + ":" + std::to_string(line_no) + ": " + msg);
}

} // namespace

CurveConfig CurveConfig::parse(std::istream& in, const std::string& what) {
    struct Line {
        int no;
        std::vector<std::string> tokens;
    };
    std::vector<Line> lines;
    std::string raw;
    int no = 0;
    while (std::getline(in, raw)) {
        ++no;
        auto tokens = tokenize(raw);
        if (!tokens.empty())
            lines.push_back({no, std::move(tokens)});
    }

    CurveConfig cfg;
    // Labels first so later directives can reference them in any file order.
    for (const auto& line : lines) {
        if (line.tokens[0] != "curves")
            continue;
        if (line.tokens.size() < 2)
            fail(what, line.no, "curves needs at least one label");
        for (std::size_t i = 1; i < line.tokens.size(); ++i) {
            try {
                cfg.add_curve(line.tokens[i]);
            } catch (const std::invalid_argument& e) {
                fail(what, line.no, e.what());
            }
        }
    }
    for (const auto& line : lines) {
        const auto& t = line.tokens;
        try {
            if (t[0] == "curves") {
                continue;
            } else if (t[0] == "trivial") {
                if (t.size() < 2)
                    fail(what, line.no, "trivial needs at least one label");
                for (std::size_t i = 1; i < t.size(); ++i)
                    cfg.mark_trivial(t[i]);
            } else if (t[0] == "disjoint") {
                if (t.size() != 3)
                    fail(what, line.no, "disjoint needs exactly two labels");
                cfg.set_pair_kind(t[1], t[2], PairKind::Disjoint);
            } else if (t[0] == "perp" || t[0] == "perp0") {
                if (t.size() != 4)
                    fail(what, line.no, t[0] + " needs two labels and a product label");
                cfg.set_pair_kind(t[1], t[2], t[0] == "perp" ? PairKind::Perp : PairKind::Perp0);
                cfg.set_product(t[1], t[2], t[3]);
            } else if (t[0] == "boundary") {
                if (t.size() < 4)
                    fail(what, line.no, "boundary needs two labels and at least one curve");
                cfg.set_boundary(t[1], t[2], {t.begin() + 3, t.end()});
            } else {
                fail(what, line.no, "unknown directive '" + t[0] + "'");
            }
        } catch (const std::invalid_argument& e) {
            fail(what, line.no, e.what());
        }
    }
    return cfg;
}

CurveConfig CurveConfig::parse_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in)
        throw parse_error("cannot open config file '" + path.string() + "'");
    return parse(in, path.filename().string());
}

} // namespace mcg
