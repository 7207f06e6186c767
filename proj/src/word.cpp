#include "mcg/word.hpp"

#include "mcg/errors.hpp"

#include <cctype>
#include <ostream>
#include <sstream>

namespace mcg {

Letter inverse_of(const Letter& x) {
    return Letter{x.label, -x.sign};
}

Word inverse_of(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it)
        out.push_back(inverse_of(*it));
    return out;
}

bool is_inverse_pair(const Letter& x, const Letter& y) {
    return x.label == y.label && x.sign == -y.sign;
}

Word free_reduce(Word w) {
    Word out;
    out.reserve(w.size());
    for (auto& x : w) {
        if (!out.empty() && is_inverse_pair(out.back(), x))
            out.pop_back();
        else
            out.push_back(std::move(x));
    }
    return out;
}

bool is_freely_reduced(const Word& w) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
        if (is_inverse_pair(w[i], w[i + 1]))
            return false;
    return true;
}

Word rotated(const Word& w, std::size_t offset) {
    if (w.empty())
        return w;
    offset %= w.size();
    Word out;
    out.reserve(w.size());
    out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(offset), w.end());
    out.insert(out.end(), w.begin(), w.begin() + static_cast<std::ptrdiff_t>(offset));
    return out;
}

bool is_valid_label(std::string_view s) {
    if (s.empty() || !std::isalpha(static_cast<unsigned char>(s.front())))
        return false;
    for (char ch : s)
        if (!std::isalnum(static_cast<unsigned char>(ch)) && ch != '_')
            return false;
    return true;
}

Letter parse_letter(std::string_view token) {
    int sign = +1;
    if (!token.empty() && token.back() == '\'') {
        sign = -1;
        token.remove_suffix(1);
    }
    if (!is_valid_label(token))
        throw parse_error("bad generator token '" + std::string(token) + "'");
    return Letter{std::string(token), sign};
}

Word parse_word(std::string_view text) {
    Word out;
    std::istringstream in{std::string(text)};
    std::string token;
    while (in >> token)
        out.push_back(parse_letter(token));
    return out;
}

std::string to_string(const Letter& x) {
    return x.sign < 0 ? x.label + "'" : x.label;
}

std::string to_string(const Word& w) {
    std::string out;
    for (std::size_t i = 0; i < w.size(); ++i) {
        if (i)
            out += ' ';
        out += to_string(w[i]);
    }
    return out;
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
    return os << to_string(w);
}

} // namespace mcg
