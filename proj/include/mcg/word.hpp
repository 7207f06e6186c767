#pragma once

// Words over signed Dehn-twist generators.  Text form: a label token,
// optionally suffixed with ' for the inverse ("a", "a'", "e1'").

#include <compare>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

namespace mcg {

struct Letter {
    std::string label;
    int sign = +1; // +1 or -1

    friend bool operator==(const Letter&, const Letter&) = default;
    friend auto operator<=>(const Letter&, const Letter&) = default;
};

using Word = std::vector<Letter>;

Letter inverse_of(const Letter& x);
Word inverse_of(const Word& w);
bool is_inverse_pair(const Letter& x, const Letter& y);

// Cancels adjacent inverse pairs until none remain; same group element.
Word free_reduce(Word w);
bool is_freely_reduced(const Word& w);

Word rotated(const Word& w, std::size_t offset);

// Valid labels: leading letter, then letters/digits/underscores.
bool is_valid_label(std::string_view s);

Letter parse_letter(std::string_view token);
Word parse_word(std::string_view text); // whitespace-separated tokens

std::string to_string(const Letter& x);
std::string to_string(const Word& w);
std::ostream& operator<<(std::ostream& os, const Word& w);

} // namespace mcg
