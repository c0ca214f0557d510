#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ontosim {

// One textual component of a triple: the raw text, the namespace prefix (up
// to the first ':', possibly empty), the prefix-stripped label, and the
// lowercase word tokens extracted from the label.
struct Term {
    std::string raw;
    std::string ns;
    std::string label;
    std::vector<std::string> tokens;

    bool empty() const { return tokens.empty(); }

    friend bool operator==(const Term&, const Term&) = default;
};

// Splits `raw` into namespace and label at the first ':' and tokenizes the
// label. Tokens break on underscores, whitespace, and punctuation; hyphens
// between word characters and decimal points between digits are kept inside
// a token. Tokens are lowercased with accents preserved ("Boîte" -> "boîte").
Term tokenize_term(std::string_view raw);

}  // namespace ontosim
