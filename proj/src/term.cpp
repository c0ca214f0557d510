#include "ontosim/term.hpp"

namespace ontosim {
namespace {

// Decodes the UTF-8 sequence starting at s[i] and advances i past it.
// Malformed bytes are consumed one at a time and returned verbatim so the
// tokenizer stays total over arbitrary input.
char32_t decode_utf8(std::string_view s, std::size_t& i) {
    const auto byte = [&](std::size_t k) { return static_cast<unsigned char>(s[k]); };
    unsigned char b0 = byte(i);
    if (b0 < 0x80) {
        ++i;
        return b0;
    }
    int extra = 0;
    char32_t cp = 0;
    if ((b0 & 0xE0) == 0xC0) {
        extra = 1;
        cp = b0 & 0x1F;
    } else if ((b0 & 0xF0) == 0xE0) {
        extra = 2;
        cp = b0 & 0x0F;
    } else if ((b0 & 0xF8) == 0xF0) {
        extra = 3;
        cp = b0 & 0x07;
    } else {
        ++i;
        return b0;
    }
    if (i + extra >= s.size()) {
        ++i;
        return b0;
    }
    for (int k = 1; k <= extra; ++k) {
        unsigned char bk = byte(i + k);
        if ((bk & 0xC0) != 0x80) {
            ++i;
            return b0;
        }
        cp = (cp << 6) | (bk & 0x3F);
    }
    i += 1 + extra;
    return cp;
}

void encode_utf8(char32_t cp, std::string& out) {
    if (cp < 0x80) {
        out.push_back(static_cast<char>(cp));
    } else if (cp < 0x800) {
        out.push_back(static_cast<char>(0xC0 | (cp >> 6)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else if (cp < 0x10000) {
        out.push_back(static_cast<char>(0xE0 | (cp >> 12)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    } else {
        out.push_back(static_cast<char>(0xF0 | (cp >> 18)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 12) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | ((cp >> 6) & 0x3F)));
        out.push_back(static_cast<char>(0x80 | (cp & 0x3F)));
    }
}

bool is_ascii_digit(char32_t cp) {
    return cp >= U'0' && cp <= U'9';
}

// Letters and digits that belong inside a token: ASCII alphanumerics plus
// the Latin-1 Supplement and Latin Extended-A/B letters (covers French).
bool is_word_char(char32_t cp) {
    if (cp < 0x80) {
        return (cp >= U'0' && cp <= U'9') || (cp >= U'a' && cp <= U'z') ||
               (cp >= U'A' && cp <= U'Z');
    }
    return cp >= 0xC0 && cp <= 0x24F && cp != 0xD7 && cp != 0xF7;
}

// Lowercases ASCII, Latin-1 Supplement, and Latin Extended-A codepoints;
// everything else passes through unchanged.
char32_t to_lower(char32_t cp) {
    if (cp < 0x80) return (cp >= U'A' && cp <= U'Z') ? cp + 0x20 : cp;
    if (cp >= 0xC0 && cp <= 0xDE && cp != 0xD7) return cp + 0x20;
    if (cp == 0x178) return 0xFF;
    if (cp >= 0x100 && cp <= 0x137) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x139 && cp <= 0x148) return (cp % 2 == 1) ? cp + 1 : cp;
    if (cp >= 0x14A && cp <= 0x177) return (cp % 2 == 0) ? cp + 1 : cp;
    if (cp >= 0x179 && cp <= 0x17E) return (cp % 2 == 1) ? cp + 1 : cp;
    return cp;
}

std::vector<std::string> tokenize_label(std::string_view label) {
    std::vector<char32_t> cps;
    cps.reserve(label.size());
    for (std::size_t i = 0; i < label.size();) cps.push_back(decode_utf8(label, i));

    std::vector<std::string> tokens;
    std::string current;
    char32_t last = 0;  // last codepoint appended to `current`, 0 when empty
    const auto flush = [&] {
        if (!current.empty()) tokens.push_back(std::move(current));
        current.clear();
        last = 0;
    };
    for (std::size_t i = 0; i < cps.size(); ++i) {
        char32_t cp = cps[i];
        if (is_word_char(cp)) {
            cp = to_lower(cp);
            encode_utf8(cp, current);
            last = cp;
            continue;
        }
        const bool joins =
            (cp == U'-' && is_word_char(last) && i + 1 < cps.size() && is_word_char(cps[i + 1])) ||
            (cp == U'.' && is_ascii_digit(last) && i + 1 < cps.size() && is_ascii_digit(cps[i + 1]));
        if (joins) {
            encode_utf8(cp, current);
            last = cp;
            continue;
        }
        flush();
    }
    flush();
    return tokens;
}

}  // namespace

Term tokenize_term(std::string_view raw) {
    Term term;
    term.raw.assign(raw);
    const std::size_t colon = raw.find(':');
    std::string_view label = raw;
    if (colon != std::string_view::npos) {
        term.ns.assign(raw.substr(0, colon));
        label = raw.substr(colon + 1);
    }
    term.label.assign(label);
    term.tokens = tokenize_label(label);
    return term;
}

}  // namespace ontosim
