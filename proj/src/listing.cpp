#include "ontosim/listing.hpp"

#include "ontosim/errors.hpp"

#include <fstream>
#include <sstream>

namespace ontosim {
namespace {

std::string_view trim(std::string_view s) {
    while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) {
        s.remove_prefix(1);
    }
    while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) {
        s.remove_suffix(1);
    }
    return s;
}

[[noreturn]] void fail(const std::string& label, std::size_t line_no, const std::string& what) {
    throw ParseError("listing '" + label + "' line " + std::to_string(line_no) + ": " + what);
}

}  // namespace

TripleSet parse_listing(std::string_view text, std::string label) {
    TripleSet set{std::move(label), {}};
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(pos, eol == std::string_view::npos ? text.size() - pos
                                                                               : eol - pos);
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;
        ++line_no;

        line = trim(line);
        if (line.empty() || line.front() == '#') continue;
        if (line.front() != '<' || line.back() != '>') {
            fail(set.label, line_no, "expected <S,P,O> with angle-bracket delimiters");
        }
        const std::string_view inner = line.substr(1, line.size() - 2);
        const std::size_t c1 = inner.find(',');
        const std::size_t c2 = c1 == std::string_view::npos ? std::string_view::npos
                                                            : inner.find(',', c1 + 1);
        if (c2 == std::string_view::npos) {
            fail(set.label, line_no, "expected at least two commas separating S, P, O");
        }
        Triple triple;
        triple.subject = tokenize_term(trim(inner.substr(0, c1)));
        triple.predicate = tokenize_term(trim(inner.substr(c1 + 1, c2 - c1 - 1)));
        triple.object = classify_object(tokenize_term(trim(inner.substr(c2 + 1))));
        set.triples.push_back(std::move(triple));
    }
    if (set.triples.empty()) {
        throw ParseError("no triples in listing '" + set.label + "'");
    }
    return set;
}

std::string serialize_listing(const TripleSet& set) {
    std::string out;
    for (const Triple& t : set.triples) {
        out += '<';
        out += t.subject.raw;
        out += ',';
        out += t.predicate.raw;
        out += ',';
        out += t.object.term.raw;
        out += ">\n";
    }
    return out;
}

TripleSet load_listing_file(const std::filesystem::path& path, std::string_view label_override) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open listing file: " + path.string());
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string label = label_override.empty() ? path.stem().string()
                                               : std::string(label_override);
    return parse_listing(buffer.str(), std::move(label));
}

}  // namespace ontosim
