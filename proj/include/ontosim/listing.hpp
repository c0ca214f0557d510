#pragma once

#include "ontosim/triple.hpp"

#include <filesystem>
#include <string>
#include <string_view>

namespace ontosim {

// Parses the `<S,P,O>` listing format: one triple per line, blank lines
// skipped, lines starting with '#' treated as comments. S and P contain no
// comma; O may, so each line splits on its first two commas only.
TripleSet parse_listing(std::string_view text, std::string label);

// Renders a set back to the listing format, one `<S,P,O>` line per triple.
std::string serialize_listing(const TripleSet& set);

// Loads a listing file; the label defaults to the file stem ("v1.triples"
// -> "v1") unless an override is supplied.
TripleSet load_listing_file(const std::filesystem::path& path,
                            std::string_view label_override = {});

}  // namespace ontosim
