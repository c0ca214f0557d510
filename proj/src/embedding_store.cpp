#include "ontosim/embedding_store.hpp"

#include "ontosim/errors.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace ontosim {
namespace {

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> fields;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        const std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
        if (i > start) fields.push_back(line.substr(start, i - start));
    }
    return fields;
}

[[noreturn]] void fail(const std::string& source, std::size_t line_no, const std::string& what) {
    throw ParseError("embedding file " + source + " line " + std::to_string(line_no) + ": " + what);
}

double parse_component(std::string_view field, const std::string& source, std::size_t line_no) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc{} || ptr != field.data() + field.size()) {
        fail(source, line_no, "cannot parse component '" + std::string(field) + "'");
    }
    if (!std::isfinite(value)) {
        fail(source, line_no, "non-finite component '" + std::string(field) + "'");
    }
    return value;
}

}  // namespace

EmbeddingStore EmbeddingStore::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw IoError("cannot open embedding file: " + path.string());
    }
    return parse(in, path.string());
}

EmbeddingStore EmbeddingStore::parse(std::istream& in, const std::string& source_name) {
    std::string line;
    std::size_t line_no = 1;
    if (!std::getline(in, line)) {
        fail(source_name, line_no, "missing header line");
    }
    const auto header = split_fields(line);
    if (header.size() != 2) {
        fail(source_name, line_no, "header must be '<vocab_count> <dimension>'");
    }
    std::size_t declared = 0;
    std::size_t dimension = 0;
    const auto parse_count = [&](std::string_view field, std::size_t& out) {
        const auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), out);
        return ec == std::errc{} && ptr == field.data() + field.size();
    };
    if (!parse_count(header[0], declared) || !parse_count(header[1], dimension)) {
        fail(source_name, line_no, "header must be '<vocab_count> <dimension>'");
    }
    if (dimension < 1) {
        fail(source_name, line_no, "dimension must be at least 1");
    }

    EmbeddingStore store;
    store.dimension_ = dimension;
    store.entries_.reserve(declared);
    for (std::size_t row = 0; row < declared; ++row) {
        ++line_no;
        if (!std::getline(in, line)) {
            fail(source_name, line_no,
                 "expected " + std::to_string(declared) + " rows, found " + std::to_string(row));
        }
        const auto fields = split_fields(line);
        if (fields.size() != dimension + 1) {
            fail(source_name, line_no,
                 "expected a word and " + std::to_string(dimension) + " components, found " +
                     std::to_string(fields.size()) + " fields");
        }
        std::vector<double> components;
        components.reserve(dimension);
        for (std::size_t c = 1; c < fields.size(); ++c) {
            components.push_back(parse_component(fields[c], source_name, line_no));
        }
        store.entries_.emplace(std::string(fields[0]), std::move(components));
    }
    while (std::getline(in, line)) {
        ++line_no;
        if (!split_fields(line).empty()) {
            fail(source_name, line_no, "unexpected content after the declared rows");
        }
    }
    return store;
}

const std::vector<double>* EmbeddingStore::vector_of(std::string_view word) const {
    const auto it = entries_.find(word);
    return it == entries_.end() ? nullptr : &it->second;
}

}  // namespace ontosim
