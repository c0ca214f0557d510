#pragma once

#include "ontosim/recommender.hpp"
#include "ontosim/similarity.hpp"

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace ontosim {

enum class OutputFormat { Json, Csv, Table };

// The effective run configuration, embedded in every rendered artifact so
// any output is reproducible from its own header.
struct ConfigEcho {
    std::string approach;          // n1 | n2 | ablation | compare
    std::string backend;           // embedding | tfidf
    Weights weights;
    std::string set_mode;          // normalized | literal
    std::string numeric_mode;      // literal | minmax
    bool clamp_negative = true;
    std::string embedding_path;    // empty for the tfidf backend
    std::string embedding_digest;  // fnv1a64 hex of the embedding file bytes
};

std::uint64_t fnv1a64(std::string_view bytes);
std::string fnv1a64_hex(std::string_view bytes);

struct ValidationEntry {
    std::string label;
    std::size_t triples = 0;
    std::size_t qualitative = 0;
    std::size_t quantitative = 0;
    std::size_t tokens = 0;               // tokens similarity would look up
    std::size_t oov_tokens = 0;
    std::vector<std::string> oov_words;   // unique, sorted
};

struct ComparisonRow {
    std::string left;
    std::string right;
    double n1 = 0.0;
    double n2 = 0.0;
    double ablation = 0.0;
};

std::string render_validation(const std::vector<ValidationEntry>& entries,
                              const ConfigEcho& echo, OutputFormat format);
std::string render_matrix(const SimilarityMatrix& matrix, const ConfigEcho& echo,
                          OutputFormat format);
std::string render_ranking(const RankedList& ranking, const ConfigEcho& echo,
                           OutputFormat format);
std::string render_comparison(const std::vector<ComparisonRow>& rows, const ConfigEcho& echo,
                              OutputFormat format);

}  // namespace ontosim
