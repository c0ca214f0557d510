#pragma once

#include "ontosim/triple.hpp"
#include "ontosim/vector_model.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ontosim {

// Component weights for the triple-level weighted mean over subject,
// predicate, and object. The three weights must be non-negative and sum to
// 3 so the mean stays a convex combination of the component similarities.
struct Weights {
    double alpha = 1.0;
    double beta = 1.0;
    double gamma = 1.0;

    static Weights balanced() { return {}; }

    // Validates non-negativity and the sum-to-3 constraint (1e-9 slack).
    static Weights of(double alpha, double beta, double gamma);

    // Rescales so the sum becomes 3; requires a positive sum.
    Weights normalized() const;

    double sum() const { return alpha + beta + gamma; }

    friend bool operator==(const Weights&, const Weights&) = default;
};

enum class SetMode {
    Normalized,   // (sum of pair sims) / (pairs + unmatched); self-similarity 1
    Literal,  // (1/L) sum qualitative + (1/H) sum quantitative; up to 2
};

enum class NumericMode {
    Literal,            // Euclidean distance over raw values
    MinMaxPerPredicate, // values rescaled to [0,1] by per-predicate corpus range
};

enum class AlignmentMode { ByPredicate };

// Per-predicate value range pooled over a corpus, used to rescale numeric
// objects under NumericMode::MinMaxPerPredicate. Unknown predicates pass
// values through unchanged; a degenerate range maps everything to 0.
class NumericScaler {
public:
    NumericScaler() = default;

    static NumericScaler fit(std::span<const TripleSet> corpus);

    std::vector<double> rescale(std::string_view predicate_label,
                                std::span<const double> values) const;

private:
    struct Range {
        double lo;
        double hi;
    };
    std::map<std::string, Range, std::less<>> ranges_;
};

struct SimilarityConfig {
    Weights weights;
    WordSimPolicy word_policy;
    AlignmentMode alignment = AlignmentMode::ByPredicate;
    SetMode set_mode = SetMode::Normalized;
    NumericMode numeric_mode = NumericMode::Literal;
    const VectorModel* model = nullptr;
    const NumericScaler* scaler = nullptr;  // required for MinMaxPerPredicate
};

// Highest word similarity between one word and any token of the term.
double sim_word_term(std::string_view word, const Term& term, const SimilarityConfig& cfg);

// Bidirectional mean of per-word maxima: every word of each term is matched
// against the other term, and the (k + l) maxima are averaged.
double sim_qualitative(const Term& a1, const Term& a2, const SimilarityConfig& cfg);

// 1 / (1 + Euclidean distance) between two numeric objects of equal arity.
double sim_quantitative(const ObjectValue& o1, const ObjectValue& o2,
                        const SimilarityConfig& cfg, std::string_view predicate_label = {});

// Weighted mean over subject, predicate, and qualitative object.
double sim_triple_I(const Triple& a1, const Triple& a2, const SimilarityConfig& cfg);

// Weighted mean over subject, predicate, and quantitative object.
double sim_triple_II(const Triple& a1, const Triple& a2, const SimilarityConfig& cfg);

struct AlignedPairs {
    std::vector<std::pair<Triple, Triple>> qual_pairs;
    std::vector<std::pair<Triple, Triple>> quant_pairs;
    std::vector<Triple> unmatched_left;
    std::vector<Triple> unmatched_right;
};

// Pairs triples across two sets by exact predicate label. Duplicate
// predicates are zipped in source order; pairs mixing a qualitative with a
// quantitative object count as unmatched on both sides; leftovers are
// recorded. align(G1, G2) is the mirror image of align(G2, G1).
AlignedPairs align_triples(const TripleSet& g1, const TripleSet& g2);

// Aggregate similarity of two triple sets over their aligned pairs, in the
// configured SetMode. Unmatched triples contribute 0 and, in Normalized
// mode, inflate the denominator.
double sim_sets(const TripleSet& g1, const TripleSet& g2, const SimilarityConfig& cfg);

struct SimilarityMatrix {
    std::vector<std::string> labels;
    std::vector<double> values;  // row-major, labels.size() x labels.size()

    double at(std::size_t i, std::size_t j) const { return values[i * labels.size() + j]; }
};

// Computes every cell of the pairwise matrix; symmetry is a property of the
// measure, not of the construction.
SimilarityMatrix similarity_matrix(std::span<const TripleSet> catalog,
                                   const SimilarityConfig& cfg);

}  // namespace ontosim
