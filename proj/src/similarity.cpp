#include "ontosim/similarity.hpp"

#include "ontosim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace ontosim {
namespace {

constexpr double kWeightSlack = 1e-9;

double clamp01(double x) {
    return std::min(std::max(x, 0.0), 1.0);
}

void validate_weights(const Weights& w) {
    if (w.alpha < 0.0 || w.beta < 0.0 || w.gamma < 0.0) {
        throw ModelError("component weights must be non-negative");
    }
    if (std::abs(w.sum() - 3.0) > kWeightSlack) {
        throw ModelError("component weights must sum to 3");
    }
}

const VectorModel& require_model(const SimilarityConfig& cfg) {
    if (cfg.model == nullptr) {
        throw ModelError("no vector model configured");
    }
    return *cfg.model;
}

void require_term(const Term& term, const char* role) {
    if (term.empty()) {
        throw ModelError(std::string("empty ") + role + " term '" + term.raw + "'");
    }
}

}  // namespace

Weights Weights::of(double alpha, double beta, double gamma) {
    Weights w{alpha, beta, gamma};
    validate_weights(w);
    return w;
}

Weights Weights::normalized() const {
    if (alpha < 0.0 || beta < 0.0 || gamma < 0.0) {
        throw ModelError("component weights must be non-negative");
    }
    const double total = sum();
    if (total <= 0.0) {
        throw ModelError("component weights must have a positive sum");
    }
    const double scale = 3.0 / total;
    return Weights{alpha * scale, beta * scale, gamma * scale};
}

NumericScaler NumericScaler::fit(std::span<const TripleSet> corpus) {
    NumericScaler scaler;
    for (const TripleSet& set : corpus) {
        for (const Triple& triple : set.triples) {
            if (!triple.object.quantitative()) continue;
            for (const double v : triple.object.numeric) {
                auto [it, inserted] = scaler.ranges_.try_emplace(triple.predicate.label,
                                                                 Range{v, v});
                if (!inserted) {
                    it->second.lo = std::min(it->second.lo, v);
                    it->second.hi = std::max(it->second.hi, v);
                }
            }
        }
    }
    return scaler;
}

std::vector<double> NumericScaler::rescale(std::string_view predicate_label,
                                           std::span<const double> values) const {
    std::vector<double> out(values.begin(), values.end());
    const auto it = ranges_.find(predicate_label);
    if (it == ranges_.end()) return out;
    const auto& [lo, hi] = it->second;
    for (double& v : out) {
        v = hi > lo ? (v - lo) / (hi - lo) : 0.0;
    }
    return out;
}

double sim_word_term(std::string_view word, const Term& term, const SimilarityConfig& cfg) {
    require_term(term, "target");
    const VectorModel& model = require_model(cfg);
    double best = 0.0;
    for (const std::string& token : term.tokens) {
        best = std::max(best, word_similarity(word, token, model, cfg.word_policy));
    }
    return best;
}

double sim_qualitative(const Term& a1, const Term& a2, const SimilarityConfig& cfg) {
    require_term(a1, "left");
    require_term(a2, "right");
    double total = 0.0;
    for (const std::string& word : a1.tokens) total += sim_word_term(word, a2, cfg);
    for (const std::string& word : a2.tokens) total += sim_word_term(word, a1, cfg);
    return total / static_cast<double>(a1.tokens.size() + a2.tokens.size());
}

double sim_quantitative(const ObjectValue& o1, const ObjectValue& o2,
                        const SimilarityConfig& cfg, std::string_view predicate_label) {
    if (!o1.quantitative() || !o2.quantitative()) {
        throw ModelError("sim_quantitative requires two quantitative objects");
    }
    if (o1.numeric.size() != o2.numeric.size()) {
        throw ModelError("numeric arity mismatch for predicate '" +
                         std::string(predicate_label) + "': " +
                         std::to_string(o1.numeric.size()) + " vs " +
                         std::to_string(o2.numeric.size()));
    }
    std::vector<double> v1 = o1.numeric;
    std::vector<double> v2 = o2.numeric;
    if (cfg.numeric_mode == NumericMode::MinMaxPerPredicate) {
        if (cfg.scaler == nullptr) {
            throw ModelError("min-max numeric mode requires a fitted scaler");
        }
        v1 = cfg.scaler->rescale(predicate_label, v1);
        v2 = cfg.scaler->rescale(predicate_label, v2);
    }
    double squared = 0.0;
    for (std::size_t i = 0; i < v1.size(); ++i) {
        const double d = v1[i] - v2[i];
        squared += d * d;
    }
    return 1.0 / (1.0 + std::sqrt(squared));
}

double sim_triple_I(const Triple& a1, const Triple& a2, const SimilarityConfig& cfg) {
    if (a1.object.quantitative() || a2.object.quantitative()) {
        throw ModelError("sim_triple_I requires qualitative objects");
    }
    validate_weights(cfg.weights);
    require_term(a1.subject, "subject");
    require_term(a2.subject, "subject");
    require_term(a1.predicate, "predicate");
    require_term(a2.predicate, "predicate");
    require_term(a1.object.term, "object");
    require_term(a2.object.term, "object");

    double total = 0.0;
    if (cfg.weights.alpha != 0.0) {
        total += cfg.weights.alpha * sim_qualitative(a1.subject, a2.subject, cfg);
    }
    if (cfg.weights.beta != 0.0) {
        total += cfg.weights.beta * sim_qualitative(a1.predicate, a2.predicate, cfg);
    }
    if (cfg.weights.gamma != 0.0) {
        total += cfg.weights.gamma * sim_qualitative(a1.object.term, a2.object.term, cfg);
    }
    return clamp01(total / 3.0);
}

double sim_triple_II(const Triple& a1, const Triple& a2, const SimilarityConfig& cfg) {
    if (!a1.object.quantitative() || !a2.object.quantitative()) {
        throw ModelError("sim_triple_II requires quantitative objects");
    }
    validate_weights(cfg.weights);
    require_term(a1.subject, "subject");
    require_term(a2.subject, "subject");
    require_term(a1.predicate, "predicate");
    require_term(a2.predicate, "predicate");

    double total = 0.0;
    if (cfg.weights.alpha != 0.0) {
        total += cfg.weights.alpha * sim_qualitative(a1.subject, a2.subject, cfg);
    }
    if (cfg.weights.beta != 0.0) {
        total += cfg.weights.beta * sim_qualitative(a1.predicate, a2.predicate, cfg);
    }
    if (cfg.weights.gamma != 0.0) {
        total += cfg.weights.gamma *
                 sim_quantitative(a1.object, a2.object, cfg, a1.predicate.label);
    }
    return clamp01(total / 3.0);
}

AlignedPairs align_triples(const TripleSet& g1, const TripleSet& g2) {
    std::map<std::string_view, std::pair<std::vector<const Triple*>, std::vector<const Triple*>>>
        groups;
    for (const Triple& t : g1.triples) groups[t.predicate.label].first.push_back(&t);
    for (const Triple& t : g2.triples) groups[t.predicate.label].second.push_back(&t);

    AlignedPairs out;
    for (const auto& [label, sides] : groups) {
        const auto& [left, right] = sides;
        const std::size_t paired = std::min(left.size(), right.size());
        for (std::size_t i = 0; i < paired; ++i) {
            if (left[i]->object.kind != right[i]->object.kind) {
                out.unmatched_left.push_back(*left[i]);
                out.unmatched_right.push_back(*right[i]);
            } else if (left[i]->object.quantitative()) {
                out.quant_pairs.emplace_back(*left[i], *right[i]);
            } else {
                out.qual_pairs.emplace_back(*left[i], *right[i]);
            }
        }
        for (std::size_t i = paired; i < left.size(); ++i) out.unmatched_left.push_back(*left[i]);
        for (std::size_t i = paired; i < right.size(); ++i) {
            out.unmatched_right.push_back(*right[i]);
        }
    }
    return out;
}

double sim_sets(const TripleSet& g1, const TripleSet& g2, const SimilarityConfig& cfg) {
    if (g1.triples.empty()) throw ModelError("empty triple set '" + g1.label + "'");
    if (g2.triples.empty()) throw ModelError("empty triple set '" + g2.label + "'");

    const AlignedPairs aligned = align_triples(g1, g2);
    double qual_sum = 0.0;
    for (const auto& [left, right] : aligned.qual_pairs) {
        qual_sum += sim_triple_I(left, right, cfg);
    }
    double quant_sum = 0.0;
    for (const auto& [left, right] : aligned.quant_pairs) {
        quant_sum += sim_triple_II(left, right, cfg);
    }

    if (cfg.set_mode == SetMode::Literal) {
        double result = 0.0;
        if (!aligned.qual_pairs.empty()) {
            result += qual_sum / static_cast<double>(aligned.qual_pairs.size());
        }
        if (!aligned.quant_pairs.empty()) {
            result += quant_sum / static_cast<double>(aligned.quant_pairs.size());
        }
        return result;
    }

    const std::size_t denominator = aligned.qual_pairs.size() + aligned.quant_pairs.size() +
                                    aligned.unmatched_left.size() +
                                    aligned.unmatched_right.size();
    return (qual_sum + quant_sum) / static_cast<double>(denominator);
}

SimilarityMatrix similarity_matrix(std::span<const TripleSet> catalog,
                                   const SimilarityConfig& cfg) {
    if (catalog.size() < 2) {
        throw ModelError("similarity matrix needs at least two triple sets");
    }
    SimilarityMatrix matrix;
    matrix.labels.reserve(catalog.size());
    for (const TripleSet& set : catalog) matrix.labels.push_back(set.label);
    matrix.values.resize(catalog.size() * catalog.size());
    for (std::size_t i = 0; i < catalog.size(); ++i) {
        for (std::size_t j = 0; j < catalog.size(); ++j) {
            matrix.values[i * catalog.size() + j] = sim_sets(catalog[i], catalog[j], cfg);
        }
    }
    return matrix;
}

}  // namespace ontosim
