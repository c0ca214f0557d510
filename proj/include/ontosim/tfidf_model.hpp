#pragma once

#include "ontosim/triple.hpp"
#include "ontosim/vector_model.hpp"

#include <cstddef>
#include <map>
#include <span>
#include <vector>

namespace ontosim {

// Corpus-fitted TF-IDF: one document per TripleSet (the multiset of tokens
// from its subjects, predicates, and qualitative objects), one row per
// vocabulary word with components tf(word, doc) * idf(word) across the
// documents in corpus order. idf uses the natural log plus one, so it never
// drops below 1.
class TfIdfModel final : public VectorModel {
public:
    static TfIdfModel build(std::span<const TripleSet> corpus);

    std::size_t document_count() const { return totals_.size(); }
    std::size_t vocabulary_size() const { return rows_.size(); }

    // Number of documents containing the word; 0 when out of vocabulary.
    std::size_t document_frequency(std::string_view word) const;

    // Relative frequency of the word within one document; 0 when absent.
    double term_frequency(std::string_view word, std::size_t doc) const;

    double inverse_document_frequency(std::string_view word) const;

    const std::vector<double>* vector_of(std::string_view word) const override;
    std::string backend_name() const override { return "tfidf"; }

private:
    std::map<std::string, std::vector<std::size_t>, std::less<>> counts_;
    std::map<std::string, std::vector<double>, std::less<>> rows_;
    std::vector<std::size_t> totals_;  // token count per document
};

}  // namespace ontosim
