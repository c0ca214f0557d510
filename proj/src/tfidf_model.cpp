#include "ontosim/tfidf_model.hpp"

#include "ontosim/errors.hpp"

#include <algorithm>
#include <cmath>

namespace ontosim {

TfIdfModel TfIdfModel::build(std::span<const TripleSet> corpus) {
    if (corpus.empty()) {
        throw ModelError("tf-idf corpus is empty");
    }

    TfIdfModel model;
    const std::size_t documents = corpus.size();
    model.totals_.assign(documents, 0);

    for (std::size_t d = 0; d < documents; ++d) {
        const auto count = [&](const Term& term) {
            for (const std::string& token : term.tokens) {
                auto [it, inserted] = model.counts_.try_emplace(token);
                if (inserted) it->second.assign(documents, 0);
                ++it->second[d];
                ++model.totals_[d];
            }
        };
        for (const Triple& triple : corpus[d].triples) {
            count(triple.subject);
            count(triple.predicate);
            if (!triple.object.quantitative()) count(triple.object.term);
        }
        if (model.totals_[d] == 0) {
            throw ModelError("triple set '" + corpus[d].label + "' contributes no tokens");
        }
    }

    for (const auto& [word, counts] : model.counts_) {
        const auto df = static_cast<std::size_t>(
            std::count_if(counts.begin(), counts.end(), [](std::size_t c) { return c > 0; }));
        const double idf =
            std::log(static_cast<double>(documents) / static_cast<double>(df)) + 1.0;
        std::vector<double> row(documents, 0.0);
        for (std::size_t d = 0; d < documents; ++d) {
            const double tf =
                static_cast<double>(counts[d]) / static_cast<double>(model.totals_[d]);
            row[d] = tf * idf;
        }
        model.rows_.emplace(word, std::move(row));
    }
    return model;
}

std::size_t TfIdfModel::document_frequency(std::string_view word) const {
    const auto it = counts_.find(word);
    if (it == counts_.end()) return 0;
    return static_cast<std::size_t>(
        std::count_if(it->second.begin(), it->second.end(), [](std::size_t c) { return c > 0; }));
}

double TfIdfModel::term_frequency(std::string_view word, std::size_t doc) const {
    if (doc >= totals_.size()) {
        throw ModelError("document index out of range");
    }
    const auto it = counts_.find(word);
    if (it == counts_.end()) return 0.0;
    return static_cast<double>(it->second[doc]) / static_cast<double>(totals_[doc]);
}

double TfIdfModel::inverse_document_frequency(std::string_view word) const {
    const std::size_t df = document_frequency(word);
    if (df == 0) {
        throw ModelError("word '" + std::string(word) + "' is not in the tf-idf vocabulary");
    }
    return std::log(static_cast<double>(document_count()) / static_cast<double>(df)) + 1.0;
}

const std::vector<double>* TfIdfModel::vector_of(std::string_view word) const {
    const auto it = rows_.find(word);
    return it == rows_.end() ? nullptr : &it->second;
}

}  // namespace ontosim
