#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace ontosim {

// Word -> real-vector lookup shared by the embedding and TF-IDF backends.
// Implementations are immutable after construction and safe for concurrent
// readers.
class VectorModel {
public:
    virtual ~VectorModel() = default;

    // Returns the stored vector, or nullptr when the word is out of vocabulary.
    virtual const std::vector<double>* vector_of(std::string_view word) const = 0;

    virtual std::string backend_name() const = 0;
};

enum class Backend { Embedding, TfIdf };

// Policy knobs for word-level similarity: which backend a run uses and
// whether negative cosines are clamped to zero.
struct WordSimPolicy {
    Backend backend = Backend::Embedding;
    bool clamp_negative = true;
};

// Cosine similarity between two words under the given model. Byte-identical
// words score 1 outright. When either word lacks a vector, or a stored
// vector has zero norm, the result falls back to exact-match: 1 for equal
// strings, 0 otherwise. Negative cosines clamp to 0 unless disabled.
double word_similarity(std::string_view m1, std::string_view m2, const VectorModel& model,
                       const WordSimPolicy& policy = {});

}  // namespace ontosim
