#pragma once

#include "ontosim/vector_model.hpp"

#include <cstddef>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <unordered_map>

namespace ontosim {

// Pre-trained word vectors read from the plain-text format: a first line
// `<vocab_count> <dimension>`, then one `word c1 .. c(dimension)` row per
// word. Duplicate words keep their first occurrence.
class EmbeddingStore final : public VectorModel {
public:
    static EmbeddingStore load(const std::filesystem::path& path);
    static EmbeddingStore parse(std::istream& in, const std::string& source_name);

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return entries_.size(); }

    const std::vector<double>* vector_of(std::string_view word) const override;
    std::string backend_name() const override { return "embedding"; }

private:
    struct TransparentHash {
        using is_transparent = void;
        std::size_t operator()(std::string_view sv) const {
            return std::hash<std::string_view>{}(sv);
        }
    };

    std::size_t dimension_ = 0;
    std::unordered_map<std::string, std::vector<double>, TransparentHash, std::equal_to<>> entries_;
};

}  // namespace ontosim
