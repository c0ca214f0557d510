#include "ontosim/vector_model.hpp"

#include <algorithm>
#include <cmath>

namespace ontosim {

double word_similarity(std::string_view m1, std::string_view m2, const VectorModel& model,
                       const WordSimPolicy& policy) {
    if (m1 == m2) return 1.0;

    const std::vector<double>* v1 = model.vector_of(m1);
    const std::vector<double>* v2 = model.vector_of(m2);
    if (v1 != nullptr && v2 != nullptr) {
        double dot = 0.0;
        double n1 = 0.0;
        double n2 = 0.0;
        const std::size_t common = std::min(v1->size(), v2->size());
        for (std::size_t i = 0; i < common; ++i) {
            dot += (*v1)[i] * (*v2)[i];
            n1 += (*v1)[i] * (*v1)[i];
            n2 += (*v2)[i] * (*v2)[i];
        }
        for (std::size_t i = common; i < v1->size(); ++i) n1 += (*v1)[i] * (*v1)[i];
        for (std::size_t i = common; i < v2->size(); ++i) n2 += (*v2)[i] * (*v2)[i];
        if (n1 > 0.0 && n2 > 0.0) {
            double cosine = dot / (std::sqrt(n1) * std::sqrt(n2));
            if (policy.clamp_negative && cosine < 0.0) cosine = 0.0;
            return std::min(cosine, 1.0);
        }
    }
    return 0.0;
}

}  // namespace ontosim
