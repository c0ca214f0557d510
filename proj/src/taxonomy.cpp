#include "ontosim/taxonomy.hpp"

#include "ontosim/errors.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>

namespace ontosim {

void Taxonomy::add_concept(const std::string& concept_name) {
    parents_.try_emplace(concept_name);
}

void Taxonomy::add_subclass_of(const std::string& child, const std::string& parent) {
    add_concept(child);
    add_concept(parent);
    if (child == parent || ancestors(parent).count(child) > 0) {
        throw ModelError("subclass edge '" + child + "' -> '" + parent +
                         "' would create a cycle");
    }
    auto& links = parents_.find(child)->second;
    if (std::find(links.begin(), links.end(), parent) == links.end()) {
        links.push_back(parent);
    }
}

bool Taxonomy::contains(std::string_view concept_name) const {
    return parents_.find(concept_name) != parents_.end();
}

std::set<std::string> Taxonomy::ancestors(std::string_view concept_name) const {
    const auto root = parents_.find(concept_name);
    if (root == parents_.end()) {
        throw ModelError("unknown concept '" + std::string(concept_name) + "'");
    }
    std::set<std::string> seen{root->first};
    std::vector<std::string_view> frontier{root->first};
    while (!frontier.empty()) {
        const auto current = parents_.find(frontier.back());
        frontier.pop_back();
        for (const std::string& parent : current->second) {
            if (seen.insert(parent).second) frontier.push_back(parent);
        }
    }
    return seen;
}

double taxonomy_similarity(std::string_view c1, std::string_view c2, const Taxonomy& taxonomy,
                        double ceiling) {
    const std::set<std::string> t1 = taxonomy.ancestors(c1);
    const std::set<std::string> t2 = taxonomy.ancestors(c2);

    std::size_t intersection = 0;
    for (const std::string& c : t1) intersection += t2.count(c);
    const std::size_t unions = t1.size() + t2.size() - intersection;

    if (intersection == unions) return ceiling;
    const double ratio =
        static_cast<double>(unions - intersection) / static_cast<double>(unions);
    return -std::log2(ratio);
}

}  // namespace ontosim
