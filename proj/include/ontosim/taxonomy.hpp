#pragma once

#include <map>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace ontosim {

// A concept hierarchy over is-a edges. Ancestor sets are reflexive and
// transitive: T(c) contains c itself plus every concept reachable through
// superclass links. The graph stays acyclic by construction.
class Taxonomy {
public:
    void add_concept(const std::string& concept_name);

    // Adds child is-a parent, registering both concepts. Rejects edges that
    // would close a cycle.
    void add_subclass_of(const std::string& child, const std::string& parent);

    bool contains(std::string_view concept_name) const;

    std::set<std::string> ancestors(std::string_view concept_name) const;

private:
    std::map<std::string, std::vector<std::string>, std::less<>> parents_;
};

// Feature-set similarity over the two ancestor sets:
//   -log2((|T1 union T2| - |T1 intersect T2|) / |T1 union T2|)
// Identical ancestor sets would be infinite, so they score `ceiling`.
double taxonomy_similarity(std::string_view c1, std::string_view c2, const Taxonomy& taxonomy,
                        double ceiling = 10.0);

}  // namespace ontosim
