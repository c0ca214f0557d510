#pragma once

#include "ontosim/embedding_store.hpp"
#include "ontosim/listing.hpp"
#include "ontosim/similarity.hpp"

#include <filesystem>
#include <sstream>
#include <string>
#include <vector>

namespace ontosim::test {

inline std::filesystem::path fixture_dir() {
    return std::filesystem::path(ONTOSIM_FIXTURE_DIR);
}

inline std::filesystem::path vehicles_dir() {
    return fixture_dir() / "vehicles";
}

inline std::filesystem::path embedding_path() {
    return fixture_dir() / "embeddings" / "vehicles_fr_8d.vec";
}

inline std::vector<TripleSet> load_vehicles() {
    std::vector<TripleSet> sets;
    for (const char* name : {"v1", "v2", "v3", "v4", "v5"}) {
        sets.push_back(load_listing_file(vehicles_dir() / (std::string(name) + ".triples")));
    }
    return sets;
}

inline EmbeddingStore load_fixture_embeddings() {
    return EmbeddingStore::load(embedding_path());
}

// An embedding store built from an inline text body (header included).
inline EmbeddingStore embeddings_from(const std::string& body) {
    std::istringstream in(body);
    return EmbeddingStore::parse(in, "<inline>");
}

inline SimilarityConfig config_with(const VectorModel& model) {
    SimilarityConfig cfg;
    cfg.model = &model;
    return cfg;
}

}  // namespace ontosim::test
