#include "ontosim/listing.hpp"
#include "ontosim/tfidf_model.hpp"
#include "ontosim/vector_model.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>
#include <vector>

using namespace ontosim;

TEST_CASE("identical in-vocabulary words score exactly one") {
    const EmbeddingStore store = test::embeddings_from("1 2\nnoir 0.3 0.7\n");
    CHECK(word_similarity("noir", "noir", store) == 1.0);
}

TEST_CASE("orthogonal vectors score zero") {
    const EmbeddingStore store = test::embeddings_from("2 2\na 1 0\nb 0 1\n");
    CHECK(word_similarity("a", "b", store) == 0.0);
}

TEST_CASE("cosine of (1,1) and (1,0) is sqrt(2)/2") {
    const EmbeddingStore store = test::embeddings_from("2 2\na 1 1\nb 1 0\n");
    CHECK(word_similarity("a", "b", store) == doctest::Approx(0.7071).epsilon(1e-4));
}

TEST_CASE("out-of-vocabulary words fall back to exact matching") {
    const EmbeddingStore store = test::embeddings_from("1 2\nnoir 1 0\n");
    CHECK(word_similarity("xyzzy", "xyzzy", store) == 1.0);
    CHECK(word_similarity("xyzzy", "noir", store) == 0.0);
    CHECK(word_similarity("noir", "xyzzy", store) == 0.0);
    CHECK(word_similarity("xyzzy", "plugh", store) == 0.0);
}

TEST_CASE("negative cosines clamp to zero by default") {
    const EmbeddingStore store = test::embeddings_from("2 2\na 1 0\nb -1 0\n");
    CHECK(word_similarity("a", "b", store) == 0.0);

    WordSimPolicy raw;
    raw.clamp_negative = false;
    CHECK(word_similarity("a", "b", store, raw) == doctest::Approx(-1.0).epsilon(1e-12));
}

TEST_CASE("zero-norm vectors use the exact-match fallback") {
    const EmbeddingStore store = test::embeddings_from("2 2\nz 0 0\nnoir 1 0\n");
    CHECK(word_similarity("z", "noir", store) == 0.0);
    CHECK(word_similarity("z", "z", store) == 1.0);
}

TEST_CASE("similarity is symmetric and bounded over the fixture vocabulary") {
    const EmbeddingStore store = test::load_fixture_embeddings();
    const std::vector<std::string> words = {"diesel",   "essence",  "hybride", "électrique",
                                            "mécanique", "automatique", "noir", "bleu",
                                            "kilométrage", "consommation", "portes", "de"};
    for (const auto& a : words) {
        for (const auto& b : words) {
            const double ab = word_similarity(a, b, store);
            const double ba = word_similarity(b, a, store);
            CAPTURE(a);
            CAPTURE(b);
            CHECK(std::abs(ab - ba) < 1e-12);
            CHECK(ab >= 0.0);
            CHECK(ab <= 1.0);
        }
    }
}

TEST_CASE("fuel words cluster together and apart from transmission words") {
    const EmbeddingStore store = test::load_fixture_embeddings();
    const double close = word_similarity("diesel", "essence", store);
    const double far = word_similarity("diesel", "automatique", store);
    CHECK(close > 0.3);
    CHECK(close < 1.0);
    CHECK(far < close);
}

TEST_CASE("tf-idf rows drive word similarity the same way") {
    const std::vector<TripleSet> sets = {parse_listing("<noir,noir,bleu>", "d1"),
                                         parse_listing("<gris,gris,gris>", "d2")};
    const TfIdfModel model = TfIdfModel::build(sets);
    CHECK(word_similarity("noir", "noir", model) == 1.0);
    // noir's row is (2/3, 0)-shaped and gris's is (0, ...): orthogonal
    CHECK(word_similarity("noir", "gris", model) == 0.0);
    CHECK(word_similarity("noir", "bleu", model) > 0.0);  // both live in d1
    CHECK(word_similarity("rouge", "noir", model) == 0.0);
}
