#include "ontosim/errors.hpp"
#include "ontosim/listing.hpp"
#include "ontosim/similarity.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <cmath>

using namespace ontosim;

namespace {

Triple make_triple(const std::string& s, const std::string& p, const std::string& o) {
    return {tokenize_term(s), tokenize_term(p), classify_object(tokenize_term(o))};
}

// a and b have cosine 0.5; c is orthogonal to a.
const char* kAngles = "3 2\na 1 0\nb 0.5 0.8660254037844386\nc 0 1\n";

}  // namespace

TEST_CASE("weights validate the sum-to-three constraint") {
    CHECK_NOTHROW(Weights::of(1.0, 1.0, 1.0));
    CHECK_NOTHROW(Weights::of(0.0, 1.5, 1.5));
    CHECK_THROWS_AS(Weights::of(1.0, 1.0, 2.0), ModelError);
    CHECK_THROWS_AS(Weights::of(-1.0, 2.0, 2.0), ModelError);
    const Weights w = Weights{2.0, 2.0, 2.0}.normalized();
    CHECK(w.alpha == doctest::Approx(1.0).epsilon(1e-12));
    CHECK(w.sum() == doctest::Approx(3.0).epsilon(1e-12));
    CHECK_THROWS_AS((Weights{0.0, 0.0, 0.0}.normalized()), ModelError);
}

TEST_CASE("sim_word_term takes the best token match") {
    const EmbeddingStore store =
        test::embeddings_from("3 2\nm 1 0\nt1 0.3 0.9539392014169456\nt2 0.8 0.6\n");
    const SimilarityConfig cfg = test::config_with(store);
    const Term term = tokenize_term("t1 t2");
    CHECK(sim_word_term("m", term, cfg) == doctest::Approx(0.8).epsilon(1e-12));
    CHECK(sim_word_term("m", tokenize_term("m x"), cfg) == 1.0);
    CHECK(sim_word_term("zz", tokenize_term("t1 t2"), cfg) == 0.0);
    CHECK_THROWS_AS(sim_word_term("m", tokenize_term("&&"), cfg), ModelError);
}

TEST_CASE("sim_qualitative is the mean of the bidirectional maxima") {
    const EmbeddingStore store = test::embeddings_from(kAngles);
    const SimilarityConfig cfg = test::config_with(store);
    SUBCASE("identical terms score one") {
        CHECK(sim_qualitative(tokenize_term("a b"), tokenize_term("a b"), cfg) == 1.0);
    }
    SUBCASE("one shared word plus a cosine-0.5 pair") {
        const double sim = sim_qualitative(tokenize_term("a"), tokenize_term("a b"), cfg);
        CHECK(sim == doctest::Approx(5.0 / 6.0).epsilon(1e-12));
    }
    SUBCASE("fully out-of-vocabulary disjoint terms score zero") {
        CHECK(sim_qualitative(tokenize_term("xx yy"), tokenize_term("zz"), cfg) == 0.0);
    }
    SUBCASE("empty terms are an error") {
        CHECK_THROWS_AS(sim_qualitative(tokenize_term(""), tokenize_term("a"), cfg),
                        ModelError);
    }
    SUBCASE("argument order does not matter") {
        const Term t1 = tokenize_term("a c");
        const Term t2 = tokenize_term("b");
        CHECK(std::abs(sim_qualitative(t1, t2, cfg) - sim_qualitative(t2, t1, cfg)) < 1e-15);
    }
}

TEST_CASE("sim_quantitative follows 1/(1+distance)") {
    const SimilarityConfig cfg;
    const auto five = classify_object(tokenize_term("5"));
    const auto four = classify_object(tokenize_term("4"));
    CHECK(sim_quantitative(five, five, cfg) == 1.0);
    CHECK(sim_quantitative(five, four, cfg) == doctest::Approx(0.5).epsilon(1e-12));

    const auto v03 = classify_object(tokenize_term("0 3"));
    const auto v40 = classify_object(tokenize_term("4 0"));
    CHECK(sim_quantitative(v03, v40, cfg) == doctest::Approx(1.0 / 6.0).epsilon(1e-12));

    CHECK_THROWS_WITH_AS(sim_quantitative(five, v03, cfg, "price"),
                         doctest::Contains("price"), ModelError);
    CHECK_THROWS_AS(sim_quantitative(five, classify_object(tokenize_term("abc")), cfg),
                    ModelError);
}

TEST_CASE("min-max numeric mode rescales by the per-predicate corpus range") {
    const std::vector<TripleSet> corpus = {
        parse_listing("<x,kil,0>\n<x,price,100>", "a"),
        parse_listing("<y,kil,10>\n<y,price,300>", "b"),
    };
    const NumericScaler scaler = NumericScaler::fit(corpus);

    SimilarityConfig cfg;
    cfg.numeric_mode = NumericMode::MinMaxPerPredicate;
    cfg.scaler = &scaler;

    const auto five = classify_object(tokenize_term("5"));
    const auto four = classify_object(tokenize_term("4"));
    // kil spans [0,10], so 5 and 4 land at 0.5 and 0.4
    CHECK(sim_quantitative(five, four, cfg, "kil") ==
          doctest::Approx(1.0 / 1.1).epsilon(1e-12));
    // unknown predicates pass through unscaled
    CHECK(sim_quantitative(five, four, cfg, "unknown") ==
          doctest::Approx(0.5).epsilon(1e-12));
    CHECK_THROWS_AS(sim_quantitative(five, four, SimilarityConfig{
        Weights{}, WordSimPolicy{}, AlignmentMode::ByPredicate, SetMode::Normalized,
        NumericMode::MinMaxPerPredicate, nullptr, nullptr}, "kil"), ModelError);
}

TEST_CASE("degenerate ranges collapse to zero on both sides") {
    const std::vector<TripleSet> corpus = {parse_listing("<x,kil,7>", "a"),
                                           parse_listing("<y,kil,7>", "b")};
    const NumericScaler scaler = NumericScaler::fit(corpus);
    SimilarityConfig cfg;
    cfg.numeric_mode = NumericMode::MinMaxPerPredicate;
    cfg.scaler = &scaler;
    const auto seven = classify_object(tokenize_term("7"));
    CHECK(sim_quantitative(seven, seven, cfg, "kil") == 1.0);
}

TEST_CASE("sim_triple_I is the weighted component mean") {
    const EmbeddingStore store = test::embeddings_from(kAngles);
    SimilarityConfig cfg = test::config_with(store);

    SUBCASE("component sims (1, 1, 0.5) with unit weights") {
        const Triple left = make_triple("a", "a", "a");
        const Triple right = make_triple("a", "a", "b");
        CHECK(sim_triple_I(left, right, cfg) == doctest::Approx(5.0 / 6.0).epsilon(1e-9));
        CHECK(sim_triple_I(left, right, cfg) == doctest::Approx(0.833333).epsilon(1e-6));
    }
    SUBCASE("identical triples score one") {
        const Triple t = make_triple("vo:s", "vo:p", "vo:o");
        CHECK(sim_triple_I(t, t, cfg) == 1.0);
    }
    SUBCASE("zeroed subject weight ignores the subjects entirely") {
        cfg.weights = Weights{0.0, 1.5, 1.5};
        const Triple left = make_triple("anything", "a", "b");
        const Triple right = make_triple("else", "a", "b");
        CHECK(sim_triple_I(left, right, cfg) == 1.0);
    }
    SUBCASE("equal component sims reproduce themselves under any valid weights") {
        const Triple left = make_triple("a", "a", "a");
        const Triple right = make_triple("b", "b", "b");
        for (const Weights& w :
             {Weights{1.0, 1.0, 1.0}, Weights{0.5, 1.5, 1.0}, Weights{2.0, 0.5, 0.5}}) {
            cfg.weights = w;
            CHECK(sim_triple_I(left, right, cfg) == doctest::Approx(0.5).epsilon(1e-12));
        }
    }
    SUBCASE("quantitative objects are rejected") {
        CHECK_THROWS_AS(
            sim_triple_I(make_triple("a", "a", "5"), make_triple("a", "a", "4"), cfg),
            ModelError);
    }
    SUBCASE("invalid weights are rejected") {
        cfg.weights = Weights{1.0, 1.0, 2.0};
        CHECK_THROWS_AS(
            sim_triple_I(make_triple("a", "a", "a"), make_triple("a", "a", "b"), cfg),
            ModelError);
    }
}

TEST_CASE("sim_triple_II mixes term sims with the numeric similarity") {
    const EmbeddingStore store = test::embeddings_from(kAngles);
    SimilarityConfig cfg = test::config_with(store);

    SUBCASE("matching kilometrage example") {
        const Triple left = make_triple("vo:C1", "a_le_kilométrage", "107351");
        const Triple right = make_triple("vo:C1", "a_le_kilométrage", "25040");
        const double sim = sim_triple_II(left, right, cfg);
        const double expected = (1.0 + 1.0 + 1.0 / (1.0 + 82311.0)) / 3.0;
        CHECK(sim == doctest::Approx(expected).epsilon(1e-12));
        CHECK(sim == doctest::Approx(0.6667).epsilon(1e-4));
    }
    SUBCASE("identical triples score one") {
        const Triple t = make_triple("vo:s", "vo:p", "42");
        CHECK(sim_triple_II(t, t, cfg) == 1.0);
    }
    SUBCASE("qualitative objects are rejected") {
        CHECK_THROWS_AS(
            sim_triple_II(make_triple("a", "a", "x"), make_triple("a", "a", "4"), cfg),
            ModelError);
    }
}

TEST_CASE("triple similarities stay within [0,1] and symmetric on fixtures") {
    const EmbeddingStore store = test::load_fixture_embeddings();
    const SimilarityConfig cfg = test::config_with(store);
    const auto sets = test::load_vehicles();
    for (const Triple& a : sets[0].triples) {
        for (const Triple& b : sets[2].triples) {
            if (a.object.quantitative() != b.object.quantitative()) continue;
            if (a.object.quantitative() &&
                a.object.numeric.size() != b.object.numeric.size()) {
                continue;
            }
            const double ab = a.object.quantitative() ? sim_triple_II(a, b, cfg)
                                                      : sim_triple_I(a, b, cfg);
            const double ba = a.object.quantitative() ? sim_triple_II(b, a, cfg)
                                                      : sim_triple_I(b, a, cfg);
            CHECK(ab >= 0.0);
            CHECK(ab <= 1.0);
            CHECK(std::abs(ab - ba) < 1e-12);
        }
    }
}
