#include "ontosim/errors.hpp"
#include "ontosim/listing.hpp"

#include "helpers.hpp"

#include <doctest.h>

using namespace ontosim;

TEST_CASE("numeric object labels classify as quantitative") {
    const ObjectValue value = classify_object(tokenize_term("vo:107351"));
    REQUIRE(value.kind == ValueKind::Quantitative);
    CHECK(value.numeric == std::vector<double>{107351.0});
}

TEST_CASE("decimal values classify as a single quantitative token") {
    const ObjectValue value = classify_object(tokenize_term("vo:1.5"));
    REQUIRE(value.kind == ValueKind::Quantitative);
    CHECK(value.numeric == std::vector<double>{1.5});
}

TEST_CASE("words classify as qualitative") {
    CHECK(classify_object(tokenize_term("vo:mécanique")).kind == ValueKind::Qualitative);
}

TEST_CASE("mixed number-word objects stay qualitative") {
    const ObjectValue value = classify_object(tokenize_term("vo:12 mois"));
    CHECK(value.kind == ValueKind::Qualitative);
    CHECK(value.numeric.empty());
}

TEST_CASE("multiple numbers produce a vector in token order") {
    const ObjectValue value = classify_object(tokenize_term("vo:4 2"));
    REQUIRE(value.kind == ValueKind::Quantitative);
    CHECK(value.numeric == std::vector<double>{4.0, 2.0});
}

TEST_CASE("ISO dates become day counts since 1970-01-01") {
    const ObjectValue jan = classify_object(tokenize_term("vo:2022-01-01"));
    REQUIRE(jan.kind == ValueKind::Quantitative);
    CHECK(jan.numeric == std::vector<double>{18993.0});
    CHECK(jan.unit == "days");

    const ObjectValue apr = classify_object(tokenize_term("vo:2022-04-28"));
    CHECK(apr.numeric == std::vector<double>{19110.0});
}

TEST_CASE("calendar-invalid dates fall back to qualitative") {
    CHECK(classify_object(tokenize_term("vo:2022-13-40")).kind == ValueKind::Qualitative);
    CHECK(classify_object(tokenize_term("vo:2021-02-29")).kind == ValueKind::Qualitative);
}

TEST_CASE("classification is total and deterministic") {
    for (const char* raw : {"vo:abc", "vo:3", "vo:", "vo:12 mois", "vo:2022-01-01"}) {
        const ObjectValue a = classify_object(tokenize_term(raw));
        const ObjectValue b = classify_object(tokenize_term(raw));
        CHECK(a == b);
    }
}

TEST_CASE("parse_listing reads one triple per line") {
    const TripleSet set = parse_listing("<vo:RC2,vo:kilométrage,vo:5493>", "test");
    REQUIRE(set.triples.size() == 1);
    const Triple& t = set.triples.front();
    CHECK(t.subject.raw == "vo:RC2");
    CHECK(t.predicate.label == "kilométrage");
    REQUIRE(t.object.kind == ValueKind::Quantitative);
    CHECK(t.object.numeric == std::vector<double>{5493.0});
}

TEST_CASE("objects may contain commas beyond the first two") {
    const TripleSet set =
        parse_listing("<vo:RC2,vo:type de véhicule,vo:4x4, SUV & Crossover occasion>", "test");
    REQUIRE(set.triples.size() == 1);
    CHECK(set.triples.front().object.term.label == "4x4, SUV & Crossover occasion");
    CHECK(set.triples.front().object.kind == ValueKind::Qualitative);
}

TEST_CASE("blank lines and comments are skipped") {
    const TripleSet set = parse_listing("\n# header comment\n<a,b,c>\n\n<d,e,f>\n", "test");
    CHECK(set.triples.size() == 2);
}

TEST_CASE("empty documents are an error") {
    CHECK_THROWS_WITH_AS(parse_listing("", "test"), doctest::Contains("no triples"),
                         ParseError);
    CHECK_THROWS_AS(parse_listing("# only a comment\n", "test"), ParseError);
}

TEST_CASE("malformed lines report their line number") {
    CHECK_THROWS_WITH_AS(parse_listing("<a,b,c>\nbroken line", "test"),
                         doctest::Contains("line 2"), ParseError);
    CHECK_THROWS_AS(parse_listing("<a,b>", "test"), ParseError);
    CHECK_THROWS_AS(parse_listing("<a;b;c>", "test"), ParseError);
}

TEST_CASE("fixture corpus has the expected shape") {
    const auto sets = test::load_vehicles();
    const std::size_t expected_counts[] = {20, 20, 21, 22, 21};
    const std::size_t expected_qual[] = {9, 11, 10, 11, 10};
    for (std::size_t i = 0; i < sets.size(); ++i) {
        CAPTURE(sets[i].label);
        CHECK(sets[i].triples.size() == expected_counts[i]);
        CHECK(sets[i].qualitative_count() == expected_qual[i]);
        CHECK(sets[i].quantitative_count() == expected_counts[i] - expected_qual[i]);
    }
}

TEST_CASE("serialize and reparse round-trips every fixture") {
    for (const TripleSet& set : test::load_vehicles()) {
        const TripleSet again = parse_listing(serialize_listing(set), set.label);
        REQUIRE(again.triples.size() == set.triples.size());
        for (std::size_t i = 0; i < set.triples.size(); ++i) {
            CHECK(again.triples[i] == set.triples[i]);
        }
    }
}

TEST_CASE("file labels default to the stem and accept overrides") {
    const auto path = test::vehicles_dir() / "v1.triples";
    CHECK(load_listing_file(path).label == "v1");
    CHECK(load_listing_file(path, "renault").label == "renault");
}

TEST_CASE("missing files raise an io error") {
    CHECK_THROWS_AS(load_listing_file(test::vehicles_dir() / "missing.triples"),
                    IoError);
}
