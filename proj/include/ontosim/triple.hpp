#pragma once

#include "ontosim/term.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ontosim {

enum class ValueKind { Qualitative, Quantitative };

// A triple object: always carries its Term, plus a finite numeric payload
// when the text is a list of plain numbers or an ISO date. The unit is an
// annotation only ("days" for dates) and never enters any comparison.
struct ObjectValue {
    ValueKind kind = ValueKind::Qualitative;
    Term term;
    std::vector<double> numeric;  // non-empty iff kind == Quantitative
    std::string unit;

    bool quantitative() const { return kind == ValueKind::Quantitative; }

    friend bool operator==(const ObjectValue&, const ObjectValue&) = default;
};

struct Triple {
    Term subject;
    Term predicate;
    ObjectValue object;

    friend bool operator==(const Triple&, const Triple&) = default;
};

// An item or profile description: a label plus its triples in source order.
struct TripleSet {
    std::string label;
    std::vector<Triple> triples;

    std::size_t qualitative_count() const;   // L
    std::size_t quantitative_count() const;  // H
};

// Total classification of an object term. All tokens numeric -> Quantitative
// with the values in token order; a single YYYY-MM-DD token -> Quantitative
// scalar counting days since 1970-01-01; anything else -> Qualitative.
ObjectValue classify_object(Term term);

}  // namespace ontosim
