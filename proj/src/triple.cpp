#include "ontosim/triple.hpp"

#include <algorithm>
#include <charconv>
#include <chrono>
#include <cmath>
#include <optional>

namespace ontosim {
namespace {

// Accepts exactly the shape <digits> or <digits>.<digits>; this keeps
// exponents, signs, "inf", and "nan" out of the quantitative path.
bool numeric_token(std::string_view token) {
    std::size_t i = 0;
    const auto digits = [&] {
        const std::size_t start = i;
        while (i < token.size() && token[i] >= '0' && token[i] <= '9') ++i;
        return i > start;
    };
    if (!digits()) return false;
    if (i < token.size() && token[i] == '.') {
        ++i;
        if (!digits()) return false;
    }
    return i == token.size();
}

std::optional<double> parse_number(std::string_view token) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc{} || ptr != token.data() + token.size() || !std::isfinite(value)) {
        return std::nullopt;
    }
    return value;
}

// YYYY-MM-DD -> days since 1970-01-01, rejecting calendar-invalid dates.
std::optional<double> date_day_count(std::string_view token) {
    if (token.size() != 10 || token[4] != '-' || token[7] != '-') return std::nullopt;
    for (std::size_t i : {0u, 1u, 2u, 3u, 5u, 6u, 8u, 9u}) {
        if (token[i] < '0' || token[i] > '9') return std::nullopt;
    }
    const auto field = [&](std::size_t pos, std::size_t len) {
        int v = 0;
        std::from_chars(token.data() + pos, token.data() + pos + len, v);
        return v;
    };
    const std::chrono::year_month_day ymd{std::chrono::year{field(0, 4)},
                                          std::chrono::month{static_cast<unsigned>(field(5, 2))},
                                          std::chrono::day{static_cast<unsigned>(field(8, 2))}};
    if (!ymd.ok()) return std::nullopt;
    return static_cast<double>(std::chrono::sys_days{ymd}.time_since_epoch().count());
}

}  // namespace

std::size_t TripleSet::qualitative_count() const {
    return static_cast<std::size_t>(
        std::count_if(triples.begin(), triples.end(),
                      [](const Triple& t) { return !t.object.quantitative(); }));
}

std::size_t TripleSet::quantitative_count() const {
    return triples.size() - qualitative_count();
}

ObjectValue classify_object(Term term) {
    ObjectValue value;
    value.term = std::move(term);

    const auto& tokens = value.term.tokens;
    if (tokens.size() == 1) {
        if (const auto days = date_day_count(tokens.front())) {
            value.kind = ValueKind::Quantitative;
            value.numeric = {*days};
            value.unit = "days";
            return value;
        }
    }
    if (!tokens.empty() &&
        std::all_of(tokens.begin(), tokens.end(),
                    [](const std::string& t) { return numeric_token(t); })) {
        std::vector<double> numbers;
        numbers.reserve(tokens.size());
        for (const auto& token : tokens) {
            const auto number = parse_number(token);
            if (!number) return value;  // out-of-range literal stays qualitative
            numbers.push_back(*number);
        }
        value.kind = ValueKind::Quantitative;
        value.numeric = std::move(numbers);
    }
    return value;
}

}  // namespace ontosim
