#include "ontosim/recommender.hpp"

#include "ontosim/errors.hpp"
#include "ontosim/listing.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>

#include <fcntl.h>
#include <unistd.h>

namespace ontosim {
namespace {

namespace fs = std::filesystem;

std::string render_timestamp(std::chrono::sys_seconds ts) {
    const auto days = std::chrono::floor<std::chrono::days>(ts);
    const std::chrono::year_month_day ymd{days};
    const std::chrono::hh_mm_ss hms{ts - days};
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%04d-%02u-%02uT%02d:%02d:%02dZ",
                  static_cast<int>(ymd.year()), static_cast<unsigned>(ymd.month()),
                  static_cast<unsigned>(ymd.day()), static_cast<int>(hms.hours().count()),
                  static_cast<int>(hms.minutes().count()),
                  static_cast<int>(hms.seconds().count()));
    return buffer;
}

std::optional<std::chrono::sys_seconds> parse_timestamp(std::string_view text) {
    int y = 0, mo = 0, d = 0, h = 0, mi = 0, s = 0;
    if (text.size() != 20 ||
        std::sscanf(std::string(text).c_str(), "%4d-%2d-%2dT%2d:%2d:%2dZ", &y, &mo, &d, &h, &mi,
                    &s) != 6) {
        return std::nullopt;
    }
    const std::chrono::year_month_day ymd{std::chrono::year{y},
                                          std::chrono::month{static_cast<unsigned>(mo)},
                                          std::chrono::day{static_cast<unsigned>(d)}};
    if (!ymd.ok() || h < 0 || h > 23 || mi < 0 || mi > 59 || s < 0 || s > 60) {
        return std::nullopt;
    }
    return std::chrono::sys_days{ymd} + std::chrono::hours{h} + std::chrono::minutes{mi} +
           std::chrono::seconds{s};
}

void require_clean_field(std::string_view value, const char* role) {
    if (value.find('\t') != std::string_view::npos ||
        value.find('\n') != std::string_view::npos) {
        throw ModelError(std::string("interaction ") + role +
                         " must not contain tabs or newlines");
    }
}

}  // namespace

ItemCatalog ItemCatalog::load(const fs::path& directory) {
    std::error_code ec;
    if (!fs::is_directory(directory, ec)) {
        throw IoError("catalog path is not a directory: " + directory.string());
    }
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(directory)) {
        if (entry.is_regular_file() && entry.path().extension() == ".triples") {
            files.push_back(entry.path());
        }
    }
    if (files.empty()) {
        throw ModelError("no *.triples files in directory: " + directory.string());
    }
    std::sort(files.begin(), files.end());

    ItemCatalog catalog;
    for (const fs::path& file : files) {
        try {
            catalog.add(load_listing_file(file));
        } catch (const ParseError& e) {
            throw ParseError(file.string() + ": " + e.what());
        }
        catalog.sources_.push_back(file);
    }
    return catalog;
}

void ItemCatalog::add(TripleSet item) {
    const auto pos = std::lower_bound(
        items_.begin(), items_.end(), item.label,
        [](const TripleSet& s, const std::string& label) { return s.label < label; });
    if (pos != items_.end() && pos->label == item.label) {
        throw ModelError("duplicate item label '" + item.label + "'");
    }
    items_.insert(pos, std::move(item));
}

const TripleSet* ItemCatalog::find(std::string_view label) const {
    const auto pos = std::lower_bound(
        items_.begin(), items_.end(), label,
        [](const TripleSet& s, std::string_view l) { return s.label < l; });
    return pos != items_.end() && pos->label == label ? &*pos : nullptr;
}

RankedList rank_items(const UserProfile& profile, const ItemCatalog& catalog,
                      const SimilarityConfig& cfg, std::size_t k) {
    if (profile.preferences.triples.empty()) {
        throw ModelError("user profile '" + profile.user_id + "' has no preference triples");
    }
    if (catalog.size() == 0) {
        throw ModelError("cannot rank over an empty catalog");
    }
    if (k == 0) {
        throw ModelError("k must be at least 1");
    }

    RankedList ranked;
    ranked.entries.reserve(catalog.size());
    for (const TripleSet& item : catalog.items()) {
        ranked.entries.push_back({item.label, sim_sets(profile.preferences, item, cfg)});
    }
    // Items arrive label-sorted, so a stable sort on score alone leaves ties
    // in ascending label order.
    std::stable_sort(ranked.entries.begin(), ranked.entries.end(),
                     [](const ScoredItem& a, const ScoredItem& b) { return a.score > b.score; });
    if (ranked.entries.size() > k) ranked.entries.resize(k);
    return ranked;
}

InteractionLog::InteractionLog(fs::path path) : path_(std::move(path)) {
    std::ifstream in(path_, std::ios::binary);
    if (!in) return;  // fresh log
    std::string line;
    std::string last_line;
    while (std::getline(in, line)) {
        if (!line.empty()) last_line = line;
    }
    if (last_line.empty()) return;
    const auto tab = last_line.find('\t');
    const auto ts = parse_timestamp(last_line.substr(0, tab));
    if (!ts) {
        throw ParseError("interaction log " + path_.string() +
                         ": cannot parse timestamp of last record");
    }
    last_timestamp_ = *ts;
}

std::string InteractionLog::format_line(const InteractionEvent& event) {
    require_clean_field(event.user_id, "user id");
    require_clean_field(event.item_label, "item label");
    if (event.user_id.empty()) throw ModelError("interaction user id must not be empty");
    if (event.item_label.empty()) throw ModelError("interaction item label must not be empty");

    std::string kind;
    switch (event.kind) {
        case InteractionKind::Rating: {
            if (!event.rating.has_value()) {
                throw ModelError("rating interaction requires a rating value");
            }
            char buffer[32];
            std::snprintf(buffer, sizeof(buffer), "%g", *event.rating);
            kind = std::string("rating:") + buffer;
            break;
        }
        case InteractionKind::Comment:
            require_clean_field(event.comment, "comment");
            kind = "comment:" + event.comment;
            break;
        case InteractionKind::Favorite:
            kind = "favorite";
            break;
    }

    std::string context;
    for (const auto& [key, value] : event.context) {
        require_clean_field(key, "context key");
        require_clean_field(value, "context value");
        if (key.empty() || key.find('=') != std::string::npos ||
            key.find(';') != std::string::npos || value.find('=') != std::string::npos ||
            value.find(';') != std::string::npos) {
            throw ModelError("interaction context keys and values must be non-empty and free "
                             "of '=' and ';'");
        }
        if (!context.empty()) context += ';';
        context += key;
        context += '=';
        context += value;
    }

    return render_timestamp(event.timestamp) + "\t" + event.user_id + "\t" + event.item_label +
           "\t" + kind + "\t" + context + "\n";
}

void InteractionLog::record(const InteractionEvent& event) {
    if (last_timestamp_ && event.timestamp < *last_timestamp_) {
        throw ModelError("interaction timestamp precedes the last logged event");
    }
    const std::string line = format_line(event);

    const int fd = ::open(path_.c_str(), O_WRONLY | O_APPEND | O_CREAT, 0644);
    if (fd < 0) {
        throw IoError("cannot open interaction log for append: " + path_.string());
    }
    std::size_t written = 0;
    while (written < line.size()) {
        const ssize_t n = ::write(fd, line.data() + written, line.size() - written);
        if (n < 0) {
            ::close(fd);
            throw IoError("write to interaction log failed: " + path_.string());
        }
        written += static_cast<std::size_t>(n);
    }
    if (::fsync(fd) != 0) {
        ::close(fd);
        throw IoError("fsync of interaction log failed: " + path_.string());
    }
    ::close(fd);

    last_timestamp_ = event.timestamp;
    ++lines_written_;
}

}  // namespace ontosim
