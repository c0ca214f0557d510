#pragma once

#include "ontosim/similarity.hpp"
#include "ontosim/triple.hpp"

#include <chrono>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ontosim {

struct UserProfile {
    std::string user_id;
    TripleSet preferences;
};

// Label-sorted, immutable-after-load collection of item descriptions.
// Sorting by label makes every downstream result independent of the order
// items were added or enumerated on disk.
class ItemCatalog {
public:
    // Loads every *.triples file in the directory; labels come from file stems.
    static ItemCatalog load(const std::filesystem::path& directory);

    void add(TripleSet item);

    const std::vector<TripleSet>& items() const { return items_; }
    const TripleSet* find(std::string_view label) const;
    std::size_t size() const { return items_.size(); }
    const std::vector<std::filesystem::path>& sources() const { return sources_; }

private:
    std::vector<TripleSet> items_;
    std::vector<std::filesystem::path> sources_;
};

struct ScoredItem {
    std::string label;
    double score;

    friend bool operator==(const ScoredItem&, const ScoredItem&) = default;
};

// Scores descending; equal scores ordered by ascending label.
struct RankedList {
    std::vector<ScoredItem> entries;
};

// Scores every catalog item against the profile and returns the top k.
// A k beyond the catalog size returns the full ranking.
RankedList rank_items(const UserProfile& profile, const ItemCatalog& catalog,
                      const SimilarityConfig& cfg, std::size_t k);

enum class InteractionKind { Rating, Comment, Favorite };

struct InteractionEvent {
    std::chrono::sys_seconds timestamp;
    std::string user_id;
    std::string item_label;
    InteractionKind kind = InteractionKind::Favorite;
    std::optional<double> rating;  // Rating events only
    std::string comment;           // Comment events only
    std::vector<std::pair<std::string, std::string>> context;
};

// Append-only event log, one line per event:
//   timestamp<TAB>user_id<TAB>item_label<TAB>kind<TAB>key=value;key=value
// Lines are flushed to disk before record() returns, and timestamps must
// never decrease within one file.
class InteractionLog {
public:
    explicit InteractionLog(std::filesystem::path path);

    void record(const InteractionEvent& event);

    std::size_t lines_written() const { return lines_written_; }
    const std::filesystem::path& path() const { return path_; }

    static std::string format_line(const InteractionEvent& event);

private:
    std::filesystem::path path_;
    std::optional<std::chrono::sys_seconds> last_timestamp_;
    std::size_t lines_written_ = 0;
};

}  // namespace ontosim
