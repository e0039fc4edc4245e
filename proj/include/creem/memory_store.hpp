#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "json.hpp"

namespace creem::memstore {

enum class Kind { insight, session_summary, persona_line };
enum class RemovalCause { updated, redundant, carecall_replace, carecall_delete };

std::string to_string(Kind k);
Kind kind_from_string(const std::string& s);
std::string to_string(RemovalCause c);
RemovalCause cause_from_string(const std::string& s);

struct Origin {
    int session = 0;
    int turn = 0;
    bool operator==(const Origin&) const = default;
};

struct Removal {
    RemovalCause cause;
    std::optional<std::int64_t> by_entry;
    Origin at;
};

struct MemoryEntry {
    std::int64_t id = 0;
    std::string owner;
    std::string text;
    Kind kind = Kind::insight;
    Origin origin;
    bool active = true;
    std::optional<Removal> removal;
};

struct MemoryEvent {
    std::int64_t seq = 0;
    std::string op;  // "add" | "remove"
    // add payload
    std::int64_t id = 0;
    std::string owner;
    std::string text;
    Kind kind = Kind::insight;
    Origin origin;
    // remove payload reuses id; cause/by_entry/at below
    std::optional<RemovalCause> cause;
    std::optional<std::int64_t> by_entry;
    Origin at;
};

nlohmann::ordered_json event_to_json(const MemoryEvent& ev);
MemoryEvent event_from_json(const nlohmann::json& j);

// One store per episode. Tombstoning only: removed entries stay in the log
// so session snapshots and removal-cause statistics can be replayed.
class MemoryStore {
public:
    std::int64_t add_entry(const std::string& owner, const std::string& text, Kind kind,
                           Origin origin);
    std::size_t remove_entries(const std::vector<std::int64_t>& ids, RemovalCause cause,
                               std::optional<std::int64_t> by_entry, Origin at);

    std::vector<MemoryEntry> active_entries(
        const std::optional<std::string>& owner = std::nullopt) const;
    std::vector<MemoryEntry> snapshot_at(int session_boundary) const;

    const MemoryEntry& entry(std::int64_t id) const;
    bool has_entry(std::int64_t id) const;
    bool is_active(std::int64_t id) const;

    // Id the next add_entry will assign.
    std::int64_t next_id() const { return max_id_ + 1; }
    int max_session() const { return max_session_; }
    const std::vector<MemoryEvent>& events() const { return events_; }
    std::size_t active_count() const;

    void persist(const std::filesystem::path& path) const;
    static MemoryStore load(const std::filesystem::path& path);
    static MemoryStore replay(const std::vector<MemoryEvent>& events);

    std::string export_state_jsonl() const;

private:
    void apply(const MemoryEvent& ev);

    std::vector<MemoryEvent> events_;
    std::vector<MemoryEntry> entries_;  // ordered by id
    std::unordered_map<std::int64_t, std::size_t> by_id_;
    std::int64_t max_id_ = 0;
    int max_session_ = 0;
};

}  // namespace creem::memstore
