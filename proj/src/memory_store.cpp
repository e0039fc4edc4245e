#include "creem/memory_store.hpp"

#include <fstream>
#include <sstream>

#include "creem/errors.hpp"
#include "creem/text.hpp"

namespace creem::memstore {

using nlohmann::json;
using nlohmann::ordered_json;

std::string to_string(Kind k) {
    switch (k) {
        case Kind::insight: return "insight";
        case Kind::session_summary: return "session_summary";
        case Kind::persona_line: return "persona_line";
    }
    return "insight";
}

Kind kind_from_string(const std::string& s) {
    if (s == "insight") return Kind::insight;
    if (s == "session_summary") return Kind::session_summary;
    if (s == "persona_line") return Kind::persona_line;
    raise("SchemaViolation", "unknown kind " + s);
}

std::string to_string(RemovalCause c) {
    switch (c) {
        case RemovalCause::updated: return "updated";
        case RemovalCause::redundant: return "redundant";
        case RemovalCause::carecall_replace: return "carecall_replace";
        case RemovalCause::carecall_delete: return "carecall_delete";
    }
    return "updated";
}

RemovalCause cause_from_string(const std::string& s) {
    if (s == "updated") return RemovalCause::updated;
    if (s == "redundant") return RemovalCause::redundant;
    if (s == "carecall_replace") return RemovalCause::carecall_replace;
    if (s == "carecall_delete") return RemovalCause::carecall_delete;
    raise("SchemaViolation", "unknown removal cause " + s);
}

nlohmann::ordered_json event_to_json(const MemoryEvent& ev) {
    ordered_json j;
    j["seq"] = ev.seq;
    j["op"] = ev.op;
    j["id"] = ev.id;
    if (ev.op == "add") {
        j["owner"] = ev.owner;
        j["text"] = ev.text;
        j["kind"] = to_string(ev.kind);
        j["origin"] = {{"session", ev.origin.session}, {"turn", ev.origin.turn}};
    } else {
        j["cause"] = to_string(*ev.cause);
        if (ev.by_entry) j["by_entry"] = *ev.by_entry;
        j["at"] = {{"session", ev.at.session}, {"turn", ev.at.turn}};
    }
    return j;
}

MemoryEvent event_from_json(const json& j) {
    MemoryEvent ev;
    ev.seq = j.at("seq").get<std::int64_t>();
    ev.op = j.at("op").get<std::string>();
    ev.id = j.at("id").get<std::int64_t>();
    if (ev.op == "add") {
        ev.owner = j.at("owner").get<std::string>();
        ev.text = j.at("text").get<std::string>();
        ev.kind = kind_from_string(j.at("kind").get<std::string>());
        ev.origin = {j.at("origin").at("session").get<int>(), j.at("origin").at("turn").get<int>()};
    } else if (ev.op == "remove") {
        ev.cause = cause_from_string(j.at("cause").get<std::string>());
        if (j.contains("by_entry")) ev.by_entry = j["by_entry"].get<std::int64_t>();
        ev.at = {j.at("at").at("session").get<int>(), j.at("at").at("turn").get<int>()};
    } else {
        raise("CorruptLog", "unknown op " + ev.op);
    }
    return ev;
}

std::int64_t MemoryStore::add_entry(const std::string& owner, const std::string& text, Kind kind,
                                    Origin origin) {
    if (creem::text::trim(text).empty()) raise("EmptyText", "memory text must be non-empty");
    MemoryEvent ev;
    ev.seq = static_cast<std::int64_t>(events_.size()) + 1;
    ev.op = "add";
    ev.id = max_id_ + 1;
    ev.owner = owner;
    ev.text = text;
    ev.kind = kind;
    ev.origin = origin;
    events_.push_back(ev);
    apply(ev);
    return ev.id;
}

std::size_t MemoryStore::remove_entries(const std::vector<std::int64_t>& ids, RemovalCause cause,
                                        std::optional<std::int64_t> by_entry, Origin at) {
    std::vector<std::int64_t> seen;
    for (auto id : ids) {
        if (!has_entry(id)) raise("UnknownId", "no entry " + std::to_string(id));
        if (!is_active(id)) raise("AlreadyRemoved", "entry " + std::to_string(id));
        for (auto s : seen)
            if (s == id) raise("AlreadyRemoved", "entry " + std::to_string(id) + " listed twice");
        seen.push_back(id);
    }
    for (auto id : ids) {
        MemoryEvent ev;
        ev.seq = static_cast<std::int64_t>(events_.size()) + 1;
        ev.op = "remove";
        ev.id = id;
        ev.cause = cause;
        ev.by_entry = by_entry;
        ev.at = at;
        events_.push_back(ev);
        apply(ev);
    }
    return ids.size();
}

void MemoryStore::apply(const MemoryEvent& ev) {
    if (ev.op == "add") {
        MemoryEntry e;
        e.id = ev.id;
        e.owner = ev.owner;
        e.text = ev.text;
        e.kind = ev.kind;
        e.origin = ev.origin;
        e.active = true;
        by_id_[e.id] = entries_.size();
        entries_.push_back(std::move(e));
        if (ev.id > max_id_) max_id_ = ev.id;
        if (ev.origin.session > max_session_) max_session_ = ev.origin.session;
    } else {
        auto it = by_id_.find(ev.id);
        if (it == by_id_.end()) raise("UnknownId", "no entry " + std::to_string(ev.id));
        MemoryEntry& e = entries_[it->second];
        if (!e.active) raise("AlreadyRemoved", "entry " + std::to_string(ev.id));
        e.active = false;
        e.removal = Removal{*ev.cause, ev.by_entry, ev.at};
        if (ev.at.session > max_session_) max_session_ = ev.at.session;
    }
}

std::vector<MemoryEntry> MemoryStore::active_entries(const std::optional<std::string>& owner) const {
    std::vector<MemoryEntry> out;
    for (const auto& e : entries_)
        if (e.active && (!owner || e.owner == *owner)) out.push_back(e);
    return out;
}

std::vector<MemoryEntry> MemoryStore::snapshot_at(int session_boundary) const {
    if (session_boundary < 1 || session_boundary > max_session_)
        raise("UnknownBoundary", "session " + std::to_string(session_boundary));
    MemoryStore replayed;
    for (const auto& ev : events_) {
        int ev_session = (ev.op == "add") ? ev.origin.session : ev.at.session;
        if (ev_session > session_boundary) break;
        replayed.apply(ev);
    }
    return replayed.active_entries();
}

const MemoryEntry& MemoryStore::entry(std::int64_t id) const {
    auto it = by_id_.find(id);
    if (it == by_id_.end()) raise("UnknownId", "no entry " + std::to_string(id));
    return entries_[it->second];
}

bool MemoryStore::has_entry(std::int64_t id) const { return by_id_.count(id) > 0; }

bool MemoryStore::is_active(std::int64_t id) const { return entry(id).active; }

std::size_t MemoryStore::active_count() const {
    std::size_t n = 0;
    for (const auto& e : entries_)
        if (e.active) ++n;
    return n;
}

void MemoryStore::persist(const std::filesystem::path& path) const {
    std::ofstream out(path, std::ios::binary);
    if (!out) raise("IoError", "cannot write " + path.string());
    for (const auto& ev : events_) out << event_to_json(ev).dump() << "\n";
}

MemoryStore MemoryStore::load(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise("IoError", "cannot read " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    std::vector<MemoryEvent> events;
    std::int64_t expected_seq = 1;
    for (const auto& line : creem::text::split_lines(ss.str())) {
        if (creem::text::trim(line).empty()) continue;
        MemoryEvent ev;
        try {
            ev = event_from_json(json::parse(line));
        } catch (const json::exception& e) {
            raise("CorruptLog", "seq " + std::to_string(expected_seq) + ": " + e.what());
        }
        if (ev.seq != expected_seq)
            raise("CorruptLog", "expected seq " + std::to_string(expected_seq) + ", got " +
                                    std::to_string(ev.seq));
        ++expected_seq;
        events.push_back(std::move(ev));
    }
    return replay(events);
}

MemoryStore MemoryStore::replay(const std::vector<MemoryEvent>& events) {
    MemoryStore store;
    for (const auto& ev : events) {
        store.events_.push_back(ev);
        store.apply(ev);
    }
    return store;
}

std::string MemoryStore::export_state_jsonl() const {
    std::ostringstream out;
    for (const auto& e : entries_) {
        ordered_json j;
        j["id"] = e.id;
        j["owner"] = e.owner;
        j["text"] = e.text;
        j["kind"] = to_string(e.kind);
        j["origin"] = {{"session", e.origin.session}, {"turn", e.origin.turn}};
        j["status"] = e.active ? "active" : "removed";
        if (e.removal) {
            ordered_json r;
            r["cause"] = to_string(e.removal->cause);
            if (e.removal->by_entry) r["by_entry"] = *e.removal->by_entry;
            r["at"] = {{"session", e.removal->at.session}, {"turn", e.removal->at.turn}};
            j["removal"] = r;
        }
        out << j.dump() << "\n";
    }
    return out.str();
}

}  // namespace creem::memstore
