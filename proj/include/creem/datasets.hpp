#pragma once

#include <array>
#include <cstdint>
#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "json.hpp"

namespace creem::datasets {

struct Utterance {
    std::string speaker;
    std::string text;
    int session_index = 0;
    int turn_index = 0;
};

struct Session {
    int index = 0;
    std::string time_interval;
    std::vector<Utterance> turns;
    std::map<std::string, std::vector<std::string>> personas;
};

struct Episode {
    std::string id;
    std::array<std::string, 2> speakers;
    std::vector<Session> sessions;
};

// Adapters map an upstream corpus schema onto the normalized episode model.
//
//   normalized  the engine's own JSON array format (see episode_to_json)
//   msc         JSONL, one episode per line:
//                 {"metadata": {"initial_data_id": str}?,
//                  "previous_dialogs": [{"dialog": [{"id": str?, "text": str}],
//                                        "personas": [[str], [str]]?,
//                                        "time_num": int?, "time_unit": str?}],
//                  "dialog": [{"id": str?, "text": str}]}
//               previous_dialogs are sessions 1..n, dialog is the final
//               session; missing speaker ids alternate "Speaker 1"/"Speaker 2".
//   cc          JSON array, one object per episode:
//                 {"dataID": str?, "relationship": str?,
//                  "time_interval": [str],
//                  "first_session_dialogue": [str], "first_session_speakers": [str],
//                  ..., "fifth_session_dialogue": [...], ...}
//               session k exists when "<nth>_session_dialogue" is present.
//
// Unknown fields are ignored by every adapter.
std::vector<Episode> load_corpus(const std::filesystem::path& path, const std::string& adapter);

// Empty result means every type invariant holds; each violation names the
// offending path and rule.
std::vector<std::string> validate_episode(const Episode& episode);

// Seeded selection of n episodes (corpus order preserved), then prefix
// truncation of every session to turns_per_session turns.
std::vector<Episode> sample_eval_slice(const std::vector<Episode>& episodes, int n_episodes,
                                       int turns_per_session, std::uint64_t seed);

nlohmann::ordered_json episode_to_json(const Episode& episode);
Episode episode_from_json(const nlohmann::json& j);

void write_normalized(const std::vector<Episode>& episodes, const std::filesystem::path& path);

std::string render_dialogue(const std::vector<Utterance>& turns);

}  // namespace creem::datasets
