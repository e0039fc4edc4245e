#include "creem/datasets.hpp"

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "creem/errors.hpp"
#include "creem/text.hpp"

namespace creem::datasets {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) raise("UnreadableFile", path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

Episode episode_from_msc_json(const json& j, size_t line_no) {
    Episode ep;
    if (j.contains("metadata") && j["metadata"].contains("initial_data_id")) {
        ep.id = j["metadata"]["initial_data_id"].get<std::string>();
    } else {
        ep.id = "msc-" + std::to_string(line_no);
    }
    ep.speakers = {"Speaker 1", "Speaker 2"};

    auto read_turns = [&](const json& dialog, int session_index) {
        std::vector<Utterance> turns;
        int t = 1;
        for (const auto& u : dialog) {
            Utterance ut;
            if (u.contains("id") && u["id"].is_string())
                ut.speaker = u["id"].get<std::string>();
            else
                ut.speaker = (t % 2 == 1) ? ep.speakers[0] : ep.speakers[1];
            if (!u.contains("text"))
                raise("SchemaViolation",
                      "line " + std::to_string(line_no) + ": utterance missing text");
            ut.text = text::trim(u["text"].get<std::string>());
            ut.session_index = session_index;
            ut.turn_index = t++;
            turns.push_back(std::move(ut));
        }
        return turns;
    };

    int s = 1;
    if (j.contains("previous_dialogs")) {
        for (const auto& pd : j["previous_dialogs"]) {
            Session sess;
            sess.index = s;
            if (pd.contains("time_num") && pd.contains("time_unit")) {
                sess.time_interval = std::to_string(pd["time_num"].get<int>()) + " " +
                                     pd["time_unit"].get<std::string>();
            }
            if (pd.contains("personas") && pd["personas"].is_array()) {
                const auto& ps = pd["personas"];
                for (size_t k = 0; k < ps.size() && k < 2; ++k)
                    sess.personas[ep.speakers[k]] = ps[k].get<std::vector<std::string>>();
            }
            if (!pd.contains("dialog"))
                raise("SchemaViolation",
                      "line " + std::to_string(line_no) + ": previous_dialog missing dialog");
            sess.turns = read_turns(pd["dialog"], s);
            ep.sessions.push_back(std::move(sess));
            ++s;
        }
    }
    if (j.contains("dialog")) {
        Session sess;
        sess.index = s;
        sess.turns = read_turns(j["dialog"], s);
        ep.sessions.push_back(std::move(sess));
    }

    // Adopt the corpus speaker ids when the dialog entries carry them.
    std::set<std::string> seen;
    for (const auto& sess : ep.sessions)
        for (const auto& u : sess.turns) seen.insert(u.speaker);
    if (seen.size() == 2) {
        auto it = seen.begin();
        ep.speakers[0] = *it++;
        ep.speakers[1] = *it;
        // First speaker of the first turn leads.
        if (!ep.sessions.empty() && !ep.sessions[0].turns.empty() &&
            ep.sessions[0].turns[0].speaker != ep.speakers[0])
            std::swap(ep.speakers[0], ep.speakers[1]);
    }
    return ep;
}

Episode episode_from_cc_json(const json& j, size_t index) {
    static const std::vector<std::string> ordinals = {"first", "second", "third", "fourth",
                                                      "fifth", "sixth", "seventh", "eighth"};
    Episode ep;
    ep.id = j.contains("dataID") ? j["dataID"].get<std::string>() : "cc-" + std::to_string(index);

    std::vector<std::string> intervals;
    if (j.contains("time_interval"))
        intervals = j["time_interval"].get<std::vector<std::string>>();

    int s = 1;
    for (const auto& ord : ordinals) {
        std::string dkey = ord + "_session_dialogue";
        if (!j.contains(dkey)) break;
        std::string skey = ord + "_session_speakers";
        Session sess;
        sess.index = s;
        if (s >= 2 && static_cast<size_t>(s - 2) < intervals.size())
            sess.time_interval = intervals[static_cast<size_t>(s - 2)];
        const auto& lines = j[dkey];
        std::vector<std::string> speakers;
        if (j.contains(skey)) speakers = j[skey].get<std::vector<std::string>>();
        int t = 1;
        for (const auto& line : lines) {
            Utterance ut;
            std::string raw = line.get<std::string>();
            if (static_cast<size_t>(t - 1) < speakers.size()) {
                ut.speaker = speakers[static_cast<size_t>(t - 1)];
                ut.text = text::trim(raw);
            } else {
                // "Name: text" lines when no speaker array is given.
                auto colon = raw.find(':');
                if (colon == std::string::npos)
                    raise("SchemaViolation", "episode " + ep.id + ": utterance without speaker");
                ut.speaker = text::trim(raw.substr(0, colon));
                ut.text = text::trim(raw.substr(colon + 1));
            }
            ut.session_index = s;
            ut.turn_index = t++;
            sess.turns.push_back(std::move(ut));
        }
        ep.sessions.push_back(std::move(sess));
        ++s;
    }

    std::set<std::string> seen;
    for (const auto& sess : ep.sessions)
        for (const auto& u : sess.turns) seen.insert(u.speaker);
    if (seen.size() != 2)
        raise("SchemaViolation", "episode " + ep.id + ": expected 2 speakers, got " +
                                     std::to_string(seen.size()));
    auto it = seen.begin();
    ep.speakers[0] = *it++;
    ep.speakers[1] = *it;
    if (!ep.sessions.empty() && !ep.sessions[0].turns.empty() &&
        ep.sessions[0].turns[0].speaker != ep.speakers[0])
        std::swap(ep.speakers[0], ep.speakers[1]);
    return ep;
}

}  // namespace

Episode episode_from_json(const json& j) {
    Episode ep;
    if (!j.contains("id") || !j.contains("speakers") || !j.contains("sessions"))
        raise("SchemaViolation", "episode object needs id, speakers, sessions");
    ep.id = j["id"].get<std::string>();
    auto sp = j["speakers"].get<std::vector<std::string>>();
    if (sp.size() != 2)
        raise("SchemaViolation", "episode " + ep.id + ": speakers must have 2 entries");
    ep.speakers = {sp[0], sp[1]};
    int s = 1;
    for (const auto& sj : j["sessions"]) {
        Session sess;
        sess.index = sj.contains("index") ? sj["index"].get<int>() : s;
        sess.time_interval = sj.value("time_interval", std::string{});
        if (sj.contains("personas"))
            for (auto it = sj["personas"].begin(); it != sj["personas"].end(); ++it)
                sess.personas[it.key()] = it.value().get<std::vector<std::string>>();
        int t = 1;
        if (!sj.contains("turns"))
            raise("SchemaViolation", "episode " + ep.id + ": session missing turns");
        for (const auto& tj : sj["turns"]) {
            Utterance ut;
            ut.speaker = tj.at("speaker").get<std::string>();
            ut.text = text::trim(tj.at("text").get<std::string>());
            ut.session_index = sess.index;
            ut.turn_index = t++;
            sess.turns.push_back(std::move(ut));
        }
        ep.sessions.push_back(std::move(sess));
        ++s;
    }
    return ep;
}

nlohmann::ordered_json episode_to_json(const Episode& ep) {
    ordered_json j;
    j["id"] = ep.id;
    j["speakers"] = {ep.speakers[0], ep.speakers[1]};
    j["sessions"] = ordered_json::array();
    for (const auto& sess : ep.sessions) {
        ordered_json sj;
        sj["index"] = sess.index;
        sj["time_interval"] = sess.time_interval;
        if (!sess.personas.empty()) {
            ordered_json pj = ordered_json::object();
            for (const auto& [speaker, lines] : sess.personas) pj[speaker] = lines;
            sj["personas"] = pj;
        }
        sj["turns"] = ordered_json::array();
        for (const auto& u : sess.turns)
            sj["turns"].push_back(ordered_json{{"speaker", u.speaker}, {"text", u.text}});
        j["sessions"].push_back(sj);
    }
    return j;
}

std::vector<Episode> load_corpus(const std::filesystem::path& path, const std::string& adapter) {
    std::string body = read_file(path);
    std::vector<Episode> episodes;
    try {
        if (adapter == "normalized") {
            json doc = json::parse(body);
            if (!doc.is_array()) raise("SchemaViolation", "top level must be a JSON array");
            for (const auto& ej : doc) episodes.push_back(episode_from_json(ej));
        } else if (adapter == "msc") {
            size_t line_no = 0;
            for (const auto& line : text::split_lines(body)) {
                ++line_no;
                if (text::trim(line).empty()) continue;
                episodes.push_back(episode_from_msc_json(json::parse(line), line_no));
            }
        } else if (adapter == "cc") {
            json doc = json::parse(body);
            if (!doc.is_array()) raise("SchemaViolation", "top level must be a JSON array");
            size_t idx = 0;
            for (const auto& ej : doc) episodes.push_back(episode_from_cc_json(ej, idx++));
        } else {
            raise("UnknownAdapter", adapter);
        }
    } catch (const json::exception& e) {
        raise("SchemaViolation", std::string(e.what()));
    }
    for (const auto& ep : episodes) {
        auto violations = validate_episode(ep);
        if (!violations.empty())
            raise("SchemaViolation", "episode " + ep.id + ": " + violations.front());
    }
    return episodes;
}

std::vector<std::string> validate_episode(const Episode& ep) {
    std::vector<std::string> out;
    auto where = [&](int s, int t) {
        return ep.id + "/session " + std::to_string(s) + "/turn " + std::to_string(t);
    };

    std::set<std::string> distinct(ep.speakers.begin(), ep.speakers.end());
    std::set<std::string> seen;
    for (const auto& sess : ep.sessions)
        for (const auto& u : sess.turns) seen.insert(u.speaker);
    if (seen.size() > distinct.size() || distinct.size() != 2)
        out.push_back(ep.id + "/speakers: expected 2, got " +
                      std::to_string(std::max(seen.size(), distinct.size())));

    int expected_session = 1;
    for (const auto& sess : ep.sessions) {
        if (sess.index != expected_session)
            out.push_back(ep.id + "/session " + std::to_string(sess.index) +
                          ": index must be contiguous from 1");
        ++expected_session;
        if (sess.turns.empty()) {
            out.push_back(ep.id + "/session " + std::to_string(sess.index) + ": turns empty");
            continue;
        }
        int expected_turn = 1;
        const std::string* prev_speaker = nullptr;
        for (const auto& u : sess.turns) {
            if (text::trim(u.text).empty())
                out.push_back(where(sess.index, u.turn_index) + ": text empty");
            if (u.session_index != sess.index)
                out.push_back(where(sess.index, u.turn_index) + ": session_index mismatch");
            if (u.turn_index != expected_turn)
                out.push_back(where(sess.index, u.turn_index) + ": turn_index must increase by 1");
            ++expected_turn;
            if (!distinct.count(u.speaker))
                out.push_back(where(sess.index, u.turn_index) + ": unknown speaker " + u.speaker);
            if (prev_speaker && *prev_speaker == u.speaker)
                out.push_back(where(sess.index, u.turn_index) + ": turns must alternate speakers");
            prev_speaker = &u.speaker;
        }
    }
    return out;
}

std::vector<Episode> sample_eval_slice(const std::vector<Episode>& episodes, int n_episodes,
                                       int turns_per_session, std::uint64_t seed) {
    if (n_episodes > static_cast<int>(episodes.size()))
        raise("NotEnoughEpisodes", "asked for " + std::to_string(n_episodes) + " of " +
                                       std::to_string(episodes.size()));
    if (turns_per_session < 1) raise("NotEnoughEpisodes", "turns_per_session must be >= 1");

    // Seeded Fisher-Yates over indices; chosen subset keeps corpus order.
    std::vector<size_t> idx(episodes.size());
    for (size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::mt19937_64 rng(seed);
    for (size_t i = idx.size(); i > 1; --i) {
        size_t j = static_cast<size_t>(rng() % i);
        std::swap(idx[i - 1], idx[j]);
    }
    idx.resize(static_cast<size_t>(n_episodes));
    std::sort(idx.begin(), idx.end());

    std::vector<Episode> out;
    out.reserve(idx.size());
    for (size_t i : idx) {
        Episode ep = episodes[i];
        for (auto& sess : ep.sessions)
            if (static_cast<int>(sess.turns.size()) > turns_per_session)
                sess.turns.resize(static_cast<size_t>(turns_per_session));
        out.push_back(std::move(ep));
    }
    return out;
}

void write_normalized(const std::vector<Episode>& episodes, const std::filesystem::path& path) {
    ordered_json doc = ordered_json::array();
    for (const auto& ep : episodes) doc.push_back(episode_to_json(ep));
    std::ofstream out(path, std::ios::binary);
    if (!out) raise("IoError", "cannot write " + path.string());
    out << doc.dump(2) << "\n";
}

std::string render_dialogue(const std::vector<Utterance>& turns) {
    std::vector<std::string> lines;
    lines.reserve(turns.size());
    for (const auto& u : turns) lines.push_back(u.speaker + ": " + u.text);
    return text::join(lines, "\n");
}

}  // namespace creem::datasets
