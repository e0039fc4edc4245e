#include "creem/providers.hpp"

#include <chrono>
#include <cmath>
#include <fstream>
#include <sstream>
#include <thread>

// httplib pulls in OpenSSL only when CPPHTTPLIB_OPENSSL_SUPPORT is set; plain
// HTTP is enough for the offline stub and local gateways.
#include "httplib.h"

#include "creem/errors.hpp"
#include "creem/text.hpp"

namespace creem::providers {

using nlohmann::json;
using nlohmann::ordered_json;

nlohmann::ordered_json identity_to_json(const ProviderIdentity& id) {
    ordered_json j;
    j["kind"] = id.kind;
    j["model_name"] = id.model_name;
    if (id.dim > 0) j["dim"] = id.dim;
    return j;
}

std::string request_content(const ChatRequest& req) {
    std::ostringstream ss;
    ss << "tag=" << req.tag << "\x1e";
    ss << "episode=" << req.meta.episode_id << "\x1e";
    ss << "session=" << req.meta.session << "\x1e";
    ss << "turn=" << req.meta.turn << "\x1e";
    ss << "temperature=" << req.temperature << "\x1e";
    for (const auto& m : req.messages) ss << m.role << ":" << m.content << "\x1e";
    return ss.str();
}

std::string request_hash(const ChatRequest& req) {
    return text::fnv1a64_hex(request_content(req));
}

static std::int64_t now_ms() {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now().time_since_epoch())
        .count();
}

Journal::Journal(const std::filesystem::path& path) : path_(path) {
    std::ofstream out(path_, std::ios::binary | std::ios::trunc);
    if (!out) raise("IoError", "cannot open journal " + path_.string());
}

void Journal::record(const std::string& kind, const std::string& tag, const std::string& req_hash,
                     const nlohmann::json& response, double latency_ms) {
    std::lock_guard lock(mutex_);
    std::ofstream out(path_, std::ios::binary | std::ios::app);
    if (!out) raise("IoError", "cannot append journal " + path_.string());
    ordered_json j;
    j["kind"] = kind;
    j["tag"] = tag;
    j["request_hash"] = req_hash;
    j["latency_ms"] = latency_ms;
    j["response"] = response;
    out << j.dump() << "\n";
}

std::string JournaledChatProvider::chat_complete(const ChatRequest& request) {
    auto t0 = now_ms();
    std::string out = inner_.chat_complete(request);
    journal_.record("chat", request.tag, request_hash(request), json(out),
                    static_cast<double>(now_ms() - t0));
    return out;
}

ReplayChatProvider::ReplayChatProvider(const std::filesystem::path& journal_path) {
    std::ifstream in(journal_path, std::ios::binary);
    if (!in) raise("IoError", "cannot read journal " + journal_path.string());
    std::string line;
    while (std::getline(in, line)) {
        if (text::trim(line).empty()) continue;
        json j = json::parse(line);
        if (j.value("kind", "") != "chat") continue;
        by_hash_[j.at("request_hash").get<std::string>()] =
            j.at("response").get<std::string>();
    }
}

std::string ReplayChatProvider::chat_complete(const ChatRequest& request) {
    auto it = by_hash_.find(request_hash(request));
    if (it == by_hash_.end())
        raise("ProviderError", "replay miss for tag " + request.tag + " hash " +
                                   request_hash(request));
    return it->second;
}

// --- live wire clients ------------------------------------------------------

namespace {

struct ParsedUrl {
    std::string host_port;  // scheme://host:port for httplib::Client
};

ParsedUrl parse_base_url(const std::string& url) {
    if (url.empty()) raise("ProviderError", "empty base url");
    return {url};
}

json post_json(const std::string& base_url, const std::string& path, const json& body,
               const std::string& api_key, int timeout_sec, int max_attempts,
               int backoff_initial_ms) {
    ParsedUrl parsed = parse_base_url(base_url);
    int attempt = 0;
    int backoff = backoff_initial_ms;
    std::string last_error;
    while (attempt < max_attempts) {
        ++attempt;
        httplib::Client client(parsed.host_port);
        client.set_connection_timeout(timeout_sec, 0);
        client.set_read_timeout(timeout_sec, 0);
        httplib::Headers headers;
        if (!api_key.empty()) headers.emplace("Authorization", "Bearer " + api_key);
        auto res = client.Post(path, headers, body.dump(), "application/json");
        if (res && res->status >= 200 && res->status < 300) {
            try {
                return json::parse(res->body);
            } catch (const json::exception& e) {
                raise("ProviderError", std::string("bad response json: ") + e.what());
            }
        }
        if (res && res->status >= 400 && res->status < 500 && res->status != 429) {
            raise("ProviderError",
                  "status " + std::to_string(res->status) + " from " + path + ": " + res->body);
        }
        last_error = res ? "status " + std::to_string(res->status)
                         : "transport error " + httplib::to_string(res.error());
        if (attempt < max_attempts) {
            std::this_thread::sleep_for(std::chrono::milliseconds(backoff));
            backoff *= 2;
        }
    }
    raise("ProviderError", "retries exhausted for " + path + " (" + last_error + ")");
}

}  // namespace

LiveChatProvider::LiveChatProvider(LiveOptions options) : options_(std::move(options)) {}

nlohmann::ordered_json LiveChatProvider::request_body(const ChatRequest& request,
                                                      const std::string& model) {
    ordered_json body;
    body["model"] = model;
    body["messages"] = ordered_json::array();
    for (const auto& m : request.messages)
        body["messages"].push_back(ordered_json{{"role", m.role}, {"content", m.content}});
    body["temperature"] = request.temperature;
    if (request.max_tokens) body["max_tokens"] = *request.max_tokens;
    return body;
}

std::string LiveChatProvider::chat_complete(const ChatRequest& request) {
    if (request.messages.empty()) raise("ProviderError", "chat request needs messages");
    if (options_.requests_per_minute > 0) {
        std::lock_guard lock(rate_mutex_);
        std::int64_t min_gap = 60000 / options_.requests_per_minute;
        std::int64_t now = now_ms();
        std::int64_t wait = last_request_ms_ + min_gap - now;
        if (wait > 0) std::this_thread::sleep_for(std::chrono::milliseconds(wait));
        last_request_ms_ = now_ms();
    }
    json body = request_body(request, options_.model);
    json res = post_json(options_.base_url, "/v1/chat/completions", body, options_.api_key,
                         options_.timeout_sec, options_.max_attempts, options_.backoff_initial_ms);
    try {
        std::string out = res.at("choices").at(0).at("message").at("content").get<std::string>();
        if (text::trim(out).empty()) raise("EmptyCompletion", "tag " + request.tag);
        return out;
    } catch (const json::exception& e) {
        raise("ProviderError", std::string("unexpected completion shape: ") + e.what());
    }
}

LiveEmbeddingProvider::LiveEmbeddingProvider(LiveOptions options, int dim)
    : options_(std::move(options)), dim_(dim) {}

std::vector<std::vector<double>> LiveEmbeddingProvider::embed(
    const std::vector<std::string>& texts) {
    json body;
    body["model"] = options_.model;
    body["input"] = texts;
    json res = post_json(options_.base_url, "/v1/embeddings", body, options_.api_key,
                         options_.timeout_sec, options_.max_attempts, options_.backoff_initial_ms);
    std::vector<std::vector<double>> out;
    try {
        for (const auto& item : res.at("data"))
            out.push_back(unit_normalize(item.at("embedding").get<std::vector<double>>()));
    } catch (const json::exception& e) {
        raise("ProviderError", std::string("unexpected embedding shape: ") + e.what());
    }
    if (out.size() != texts.size())
        raise("ProviderError", "embedding count mismatch");
    return out;
}

LiveNliProvider::LiveNliProvider(std::string nli_url, int timeout_sec)
    : nli_url_(std::move(nli_url)), timeout_sec_(timeout_sec) {}

double LiveNliProvider::contradiction(const std::string& premise, const std::string& hypothesis) {
    json body;
    body["premise"] = premise;
    body["hypothesis"] = hypothesis;
    json res = post_json(nli_url_, "/score", body, "", timeout_sec_, 3, 250);
    try {
        double score = res.at("contradiction").get<double>();
        return std::min(1.0, std::max(0.0, score));
    } catch (const json::exception& e) {
        raise("ProviderError", std::string("unexpected nli shape: ") + e.what());
    }
}

std::vector<double> unit_normalize(std::vector<double> v) {
    double norm = 0.0;
    for (double x : v) norm += x * x;
    norm = std::sqrt(norm);
    if (norm > 0)
        for (double& x : v) x /= norm;
    return v;
}

}  // namespace creem::providers
