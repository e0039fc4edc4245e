#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

namespace creem::providers {

struct ChatMessage {
    std::string role;  // system | user | assistant
    std::string content;
};

// Carries the pipeline position so scripted mocks can key on it.
struct RequestMeta {
    std::string episode_id;
    int session = 0;
    int turn = 0;
};

struct ChatRequest {
    std::vector<ChatMessage> messages;
    double temperature = 0.7;
    std::string tag;  // pipeline stage: "question", "blend", "respond", ...
    std::optional<int> max_tokens;
    RequestMeta meta;
};

struct ProviderIdentity {
    std::string kind;  // "live" | "mock"
    std::string model_name;
    int dim = 0;  // embedders only
};

nlohmann::ordered_json identity_to_json(const ProviderIdentity& id);

std::string request_content(const ChatRequest& req);  // canonical text for hashing/keys
std::string request_hash(const ChatRequest& req);

class ChatProvider {
public:
    virtual ~ChatProvider() = default;
    virtual std::string chat_complete(const ChatRequest& request) = 0;
    virtual ProviderIdentity identity() const = 0;
};

class EmbeddingProvider {
public:
    virtual ~EmbeddingProvider() = default;
    virtual std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) = 0;
    virtual int dim() const = 0;
    virtual ProviderIdentity identity() const = 0;
};

class NliProvider {
public:
    virtual ~NliProvider() = default;
    // Probability-like contradiction score in [0, 1].
    virtual double contradiction(const std::string& premise, const std::string& hypothesis) = 0;
    virtual ProviderIdentity identity() const = 0;
};

// Append-only JSONL audit of every provider call; a journal written by a
// live run doubles as a deterministic replay fixture.
class Journal {
public:
    explicit Journal(const std::filesystem::path& path);
    void record(const std::string& kind, const std::string& tag, const std::string& req_hash,
                const nlohmann::json& response, double latency_ms);

private:
    std::filesystem::path path_;
    std::mutex mutex_;
};

class JournaledChatProvider : public ChatProvider {
public:
    JournaledChatProvider(ChatProvider& inner, Journal& journal)
        : inner_(inner), journal_(journal) {}
    std::string chat_complete(const ChatRequest& request) override;
    ProviderIdentity identity() const override { return inner_.identity(); }

private:
    ChatProvider& inner_;
    Journal& journal_;
};

class ReplayChatProvider : public ChatProvider {
public:
    explicit ReplayChatProvider(const std::filesystem::path& journal_path);
    std::string chat_complete(const ChatRequest& request) override;
    ProviderIdentity identity() const override { return {"mock", "replay", 0}; }

private:
    std::map<std::string, std::string> by_hash_;
};

struct LiveOptions {
    std::string base_url;   // e.g. http://127.0.0.1:8089
    std::string api_key;    // bearer token
    std::string model = "gpt-3.5-turbo";
    int max_attempts = 5;
    int backoff_initial_ms = 250;
    int requests_per_minute = 0;  // 0 = unlimited
    int timeout_sec = 60;
};

// POST {base_url}/v1/chat/completions with {"model", "messages", "temperature"};
// completion text is choices[0].message.content.
class LiveChatProvider : public ChatProvider {
public:
    explicit LiveChatProvider(LiveOptions options);
    std::string chat_complete(const ChatRequest& request) override;
    ProviderIdentity identity() const override { return {"live", options_.model, 0}; }

    static nlohmann::ordered_json request_body(const ChatRequest& request,
                                               const std::string& model);

private:
    LiveOptions options_;
    std::mutex rate_mutex_;
    std::int64_t last_request_ms_ = 0;
};

// POST {base_url}/v1/embeddings with {"model", "input"}.
class LiveEmbeddingProvider : public EmbeddingProvider {
public:
    LiveEmbeddingProvider(LiveOptions options, int dim);
    std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;
    int dim() const override { return dim_; }
    ProviderIdentity identity() const override { return {"live", options_.model, dim_}; }

private:
    LiveOptions options_;
    int dim_;
};

// POST {nli_url}/score with {"premise", "hypothesis"} -> {"contradiction": x}.
class LiveNliProvider : public NliProvider {
public:
    explicit LiveNliProvider(std::string nli_url, int timeout_sec = 60);
    double contradiction(const std::string& premise, const std::string& hypothesis) override;
    ProviderIdentity identity() const override { return {"live", "nli-endpoint", 0}; }

private:
    std::string nli_url_;
    int timeout_sec_;
};

std::vector<double> unit_normalize(std::vector<double> v);

}  // namespace creem::providers
