#pragma once

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "creem/providers.hpp"

namespace creem::providers {

// Deterministic bag-of-features embedder: each lowercased token hashes into
// one of `dim` buckets, the count vector is unit-normalized. Identical text
// always embeds to the identical vector.
class HashEmbedder : public EmbeddingProvider {
public:
    explicit HashEmbedder(int dim = 64) : dim_(dim) {}
    std::vector<std::vector<double>> embed(const std::vector<std::string>& texts) override;
    int dim() const override { return dim_; }
    ProviderIdentity identity() const override { return {"mock", "hash-bag-v1", dim_}; }

private:
    int dim_;
};

// Lexical contradiction heuristic: negation-parity and antonym lookups over a
// shared-subject (token overlap) check. Scores clamp to [0, 1].
class LexicalNli : public NliProvider {
public:
    double contradiction(const std::string& premise, const std::string& hypothesis) override;
    ProviderIdentity identity() const override { return {"mock", "lexical-nli-v1", 0}; }
};

// Strict scripted mock keyed on (episode, session, turn, tag). A miss is an
// error naming the key, never a silent fallback.
class ScriptedChatProvider : public ChatProvider {
public:
    ScriptedChatProvider() = default;
    static ScriptedChatProvider from_file(const std::filesystem::path& path);

    void add(const std::string& episode, int session, int turn, const std::string& tag,
             const std::string& text);
    std::string chat_complete(const ChatRequest& request) override;
    ProviderIdentity identity() const override { return {"mock", "scripted", 0}; }

    static std::string key_of(const ChatRequest& request);

private:
    std::map<std::string, std::string> script_;
};

// Strict mode keyed by the rendered prompt hash; used for template-regression
// fixtures where wording changes must invalidate the script.
class PromptHashChatProvider : public ChatProvider {
public:
    void add(const std::string& prompt_hash, const std::string& text);
    std::string chat_complete(const ChatRequest& request) override;
    ProviderIdentity identity() const override { return {"mock", "prompt-hash", 0}; }
};

// Self-contained deterministic generator: a pure function of the request
// content that understands each pipeline stage's prompt layout and emits
// well-formed output for it. Drives full offline runs on arbitrary corpora.
class SyntheticChatProvider : public ChatProvider {
public:
    std::string chat_complete(const ChatRequest& request) override;
    ProviderIdentity identity() const override { return {"mock", "synthetic-v1", 0}; }
};

}  // namespace creem::providers
