#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace creem::text {

// Shared normalizer pinned for every lexical consumer (metrics, mock
// embedder, mock NLI): lowercase, split punctuation into its own tokens,
// then split on whitespace.
std::vector<std::string> tokenize(std::string_view s);

std::string lower(std::string_view s);
std::string trim(std::string_view s);
std::vector<std::string> split_lines(std::string_view s);
std::string join(const std::vector<std::string>& parts, std::string_view sep);
bool starts_with(std::string_view s, std::string_view prefix);

// Jaccard similarity over token sets; 0 when both sides are empty.
double token_jaccard(const std::vector<std::string>& a, const std::vector<std::string>& b);

// FNV-1a 64-bit. Stable across platforms; used for content keys, not security.
std::uint64_t fnv1a64(std::string_view s);
std::string fnv1a64_hex(std::string_view s);

}  // namespace creem::text
