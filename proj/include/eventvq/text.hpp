#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace eventvq {

std::string to_lower(std::string_view s);

// Lowercased runs of [a-z0-9] (bytes >= 0x80 treated as word characters).
std::vector<std::string> tokenize_words(std::string_view s);

// Raw whitespace-delimited tokens.
std::vector<std::string> split_whitespace(std::string_view s);

struct Entities {
    std::vector<std::string> mentions;  // without leading '@'
    std::vector<std::string> hashtags;  // without leading '#'
    std::vector<std::string> urls;
};

// @-, #-, http-prefixed tokens scanned from raw text, trailing punctuation trimmed.
Entities scan_entities(std::string_view text);

}  // namespace eventvq
