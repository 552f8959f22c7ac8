#include "eventvq/text.hpp"

#include <cctype>

namespace eventvq {

std::string to_lower(std::string_view s) {
    std::string out;
    out.reserve(s.size());
    for (unsigned char c : s) out.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c));
    return out;
}

static bool is_word_char(unsigned char c) {
    return std::isalnum(c) || c >= 0x80;
}

std::vector<std::string> tokenize_words(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (unsigned char c : s) {
        if (is_word_char(c)) {
            cur.push_back(c < 0x80 ? static_cast<char>(std::tolower(c)) : static_cast<char>(c));
        } else if (!cur.empty()) {
            out.push_back(std::move(cur));
            cur.clear();
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

std::vector<std::string> split_whitespace(std::string_view s) {
    std::vector<std::string> out;
    std::string cur;
    for (unsigned char c : s) {
        if (std::isspace(c)) {
            if (!cur.empty()) {
                out.push_back(std::move(cur));
                cur.clear();
            }
        } else {
            cur.push_back(static_cast<char>(c));
        }
    }
    if (!cur.empty()) out.push_back(std::move(cur));
    return out;
}

static std::string trim_trailing_punct(std::string tok) {
    while (!tok.empty()) {
        unsigned char c = static_cast<unsigned char>(tok.back());
        if (c < 0x80 && std::ispunct(c)) tok.pop_back();
        else break;
    }
    return tok;
}

Entities scan_entities(std::string_view text) {
    Entities e;
    for (auto& tok : split_whitespace(text)) {
        if (tok.size() > 1 && tok[0] == '@') {
            auto m = trim_trailing_punct(tok.substr(1));
            if (!m.empty()) e.mentions.push_back(to_lower(m));
        } else if (tok.size() > 1 && tok[0] == '#') {
            auto h = trim_trailing_punct(tok.substr(1));
            if (!h.empty()) e.hashtags.push_back(to_lower(h));
        } else if (tok.rfind("http", 0) == 0) {
            auto u = trim_trailing_punct(tok);
            if (!u.empty()) e.urls.push_back(u);
        }
    }
    return e;
}

}  // namespace eventvq
