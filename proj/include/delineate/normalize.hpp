#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace delineate {

// Canonical matching form of any metadata text: lowercased, Latin diacritics
// folded to ASCII, combining marks stripped, hyphens/dashes/underscores and
// Unicode spaces turned into plain spaces, whitespace collapsed and trimmed.
// Total and idempotent. Non-Latin codepoints pass through unchanged.
std::string normalize_text(std::string_view raw);

// Word characters of normalized text. Everything else is a token boundary.
inline bool is_word_char(unsigned char c) {
    return (c >= 'a' && c <= 'z') || (c >= '0' && c <= '9');
}

// Maximal [a-z0-9]+ runs of a normalized string.
std::vector<std::string_view> word_tokens(std::string_view normalized);

}  // namespace delineate
