#include "delineate/normalize.hpp"

#include <cstdint>

namespace delineate {

namespace {

struct Decoded {
    char32_t cp;
    int len;  // bytes consumed; 0 when the lead byte is invalid
};

Decoded decode_utf8(std::string_view s, std::size_t i) {
    unsigned char b0 = static_cast<unsigned char>(s[i]);
    if (b0 < 0x80) return {b0, 1};
    auto cont = [&](std::size_t k) {
        return i + k < s.size() && (static_cast<unsigned char>(s[i + k]) & 0xC0) == 0x80;
    };
    if ((b0 & 0xE0) == 0xC0 && cont(1)) {
        char32_t cp = (b0 & 0x1Fu) << 6 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu);
        return {cp, 2};
    }
    if ((b0 & 0xF0) == 0xE0 && cont(1) && cont(2)) {
        char32_t cp = (b0 & 0x0Fu) << 12 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 6 |
                      (static_cast<unsigned char>(s[i + 2]) & 0x3Fu);
        return {cp, 3};
    }
    if ((b0 & 0xF8) == 0xF0 && cont(1) && cont(2) && cont(3)) {
        char32_t cp = (b0 & 0x07u) << 18 | (static_cast<unsigned char>(s[i + 1]) & 0x3Fu) << 12 |
                      (static_cast<unsigned char>(s[i + 2]) & 0x3Fu) << 6 |
                      (static_cast<unsigned char>(s[i + 3]) & 0x3Fu);
        return {cp, 4};
    }
    return {b0, 0};
}

// ASCII replacement for U+00C0..U+017F; nullptr means "not a folded letter".
const char* fold_latin(char32_t cp) {
    if (cp >= 0x00C0 && cp <= 0x00C5) return "a";
    if (cp == 0x00C6) return "ae";
    if (cp == 0x00C7) return "c";
    if (cp >= 0x00C8 && cp <= 0x00CB) return "e";
    if (cp >= 0x00CC && cp <= 0x00CF) return "i";
    if (cp == 0x00D0) return "d";
    if (cp == 0x00D1) return "n";
    if (cp >= 0x00D2 && cp <= 0x00D6) return "o";
    if (cp == 0x00D8) return "o";
    if (cp >= 0x00D9 && cp <= 0x00DC) return "u";
    if (cp == 0x00DD) return "y";
    if (cp == 0x00DE) return "th";
    if (cp == 0x00DF) return "ss";
    if (cp >= 0x00E0 && cp <= 0x00E5) return "a";
    if (cp == 0x00E6) return "ae";
    if (cp == 0x00E7) return "c";
    if (cp >= 0x00E8 && cp <= 0x00EB) return "e";
    if (cp >= 0x00EC && cp <= 0x00EF) return "i";
    if (cp == 0x00F0) return "d";
    if (cp == 0x00F1) return "n";
    if (cp >= 0x00F2 && cp <= 0x00F6) return "o";
    if (cp == 0x00F8) return "o";
    if (cp >= 0x00F9 && cp <= 0x00FC) return "u";
    if (cp == 0x00FD) return "y";
    if (cp == 0x00FE) return "th";
    if (cp == 0x00FF) return "y";
    if (cp >= 0x0100 && cp <= 0x0105) return "a";
    if (cp >= 0x0106 && cp <= 0x010D) return "c";
    if (cp >= 0x010E && cp <= 0x0111) return "d";
    if (cp >= 0x0112 && cp <= 0x011B) return "e";
    if (cp >= 0x011C && cp <= 0x0123) return "g";
    if (cp >= 0x0124 && cp <= 0x0127) return "h";
    if (cp >= 0x0128 && cp <= 0x0131) return "i";
    if (cp >= 0x0132 && cp <= 0x0133) return "ij";
    if (cp >= 0x0134 && cp <= 0x0135) return "j";
    if (cp >= 0x0136 && cp <= 0x0138) return "k";
    if (cp >= 0x0139 && cp <= 0x0142) return "l";
    if (cp >= 0x0143 && cp <= 0x014B) return "n";
    if (cp >= 0x014C && cp <= 0x0151) return "o";
    if (cp >= 0x0152 && cp <= 0x0153) return "oe";
    if (cp >= 0x0154 && cp <= 0x0159) return "r";
    if (cp >= 0x015A && cp <= 0x0161) return "s";
    if (cp >= 0x0162 && cp <= 0x0167) return "t";
    if (cp >= 0x0168 && cp <= 0x0173) return "u";
    if (cp >= 0x0174 && cp <= 0x0175) return "w";
    if (cp >= 0x0176 && cp <= 0x0178) return "y";
    if (cp >= 0x0179 && cp <= 0x017E) return "z";
    if (cp == 0x017F) return "s";
    return nullptr;
}

bool is_unicode_space(char32_t cp) {
    return cp == 0x00A0 || (cp >= 0x2000 && cp <= 0x200A) || cp == 0x202F || cp == 0x205F ||
           cp == 0x3000;
}

bool is_dash(char32_t cp) {
    return (cp >= 0x2010 && cp <= 0x2015) || cp == 0x2212;
}

void append_utf8(std::string& out, std::string_view src, std::size_t i, int len) {
    out.append(src.substr(i, static_cast<std::size_t>(len)));
}

}  // namespace

std::string normalize_text(std::string_view raw) {
    std::string out;
    out.reserve(raw.size());
    bool pending_space = false;
    auto push = [&](char c) {
        if (pending_space && !out.empty()) out += ' ';
        pending_space = false;
        out += c;
    };
    auto push_str = [&](const char* s) {
        while (*s) push(*s++);
    };

    for (std::size_t i = 0; i < raw.size();) {
        Decoded d = decode_utf8(raw, i);
        std::size_t adv = d.len == 0 ? 1 : static_cast<std::size_t>(d.len);
        char32_t cp = d.cp;

        if (cp < 0x80) {
            char c = static_cast<char>(cp);
            if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\f' || c == '\v' ||
                c == '-' || c == '_') {
                pending_space = true;
            } else if (c >= 'A' && c <= 'Z') {
                push(static_cast<char>(c - 'A' + 'a'));
            } else {
                push(c);
            }
        } else if (const char* fold = fold_latin(cp)) {
            push_str(fold);
        } else if (cp >= 0x0300 && cp <= 0x036F) {
            // combining mark: drop (handles decomposed input)
        } else if (is_unicode_space(cp) || is_dash(cp)) {
            pending_space = true;
        } else if (cp == 0x2018 || cp == 0x2019) {
            push('\'');
        } else if (cp == 0x201C || cp == 0x201D) {
            push('"');
        } else if (cp == 0x200B || cp == 0xFEFF) {
            // zero-width: drop
        } else if (d.len == 0) {
            // invalid UTF-8 byte: keep as-is
            push(static_cast<char>(static_cast<unsigned char>(raw[i])));
        } else {
            if (pending_space && !out.empty()) out += ' ';
            pending_space = false;
            append_utf8(out, raw, i, d.len);
        }
        i += adv;
    }
    return out;
}

std::vector<std::string_view> word_tokens(std::string_view normalized) {
    std::vector<std::string_view> tokens;
    std::size_t start = 0;
    bool in_token = false;
    for (std::size_t i = 0; i <= normalized.size(); ++i) {
        bool word = i < normalized.size() && is_word_char(static_cast<unsigned char>(normalized[i]));
        if (word && !in_token) {
            start = i;
            in_token = true;
        } else if (!word && in_token) {
            tokens.push_back(normalized.substr(start, i - start));
            in_token = false;
        }
    }
    return tokens;
}

}  // namespace delineate
