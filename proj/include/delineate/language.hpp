#pragma once

#include <string>
#include <string_view>

namespace delineate {

// Record language. Only the four pipeline languages are admissible.
enum class Language { En, Es, Fr, Pt, Other };

// Language tag of a seed surface or keyword pattern. Any applies everywhere.
enum class MatchLanguage { En, Es, Fr, Pt, Any };

Language language_from_string(std::string_view s);
std::string_view to_string(Language lang);

MatchLanguage match_language_from_string(std::string_view s);
std::string_view to_string(MatchLanguage lang);

inline bool admissible(Language lang) {
    return lang != Language::Other;
}

// True when a pattern tagged `pat` applies to a record in language `rec`.
inline bool applies_to(MatchLanguage pat, Language rec) {
    if (pat == MatchLanguage::Any) return true;
    switch (rec) {
        case Language::En: return pat == MatchLanguage::En;
        case Language::Es: return pat == MatchLanguage::Es;
        case Language::Fr: return pat == MatchLanguage::Fr;
        case Language::Pt: return pat == MatchLanguage::Pt;
        default: return false;
    }
}

}  // namespace delineate
