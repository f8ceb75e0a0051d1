#include "delineate/language.hpp"

#include "delineate/util.hpp"

namespace delineate {

Language language_from_string(std::string_view s) {
    if (s == "en") return Language::En;
    if (s == "es") return Language::Es;
    if (s == "fr") return Language::Fr;
    if (s == "pt") return Language::Pt;
    return Language::Other;
}

std::string_view to_string(Language lang) {
    switch (lang) {
        case Language::En: return "en";
        case Language::Es: return "es";
        case Language::Fr: return "fr";
        case Language::Pt: return "pt";
        default: return "other";
    }
}

MatchLanguage match_language_from_string(std::string_view s) {
    if (s == "en") return MatchLanguage::En;
    if (s == "es") return MatchLanguage::Es;
    if (s == "fr") return MatchLanguage::Fr;
    if (s == "pt") return MatchLanguage::Pt;
    if (s == "any" || s.empty()) return MatchLanguage::Any;
    throw FormatError("unknown pattern language tag: " + std::string(s));
}

std::string_view to_string(MatchLanguage lang) {
    switch (lang) {
        case MatchLanguage::En: return "en";
        case MatchLanguage::Es: return "es";
        case MatchLanguage::Fr: return "fr";
        case MatchLanguage::Pt: return "pt";
        default: return "any";
    }
}

}  // namespace delineate
