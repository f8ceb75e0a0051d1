#include "delineate/core_selector.hpp"

#include <algorithm>

#include "delineate/csv.hpp"
#include "delineate/normalize.hpp"
#include "delineate/util.hpp"

namespace delineate {

const std::vector<std::string>& paper_seed_words() {
    static const std::vector<std::string> words = {
        "gender", "sex",     "woman",      "women", "feminism", "feminist", "masculinities",
        "lgbt",   "lesbian", "gay",        "homosexual", "bisexual", "queer", "girl"};
    return words;
}

SeedTermSet SeedTermSet::load(const std::filesystem::path& path) {
    csv::Table table = csv::parse(read_file(path), true);
    SeedTermSet set;
    std::map<std::string, std::size_t> index;
    for (const auto& row : table.rows) {
        if (row.size() < 4) {
            throw FormatError("seed file row needs term_id, mode, language, surface: " +
                              path.string());
        }
        const std::string& id = row[0];
        SeedMode mode;
        if (row[1] == "stem") {
            mode = SeedMode::Stem;
        } else if (row[1] == "word") {
            mode = SeedMode::WholeWord;
        } else {
            throw FormatError("seed mode must be 'stem' or 'word', got '" + row[1] + "'");
        }
        std::string surface = normalize_text(row[3]);
        if (surface.empty()) {
            throw FormatError("empty seed surface for term " + id);
        }
        auto [it, inserted] = index.try_emplace(id, set.terms.size());
        if (inserted) {
            set.terms.push_back({id, mode, {}});
        } else if (set.terms[it->second].mode != mode) {
            throw FormatError("seed term " + id + " declared with two different modes");
        }
        set.terms[it->second].surfaces.emplace_back(match_language_from_string(row[2]), surface);
    }
    std::vector<std::string> missing;
    for (const auto& word : paper_seed_words()) {
        if (match_journal_name(word, set).empty()) {
            missing.push_back(word);
        }
    }
    if (!missing.empty()) {
        throw FormatError("seed set does not cover required seeds: " + join(missing, ", "));
    }
    return set;
}

std::set<std::string> match_journal_name(std::string_view name, const SeedTermSet& seeds) {
    std::string normalized = normalize_text(name);
    std::vector<std::string_view> tokens = word_tokens(normalized);
    std::set<std::string> matched;
    for (const auto& term : seeds.terms) {
        bool hit = false;
        for (const auto& [lang, surface] : term.surfaces) {
            (void)lang;  // journal names have no language tag; apply all surfaces
            for (const auto& token : tokens) {
                if (term.mode == SeedMode::Stem) {
                    hit = token.size() >= surface.size() &&
                          token.substr(0, surface.size()) == surface;
                } else {
                    hit = token == surface ||
                          (token.size() == surface.size() + 1 && token.back() == 's' &&
                           token.substr(0, surface.size()) == surface);
                }
                if (hit) break;
            }
            if (hit) break;
        }
        if (hit) {
            matched.insert(term.id);
        }
    }
    return matched;
}

std::vector<JournalProfile> profile_journals(const RecordStore& store,
                                             const std::string& group_code) {
    if (store.empty()) {
        throw ParameterError("profile_journals: record store is empty");
    }
    std::map<std::string, JournalProfile> by_id;
    std::map<std::string, std::size_t> group_hits;
    for (const auto& rec : store.records()) {
        std::string id = rec.journal_id.empty() ? std::string(kUnknownJournalId) : rec.journal_id;
        auto [it, inserted] = by_id.try_emplace(id);
        JournalProfile& prof = it->second;
        if (inserted) {
            prof.journal_id = id;
            prof.name = rec.journal_name;
        }
        prof.article_count += 1;
        if (!rec.disciplines.empty()) {
            double w = 1.0 / static_cast<double>(rec.disciplines.size());
            for (const auto& d : rec.disciplines) {
                prof.discipline_shares[d] += 0.0;  // ensure key exists before weighting
                prof.discipline_shares[d] += w;
            }
        }
        if (!group_code.empty()) {
            bool in_group = std::find(rec.disciplines.begin(), rec.disciplines.end(), group_code) !=
                            rec.disciplines.end();
            if (in_group) group_hits[id] += 1;
        }
    }
    std::vector<JournalProfile> profiles;
    profiles.reserve(by_id.size());
    for (auto& [id, prof] : by_id) {
        for (auto& [d, w] : prof.discipline_shares) {
            w /= static_cast<double>(prof.article_count);
        }
        if (!group_code.empty()) {
            auto it = group_hits.find(id);
            double hits = it == group_hits.end() ? 0.0 : static_cast<double>(it->second);
            prof.group_ratio = hits / static_cast<double>(prof.article_count);
        }
        profiles.push_back(std::move(prof));
    }
    return profiles;
}

CorePolicy CorePolicy::defaults() {
    CorePolicy policy;
    policy.excluded_divisions = {"Medical and Health Sciences", "Biological Sciences",
                                 "Engineering", "Psychology and Cognitive Sciences"};
    return policy;
}

std::set<std::string> CorePolicy::load_id_list(const std::filesystem::path& path) {
    std::set<std::string> ids;
    for (const auto& raw_line : split(read_file(path), '\n')) {
        std::string line = trim(raw_line);
        if (line.empty() || line[0] == '#') continue;
        ids.insert(line);
    }
    return ids;
}

void CorePolicy::validate() const {
    std::vector<std::string> both;
    std::set_intersection(include_list.begin(), include_list.end(), exclude_list.begin(),
                          exclude_list.end(), std::back_inserter(both));
    if (!both.empty()) {
        throw ParameterError("core policy lists overlap: " + join(both, ", "));
    }
}

std::string_view to_string(CoreReason reason) {
    switch (reason) {
        case CoreReason::SeedMatch: return "seed-match";
        case CoreReason::IncludeList: return "include-list";
        case CoreReason::ExcludeList: return "exclude-list";
        case CoreReason::ExcludedDivision: return "excluded-division";
        default: return "no-match";
    }
}

namespace {

double excluded_division_share(const JournalProfile& prof, const CorePolicy& policy) {
    double share = 0.0;
    double total = 0.0;
    for (const auto& [discipline, w] : prof.discipline_shares) {
        total += w;
        if (policy.excluded_divisions.count(discipline) > 0) {
            share += w;
        }
    }
    // Exclusivity is judged over classified weight only; a journal with no
    // discipline data is never "exclusively" in the excluded divisions.
    if (total <= 0.0) return 0.0;
    return share / total;
}

}  // namespace

CoreSelection select_core(const std::vector<JournalProfile>& profiles, const SeedTermSet& seeds,
                          const CorePolicy& policy) {
    policy.validate();
    CoreSelection selection;

    std::vector<const JournalProfile*> ordered;
    ordered.reserve(profiles.size());
    for (const auto& prof : profiles) ordered.push_back(&prof);
    std::sort(ordered.begin(), ordered.end(), [](const JournalProfile* a, const JournalProfile* b) {
        return a->journal_id < b->journal_id;
    });

    std::set<std::string> seen_ids;
    for (const JournalProfile* prof : ordered) {
        seen_ids.insert(prof->journal_id);
        CoreDecision decision;
        decision.journal_id = prof->journal_id;
        decision.name = prof->name;
        decision.matched_terms = match_journal_name(prof->name, seeds);
        decision.group_ratio = prof->group_ratio;
        decision.review_candidate =
            prof->group_ratio && *prof->group_ratio >= policy.review_ratio_threshold;

        if (policy.exclude_list.count(prof->journal_id) > 0) {
            decision.in_core = false;
            decision.reason = CoreReason::ExcludeList;
        } else if (policy.include_list.count(prof->journal_id) > 0) {
            decision.in_core = true;
            decision.reason = CoreReason::IncludeList;
        } else if (!decision.matched_terms.empty()) {
            if (excluded_division_share(*prof, policy) >= policy.exclusivity_threshold) {
                decision.in_core = false;
                decision.reason = CoreReason::ExcludedDivision;
            } else {
                decision.in_core = true;
                decision.reason = CoreReason::SeedMatch;
            }
        } else {
            decision.in_core = false;
            decision.reason = CoreReason::NoMatch;
        }

        if (decision.in_core) {
            selection.core.insert(decision.journal_id);
        }
        selection.trace.push_back(std::move(decision));
    }

    for (const auto& id : policy.include_list) {
        if (seen_ids.count(id) == 0) {
            selection.warnings.push_back("include-list journal not in corpus: " + id);
        }
    }
    for (const auto& id : policy.exclude_list) {
        if (seen_ids.count(id) == 0) {
            selection.warnings.push_back("exclude-list journal not in corpus: " + id);
        }
    }
    return selection;
}

void write_core_list(const CoreSelection& selection, const std::filesystem::path& path) {
    std::string out = "# core journal ids\n";
    for (const auto& id : selection.core) {
        out += id;
        out += '\n';
    }
    atomic_write_file(path, out);
}

void write_core_trace(const CoreSelection& selection, const std::filesystem::path& path) {
    std::string out = csv::row(
        {"journal_id", "name", "decision", "reason", "matched_terms", "group_ratio",
         "review_candidate"});
    for (const auto& d : selection.trace) {
        std::vector<std::string> terms(d.matched_terms.begin(), d.matched_terms.end());
        out += csv::row({d.journal_id, d.name, d.in_core ? "core" : "excluded",
                         std::string(to_string(d.reason)), join(terms, "|"),
                         d.group_ratio ? format_double(*d.group_ratio) : "",
                         d.review_candidate ? "yes" : ""});
    }
    atomic_write_file(path, out);
}

std::set<std::string> load_core_list(const std::filesystem::path& path) {
    return CorePolicy::load_id_list(path);
}

}  // namespace delineate
