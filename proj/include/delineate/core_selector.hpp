#pragma once

#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "delineate/record_model.hpp"

namespace delineate {

enum class SeedMode { Stem, WholeWord };

// One journal-name seed term: an id, a match mode, and surface forms per
// language. Journal names carry no reliable language tag, so matching always
// applies every surface.
struct SeedTerm {
    std::string id;
    SeedMode mode = SeedMode::Stem;
    std::vector<std::pair<MatchLanguage, std::string>> surfaces;
};

struct SeedTermSet {
    std::vector<SeedTerm> terms;

    // Loads the CSV form (term_id, mode, language, surface) and verifies the
    // set covers the fourteen canonical English seeds.
    static SeedTermSet load(const std::filesystem::path& path);
};

// The fourteen seed words every seed file must cover.
const std::vector<std::string>& paper_seed_words();

// Stem surfaces match at token starts; whole-word surfaces match whole tokens
// with a plural "s" allowance. Runs on normalize_text(name).
std::set<std::string> match_journal_name(std::string_view name, const SeedTermSet& seeds);

// Per-journal aggregate used for core selection.
struct JournalProfile {
    std::string journal_id;
    std::string name;
    std::size_t article_count = 0;
    std::map<std::string, double> discipline_shares;  // fractional, sums to <= 1
    std::optional<double> group_ratio;                // share of articles in the designated group
};

inline constexpr std::string_view kUnknownJournalId = "UNKNOWN";

// One profile per distinct journal_id; empty ids group under "UNKNOWN".
// group_code, when non-empty, names the classification group whose share
// becomes group_ratio (e.g. "4405").
std::vector<JournalProfile> profile_journals(const RecordStore& store,
                                             const std::string& group_code = "");

struct CorePolicy {
    std::set<std::string> include_list;
    std::set<std::string> exclude_list;
    std::set<std::string> excluded_divisions;
    double exclusivity_threshold = 1.0;   // share within excluded divisions that excludes
    double review_ratio_threshold = 0.5;  // group_ratio at which a journal is flagged for review

    static CorePolicy defaults();
    static std::set<std::string> load_id_list(const std::filesystem::path& path);
    void validate() const;  // include and exclude lists must be disjoint
};

enum class CoreReason { SeedMatch, IncludeList, ExcludeList, ExcludedDivision, NoMatch };
std::string_view to_string(CoreReason reason);

struct CoreDecision {
    std::string journal_id;
    std::string name;
    bool in_core = false;
    CoreReason reason = CoreReason::NoMatch;
    std::set<std::string> matched_terms;
    std::optional<double> group_ratio;
    bool review_candidate = false;  // high group-ratio, surfaced for manual review
};

struct CoreSelection {
    std::set<std::string> core;        // selected journal ids
    std::vector<CoreDecision> trace;   // one row per profiled journal, sorted by id
    std::vector<std::string> warnings; // policy ids that matched no profiled journal
};

// Deterministic and independent of profile order. Precedence per journal:
// exclude-list, include-list, seed match filtered by division exclusivity.
CoreSelection select_core(const std::vector<JournalProfile>& profiles, const SeedTermSet& seeds,
                          const CorePolicy& policy);

void write_core_list(const CoreSelection& selection, const std::filesystem::path& path);
void write_core_trace(const CoreSelection& selection, const std::filesystem::path& path);
std::set<std::string> load_core_list(const std::filesystem::path& path);

}  // namespace delineate
