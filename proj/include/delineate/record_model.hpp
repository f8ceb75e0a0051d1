#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <nlohmann/json.hpp>

#include "delineate/language.hpp"

namespace delineate {

inline constexpr int kMinYear = 1400;
inline constexpr int kMaxYear = 2100;

// One bibliographic document. Immutable after ingest.
struct BibRecord {
    std::string doi;  // lowercased, trimmed; unique within a store
    std::string title;
    std::optional<std::string> abstract;
    std::string journal_id;
    std::string journal_name;
    int year = 0;
    Language language = Language::Other;
    std::vector<std::string> disciplines;
    long long citations = 0;
    std::string source_tag;

    nlohmann::json to_json() const;
};

struct ParseResult {
    std::optional<BibRecord> record;  // empty on parse / validation error
    std::string error;                // reason when record is empty

    bool ok() const { return record.has_value(); }
    bool admissible() const { return record && delineate::admissible(record->language); }
};

// Parses one serialized record (a JSON object on a single line). Malformed
// JSON, missing/empty doi, out-of-range year, or negative citations yield an
// error; an unsupported language parses fine but is not admissible.
ParseResult parse_record(std::string_view line);

struct IngestReport {
    std::size_t read = 0;  // non-blank lines consumed
    std::size_t admitted = 0;
    std::size_t rejected_language = 0;
    std::size_t rejected_invalid = 0;
    std::size_t duplicates_dropped = 0;

    nlohmann::json to_json() const;
    bool conserved() const {
        return read == admitted + rejected_language + rejected_invalid + duplicates_dropped;
    }
};

struct RejectedLine {
    std::string source;
    std::size_t line_no = 0;
    std::string reason;
    std::string line;
};

// Admitted records, deduplicated by doi, first occurrence wins.
class RecordStore {
  public:
    bool add(BibRecord rec);  // false (and drops rec) when the doi exists
    const BibRecord* find(std::string_view doi) const;
    std::size_t size() const { return records_.size(); }
    bool empty() const { return records_.empty(); }
    const std::vector<BibRecord>& records() const { return records_; }

    // Keeps this store's record on doi conflicts; other's order is preserved
    // for its new entries, so shard merges are associative and order-stable.
    void merge(const RecordStore& other);

    void sort_by_doi();

  private:
    std::vector<BibRecord> records_;
    std::unordered_map<std::string, std::size_t> by_doi_;
};

struct IngestResult {
    RecordStore store;
    IngestReport report;
    std::vector<RejectedLine> rejects;
};

// Ingests newline-delimited records. Throws FormatError when more than half
// of the consumed lines fail to parse.
IngestResult ingest(std::istream& in, const std::string& source_tag);
IngestResult ingest_files(const std::vector<std::filesystem::path>& paths);

// Canonical persisted form: one JSON object per line, sorted by doi.
void write_store(const RecordStore& store, const std::filesystem::path& path);
RecordStore load_store(const std::filesystem::path& path);

void write_ingest_report(const IngestReport& report, const std::filesystem::path& path);
void write_rejects(const std::vector<RejectedLine>& rejects, const std::filesystem::path& path);

}  // namespace delineate
