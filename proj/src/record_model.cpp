#include "delineate/record_model.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "delineate/util.hpp"

namespace delineate {

using nlohmann::json;

namespace {

std::string lower_trim(std::string_view s) {
    std::string out = trim(s);
    std::transform(out.begin(), out.end(), out.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return out;
}

}  // namespace

json BibRecord::to_json() const {
    json j;
    j["doi"] = doi;
    j["title"] = title;
    if (abstract) {
        j["abstract"] = *abstract;
    }
    j["journal_id"] = journal_id;
    j["journal_name"] = journal_name;
    j["year"] = year;
    j["language"] = std::string(delineate::to_string(language));
    j["disciplines"] = disciplines;
    j["citations"] = citations;
    if (!source_tag.empty()) {
        j["source_tag"] = source_tag;
    }
    return j;
}

ParseResult parse_record(std::string_view line) {
    json j = json::parse(line, nullptr, false);
    if (j.is_discarded() || !j.is_object()) {
        return {std::nullopt, "malformed record line"};
    }

    auto str_field = [&](const char* key) -> std::optional<std::string> {
        auto it = j.find(key);
        if (it == j.end() || it->is_null()) return std::nullopt;
        if (!it->is_string()) return std::nullopt;
        return it->get<std::string>();
    };

    BibRecord rec;
    auto doi = str_field("doi");
    if (!doi || trim(*doi).empty()) {
        return {std::nullopt, "missing doi"};
    }
    rec.doi = lower_trim(*doi);
    rec.title = str_field("title").value_or("");
    rec.abstract = str_field("abstract");
    rec.journal_id = str_field("journal_id").value_or("");
    rec.journal_name = str_field("journal_name").value_or("");

    if (auto it = j.find("year"); it != j.end() && it->is_number_integer()) {
        rec.year = it->get<int>();
    } else {
        return {std::nullopt, "missing or non-integer year"};
    }
    if (rec.year < kMinYear || rec.year > kMaxYear) {
        return {std::nullopt, "year out of range [1400, 2100]: " + std::to_string(rec.year)};
    }

    rec.language = language_from_string(str_field("language").value_or(""));

    if (auto it = j.find("disciplines"); it != j.end() && it->is_array()) {
        for (const auto& d : *it) {
            if (d.is_string()) rec.disciplines.push_back(d.get<std::string>());
        }
    }

    if (auto it = j.find("citations"); it != j.end() && !it->is_null()) {
        if (!it->is_number_integer()) {
            return {std::nullopt, "non-integer citations"};
        }
        rec.citations = it->get<long long>();
        if (rec.citations < 0) {
            return {std::nullopt, "negative citations"};
        }
    }

    rec.source_tag = str_field("source_tag").value_or("");
    return {std::move(rec), ""};
}

json IngestReport::to_json() const {
    return json{{"read", read},
                {"admitted", admitted},
                {"rejected_language", rejected_language},
                {"rejected_invalid", rejected_invalid},
                {"duplicates_dropped", duplicates_dropped}};
}

bool RecordStore::add(BibRecord rec) {
    auto [it, inserted] = by_doi_.try_emplace(rec.doi, records_.size());
    if (!inserted) {
        return false;
    }
    records_.push_back(std::move(rec));
    return true;
}

const BibRecord* RecordStore::find(std::string_view doi) const {
    auto it = by_doi_.find(std::string(doi));
    return it == by_doi_.end() ? nullptr : &records_[it->second];
}

void RecordStore::merge(const RecordStore& other) {
    for (const auto& rec : other.records()) {
        add(rec);
    }
}

void RecordStore::sort_by_doi() {
    std::sort(records_.begin(), records_.end(),
              [](const BibRecord& a, const BibRecord& b) { return a.doi < b.doi; });
    by_doi_.clear();
    for (std::size_t i = 0; i < records_.size(); ++i) {
        by_doi_.emplace(records_[i].doi, i);
    }
}

IngestResult ingest(std::istream& in, const std::string& source_tag) {
    if (!in.good()) {
        throw IoError("unreadable input source: " + source_tag);
    }
    IngestResult result;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) {
            continue;
        }
        ++result.report.read;
        ParseResult parsed = parse_record(line);
        if (!parsed.ok()) {
            ++result.report.rejected_invalid;
            result.rejects.push_back({source_tag, line_no, parsed.error, line});
            continue;
        }
        if (!parsed.admissible()) {
            ++result.report.rejected_language;
            result.rejects.push_back({source_tag, line_no, "language not in {en, es, fr, pt}", line});
            continue;
        }
        BibRecord rec = std::move(*parsed.record);
        if (rec.source_tag.empty()) {
            rec.source_tag = source_tag;
        }
        if (!result.store.add(std::move(rec))) {
            ++result.report.duplicates_dropped;
        } else {
            ++result.report.admitted;
        }
    }
    if (result.report.read > 0 && result.report.rejected_invalid * 2 > result.report.read) {
        throw FormatError("corpus format error: " + std::to_string(result.report.rejected_invalid) +
                          " of " + std::to_string(result.report.read) +
                          " lines failed to parse in " + source_tag);
    }
    return result;
}

IngestResult ingest_files(const std::vector<std::filesystem::path>& paths) {
    IngestResult combined;
    for (const auto& path : paths) {
        std::ifstream in(path);
        if (!in.is_open()) {
            throw IoError("cannot open input: " + path.string());
        }
        IngestResult one = ingest(in, path.filename().string());
        // cross-file dedup: earlier files win
        std::size_t before = combined.store.size();
        combined.store.merge(one.store);
        std::size_t merged = combined.store.size() - before;
        combined.report.read += one.report.read;
        combined.report.admitted += merged;
        combined.report.rejected_language += one.report.rejected_language;
        combined.report.rejected_invalid += one.report.rejected_invalid;
        combined.report.duplicates_dropped +=
            one.report.duplicates_dropped + (one.store.size() - merged);
        combined.rejects.insert(combined.rejects.end(), one.rejects.begin(), one.rejects.end());
    }
    return combined;
}

void write_store(const RecordStore& store, const std::filesystem::path& path) {
    RecordStore sorted = store;
    sorted.sort_by_doi();
    std::string out;
    for (const auto& rec : sorted.records()) {
        out += rec.to_json().dump();
        out += '\n';
    }
    atomic_write_file(path, out);
}

RecordStore load_store(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in.is_open()) {
        throw IoError("cannot open store: " + path.string());
    }
    RecordStore store;
    std::string line;
    std::size_t line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        if (trim(line).empty()) continue;
        ParseResult parsed = parse_record(line);
        if (!parsed.ok()) {
            throw FormatError("corrupt store " + path.string() + " line " +
                              std::to_string(line_no) + ": " + parsed.error);
        }
        store.add(std::move(*parsed.record));
    }
    return store;
}

void write_ingest_report(const IngestReport& report, const std::filesystem::path& path) {
    atomic_write_file(path, report.to_json().dump(2) + "\n");
}

void write_rejects(const std::vector<RejectedLine>& rejects, const std::filesystem::path& path) {
    std::string out;
    for (const auto& r : rejects) {
        json j{{"source", r.source}, {"line_no", r.line_no}, {"reason", r.reason}, {"line", r.line}};
        out += j.dump();
        out += '\n';
    }
    atomic_write_file(path, out);
}

}  // namespace delineate
