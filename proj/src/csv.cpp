#include "delineate/csv.hpp"

#include "delineate/util.hpp"

namespace delineate::csv {

std::string escape(std::string_view field) {
    bool needs_quotes = field.find_first_of(",\"\r\n") != std::string_view::npos;
    if (!needs_quotes) {
        return std::string(field);
    }
    std::string out = "\"";
    for (char c : field) {
        if (c == '"') out += '"';
        out += c;
    }
    out += '"';
    return out;
}

std::string row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i > 0) out += ',';
        out += escape(fields[i]);
    }
    out += '\n';
    return out;
}

namespace {

bool is_comment_or_blank(std::string_view line) {
    for (char c : line) {
        if (c == ' ' || c == '\t') continue;
        return c == '#';
    }
    return true;
}

}  // namespace

Table parse(std::string_view text, bool expect_header) {
    Table table;
    std::vector<std::string> fields;
    std::string field;
    bool in_quotes = false;
    bool row_has_data = false;
    std::size_t line_start = 0;

    auto flush_row = [&](std::string_view raw_line) {
        fields.push_back(field);
        field.clear();
        if (!is_comment_or_blank(raw_line)) {
            if (expect_header && table.header.empty()) {
                table.header = fields;
            } else {
                if (!table.header.empty() && fields.size() < table.header.size()) {
                    fields.resize(table.header.size());
                }
                table.rows.push_back(fields);
            }
        }
        fields.clear();
        row_has_data = false;
    };

    for (std::size_t i = 0; i < text.size(); ++i) {
        char c = text[i];
        if (in_quotes) {
            if (c == '"') {
                if (i + 1 < text.size() && text[i + 1] == '"') {
                    field += '"';
                    ++i;
                } else {
                    in_quotes = false;
                }
            } else {
                field += c;
            }
            continue;
        }
        switch (c) {
            case '"':
                in_quotes = true;
                row_has_data = true;
                break;
            case ',':
                fields.push_back(field);
                field.clear();
                row_has_data = true;
                break;
            case '\r':
                break;
            case '\n':
                flush_row(text.substr(line_start, i - line_start));
                line_start = i + 1;
                break;
            default:
                field += c;
                row_has_data = true;
                break;
        }
    }
    if (in_quotes) {
        throw FormatError("csv: unterminated quoted field");
    }
    if (row_has_data || !fields.empty()) {
        flush_row(text.substr(line_start));
    }
    return table;
}

}  // namespace delineate::csv
