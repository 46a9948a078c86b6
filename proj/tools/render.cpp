#include "render.hpp"

#include <set>

namespace realhur::cli {

namespace {

std::string scalar(const ojson& v) {
    if (v.is_string()) return v.get<std::string>();
    return v.dump();
}

void text(const ojson& v, const std::string& indent, std::ostream& out) {
    for (const auto& [key, value] : v.items()) {
        if (value.is_structured() && !value.empty()) {
            out << indent << key << ":\n";
            text(value, indent + "  ", out);
        } else {
            out << indent << key << ": " << scalar(value) << '\n';
        }
    }
}

std::string csv_field(const ojson& v) {
    std::string s = scalar(v);
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char c : s) {
        if (c == '"') q += '"';
        q += c;
    }
    return q + '"';
}

const ojson* table_of(const ojson& result) {
    for (const char* key : {"entries", "records", "solutions", "polynomials", "classes"}) {
        if (result.contains(key) && result[key].is_array() && !result[key].empty() && result[key][0].is_object()) {
            return &result[key];
        }
    }
    return nullptr;
}

}  // namespace

void render(const ojson& artifact, OutputFormat format, std::ostream& out) {
    switch (format) {
        case OutputFormat::json:
            out << artifact.dump(2) << '\n';
            return;
        case OutputFormat::text:
            text(artifact, "", out);
            return;
        case OutputFormat::csv: break;
    }
    out << "# command=" << scalar(artifact["command"]) << '\n';
    out << "# config=" << artifact["config"].dump() << '\n';
    const auto& result = artifact["result"];
    const ojson* rows = result.is_object() ? table_of(result) : nullptr;
    if (!rows) {
        std::vector<std::string> header;
        for (const auto& [k, v] : result.items()) header.push_back(k);
        for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
        out << '\n';
        std::size_t i = 0;
        for (const auto& [k, v] : result.items()) out << (i++ ? "," : "") << csv_field(v);
        out << '\n';
        return;
    }
    std::vector<std::string> header;
    std::set<std::string> seen;
    for (const auto& row : *rows) {
        for (const auto& [k, v] : row.items()) {
            if (seen.insert(k).second) header.push_back(k);
        }
    }
    for (std::size_t i = 0; i < header.size(); ++i) out << (i ? "," : "") << header[i];
    out << '\n';
    for (const auto& row : *rows) {
        for (std::size_t i = 0; i < header.size(); ++i) {
            if (i) out << ',';
            if (row.contains(header[i])) out << csv_field(row[header[i]]);
        }
        out << '\n';
    }
}

}  // namespace realhur::cli
