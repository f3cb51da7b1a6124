#include <cmath>
#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "ringkepler/cli.hpp"

namespace ringkepler::cli {

std::string format_real(double v) {
    if (std::isnan(v)) return "nan";
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v == 0.0 ? 0.0 : v);  // folds -0 into 0
    return buf;
}

namespace {

std::string csv_cell(const Cell& c) {
    struct Visitor {
        std::string operator()(std::monostate) const { return ""; }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(double v) const { return format_real(v); }
        std::string operator()(const std::string& v) const { return v; }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
    };
    return std::visit(Visitor{}, c);
}

std::string json_string(const std::string& s) { return nlohmann::json(s).dump(); }

std::string json_cell(const Cell& c) {
    struct Visitor {
        std::string operator()(std::monostate) const { return "null"; }
        std::string operator()(long long v) const { return std::to_string(v); }
        std::string operator()(double v) const { return std::isfinite(v) ? format_real(v) : "null"; }
        std::string operator()(const std::string& v) const { return json_string(v); }
        std::string operator()(bool v) const { return v ? "true" : "false"; }
    };
    return std::visit(Visitor{}, c);
}

}  // namespace

std::string to_csv(const Document& doc) {
    std::ostringstream out;
    out << "# " << doc.schema << " |";
    for (const auto& [key, value] : doc.metadata) out << ' ' << key << '=' << csv_cell(value);
    out << " | " << doc.conventions << '\n';
    for (std::size_t i = 0; i < doc.columns.size(); ++i) out << (i ? "," : "") << doc.columns[i];
    out << '\n';
    for (const auto& row : doc.rows) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << csv_cell(row[i]);
        out << '\n';
    }
    return out.str();
}

std::string to_json(const Document& doc) {
    std::ostringstream out;
    out << "{\n  \"schema\": " << json_string(doc.schema) << ",\n  \"conventions\": " << json_string(doc.conventions)
        << ",\n  \"metadata\": {";
    for (std::size_t i = 0; i < doc.metadata.size(); ++i) {
        out << (i ? ", " : "") << json_string(doc.metadata[i].first) << ": " << json_cell(doc.metadata[i].second);
    }
    out << "},\n  \"columns\": [";
    for (std::size_t i = 0; i < doc.columns.size(); ++i) out << (i ? ", " : "") << json_string(doc.columns[i]);
    out << "],\n  \"rows\": [";
    for (std::size_t r = 0; r < doc.rows.size(); ++r) {
        out << (r ? ",\n    {" : "\n    {");
        for (std::size_t i = 0; i < doc.rows[r].size(); ++i) {
            out << (i ? ", " : "") << json_string(doc.columns[i]) << ": " << json_cell(doc.rows[r][i]);
        }
        out << '}';
    }
    out << (doc.rows.empty() ? "]\n}\n" : "\n  ]\n}\n");
    return out.str();
}

}  // namespace ringkepler::cli
