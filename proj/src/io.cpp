#include "knotpoly/io.hpp"

#include <cctype>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "knotpoly/error.hpp"

namespace knotpoly {

namespace {

using Rows = std::vector<std::vector<int>>;

bool looks_like_json(std::string_view text) {
    const auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string_view::npos && text[first] == '{';
}

Rows parse_rows(std::string_view text) {
    Rows rows;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) end = text.size();
        std::string_view line = text.substr(pos, end - pos);
        if (auto hash = line.find('#'); hash != std::string_view::npos)
            line = line.substr(0, hash);
        std::vector<int> row;
        std::size_t i = 0;
        while (i < line.size()) {
            const unsigned char ch = static_cast<unsigned char>(line[i]);
            if (std::isspace(ch) || ch == ',') {
                ++i;
                continue;
            }
            bool negative = false;
            const std::size_t start = i;
            if (line[i] == '-') {
                negative = true;
                ++i;
            }
            if (i >= line.size() || !std::isdigit(static_cast<unsigned char>(line[i])))
                throw ParseError("expected an integer", pos + start);
            long long v = 0;
            while (i < line.size() && std::isdigit(static_cast<unsigned char>(line[i]))) {
                v = v * 10 + (line[i++] - '0');
                if (v > 1'000'000'000) throw ParseError("integer too large", pos + start);
            }
            row.push_back(static_cast<int>(negative ? -v : v));
        }
        if (!row.empty()) rows.push_back(std::move(row));
        pos = end + 1;
    }
    if (rows.empty()) throw StructuralError("table file contains no rows");
    return rows;
}

Rows json_matrix(const nlohmann::json& doc, const char* key) {
    if (!doc.contains(key)) throw StructuralError(std::string("missing field \"") + key + "\"");
    const auto& m = doc[key];
    if (!m.is_array()) throw StructuralError(std::string("field \"") + key + "\" must be a matrix");
    Rows rows;
    for (const auto& r : m) {
        if (!r.is_array()) throw StructuralError(std::string("rows of \"") + key + "\" must be arrays");
        std::vector<int> row;
        for (const auto& v : r) {
            if (!v.is_number_integer()) throw StructuralError("table entries must be integers");
            row.push_back(v.get<int>());
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

nlohmann::json parse_json(std::string_view text) {
    try {
        auto doc = nlohmann::json::parse(text);
        if (!doc.is_object()) throw StructuralError("table JSON must be an object");
        return doc;
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what(), e.byte);
    }
}

void check_declared_size(const nlohmann::json& doc, int actual) {
    if (!doc.contains("n")) return;
    if (!doc["n"].is_number_integer() || doc["n"].get<int>() != actual)
        throw StructuralError("declared n = " + doc["n"].dump() + " does not match table size " +
                              std::to_string(actual));
}

}  // namespace

QuandleTable parse_quandle(std::string_view text) {
    if (looks_like_json(text)) {
        const auto doc = parse_json(text);
        auto t = QuandleTable::from_rows(json_matrix(doc, "matrix"));
        check_declared_size(doc, t.size());
        return t;
    }
    return QuandleTable::from_rows(parse_rows(text));
}

BiquandleTable parse_biquandle(std::string_view text) {
    if (looks_like_json(text)) {
        const auto doc = parse_json(text);
        BiquandleTable t({OpTable::from_rows(json_matrix(doc, "b1")),
                          OpTable::from_rows(json_matrix(doc, "b2")),
                          OpTable::from_rows(json_matrix(doc, "b3")),
                          OpTable::from_rows(json_matrix(doc, "b4"))});
        check_declared_size(doc, t.size());
        return t;
    }
    return BiquandleTable::from_block_matrix(parse_rows(text));
}

AnyTable parse_table(std::string_view text, bool biquandle) {
    if (biquandle) return parse_biquandle(text);
    return parse_quandle(text);
}

namespace {

std::string rows_to_text(const Rows& rows) {
    std::ostringstream os;
    for (const auto& r : rows) {
        for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
        os << "\n";
    }
    return os.str();
}

}  // namespace

std::string to_text(const QuandleTable& t) { return rows_to_text(t.op().rows()); }
std::string to_text(const BiquandleTable& t) { return rows_to_text(t.block_matrix()); }

std::string to_json(const QuandleTable& t) {
    nlohmann::json doc{{"n", t.size()}, {"matrix", t.op().rows()}};
    return doc.dump();
}

std::string to_json(const BiquandleTable& t) {
    nlohmann::json doc{{"n", t.size()},
                       {"b1", t.block(1).rows()},
                       {"b2", t.block(2).rows()},
                       {"b3", t.block(3).rows()},
                       {"b4", t.block(4).rows()}};
    return doc.dump();
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read file '" + path + "'");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

}  // namespace knotpoly
