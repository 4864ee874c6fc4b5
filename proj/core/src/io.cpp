#include "linoep/io.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <utility>

#include <json.hpp>

namespace linoep {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

double parse_number(std::string_view token, std::size_t line, std::size_t column) {
    std::size_t begin = 0;
    while (begin < token.size() && is_blank(token[begin])) ++begin;
    std::size_t end = token.size();
    while (end > begin && is_blank(token[end - 1])) --end;
    if (begin == end) throw ParseError("empty field", line, column + begin);

    std::string_view body = token.substr(begin, end - begin);
    if (body.front() == '+') body.remove_prefix(1);  // from_chars rejects '+'

    double value = 0.0;
    const auto [ptr, ec] =
        std::from_chars(body.data(), body.data() + body.size(), value);
    if (ec != std::errc{} || ptr != body.data() + body.size()) {
        throw ParseError("invalid number '" + std::string(token.substr(begin, end - begin)) + "'",
                         line, column + begin);
    }
    if (!std::isfinite(value)) {
        throw ParseError("non-finite value '" + std::string(body) + "'", line,
                         column + begin);
    }
    return value;
}

// Byte offset -> 1-based line/column, for JSON diagnostics.
std::pair<std::size_t, std::size_t> offset_to_position(std::string_view text,
                                                       std::size_t offset) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            column = 1;
        } else {
            ++column;
        }
    }
    return {line, column};
}

}  // namespace

SetFormat format_from_path(const std::filesystem::path& path) {
    return path.extension() == ".json" ? SetFormat::Json : SetFormat::Csv;
}

VectorSet parse_csv_set(std::string_view text) {
    std::vector<DenseVector> rows;
    std::size_t expected_width = 0;

    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t eol = text.find('\n', pos);
        std::string_view line = text.substr(
            pos, eol == std::string_view::npos ? text.size() - pos : eol - pos);
        ++line_no;
        pos = eol == std::string_view::npos ? text.size() + 1 : eol + 1;

        std::size_t first = 0;
        while (first < line.size() && is_blank(line[first])) ++first;
        if (first == line.size()) continue;       // blank line
        if (line[first] == '#') continue;         // comment / header

        std::vector<double> values;
        std::size_t cell_start = 0;
        while (true) {
            const std::size_t comma = line.find(',', cell_start);
            const std::size_t cell_end =
                comma == std::string_view::npos ? line.size() : comma;
            values.push_back(parse_number(
                line.substr(cell_start, cell_end - cell_start), line_no,
                cell_start + 1));
            if (comma == std::string_view::npos) break;
            cell_start = comma + 1;
        }

        if (expected_width == 0) {
            expected_width = values.size();
        } else if (values.size() != expected_width) {
            throw ParseError("row has " + std::to_string(values.size()) +
                                 " values, expected " + std::to_string(expected_width),
                             line_no, 1);
        }
        rows.emplace_back(std::move(values));
    }

    if (rows.empty()) throw ParseError("input contains no vectors", 1, 1);
    return VectorSet(std::move(rows));
}

VectorSet parse_json_set(std::string_view text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        const auto [line, column] = offset_to_position(text, e.byte > 0 ? e.byte - 1 : 0);
        throw ParseError("malformed JSON: " + std::string(e.what()), line, column);
    }

    if (!doc.is_object() || !doc.contains("vectors")) {
        throw ParseError("expected an object with a 'vectors' field", 1, 1);
    }
    const nlohmann::json& vectors = doc["vectors"];
    if (!vectors.is_array() || vectors.empty()) {
        throw ParseError("'vectors' must be a non-empty list", 1, 1);
    }

    std::vector<DenseVector> rows;
    rows.reserve(vectors.size());
    std::size_t expected_width = 0;
    std::size_t index = 0;
    for (const nlohmann::json& row : vectors) {
        ++index;
        if (!row.is_array() || row.empty()) {
            throw ParseError("vector " + std::to_string(index) +
                                 " must be a non-empty list of numbers",
                             1, 1);
        }
        std::vector<double> values;
        values.reserve(row.size());
        for (const nlohmann::json& cell : row) {
            if (!cell.is_number()) {
                throw ParseError("vector " + std::to_string(index) +
                                     " contains a non-numeric entry",
                                 1, 1);
            }
            values.push_back(cell.get<double>());
        }
        if (expected_width == 0) {
            expected_width = values.size();
        } else if (values.size() != expected_width) {
            throw ParseError("vector " + std::to_string(index) + " has " +
                                 std::to_string(values.size()) +
                                 " entries, expected " + std::to_string(expected_width),
                             1, 1);
        }
        rows.emplace_back(std::move(values));
    }
    return VectorSet(std::move(rows));
}

VectorSet read_vector_set(const std::filesystem::path& path,
                          std::optional<SetFormat> format) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw FileError("cannot open '" + path.string() + "'");
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();

    const SetFormat effective = format.value_or(format_from_path(path));
    return effective == SetFormat::Json ? parse_json_set(text)
                                        : parse_csv_set(text);
}

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17e", value);
    return buf;
}

std::string format_csv_set(const VectorSet& set) {
    std::string out;
    for (const DenseVector& v : set) {
        for (std::size_t j = 0; j < v.dim(); ++j) {
            if (j > 0) out += ',';
            out += format_double(v[j]);
        }
        out += '\n';
    }
    return out;
}

std::string format_json_set(const VectorSet& set) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const DenseVector& v : set) {
        rows.push_back(v.entries());
    }
    nlohmann::ordered_json doc;
    doc["vectors"] = std::move(rows);
    return doc.dump(2) + "\n";
}

}  // namespace linoep
