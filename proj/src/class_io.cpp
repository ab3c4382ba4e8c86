#include "abstain/class_io.hpp"

#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

namespace abstain {

ParseError::ParseError(std::size_t line, std::size_t column, const std::string& msg)
    : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + msg),
      line_(line),
      column_(column) {}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> cells;
    std::string cur;
    for (char c : line) {
        if (c == ',') {
            cells.push_back(std::move(cur));
            cur.clear();
        } else if (c != '\r') {
            cur += c;
        }
    }
    cells.push_back(std::move(cur));
    for (auto& s : cells) {
        auto b = s.find_first_not_of(" \t");
        auto e = s.find_last_not_of(" \t");
        s = b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
    }
    return cells;
}

namespace {

bool blank(const std::string& line) { return line.find_first_not_of(" \t\r") == std::string::npos; }

}  // namespace

HypothesisClass read_class_csv(std::istream& in, bool dedup) {
    std::string line;
    std::size_t lineno = 0;
    std::vector<std::string> header;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        header = split_csv_line(line);
        break;
    }
    if (header.empty()) throw ParseError(1, 1, "missing header line");
    if (header[0] != "x") throw ParseError(lineno, 1, "header must start with 'x'");
    std::vector<std::string> points(header.begin() + 1, header.end());
    for (std::size_t i = 0; i < points.size(); ++i)
        if (points[i].empty()) throw ParseError(lineno, i + 2, "empty point identifier");
    Domain domain;
    try {
        domain = Domain(points);
    } catch (const std::invalid_argument& e) {
        throw ParseError(lineno, 1, e.what());
    }

    std::vector<HypothesisClass::Row> rows;
    while (std::getline(in, line)) {
        ++lineno;
        if (blank(line)) continue;
        auto cells = split_csv_line(line);
        if (cells.size() != points.size() + 1)
            throw ParseError(lineno, 1,
                             "expected " + std::to_string(points.size() + 1) + " fields, got " +
                                 std::to_string(cells.size()));
        if (cells[0].empty()) throw ParseError(lineno, 1, "empty hypothesis name");
        std::vector<Label> labels;
        for (std::size_t c = 1; c < cells.size(); ++c) {
            auto y = parse_label(cells[c]);
            if (!y) throw ParseError(lineno, c + 1, "label '" + cells[c] + "' is not -1 or +1");
            labels.push_back(*y);
        }
        rows.emplace_back(cells[0], std::move(labels));
    }
    try {
        return HypothesisClass::from_table(std::move(domain), std::move(rows), dedup);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

HypothesisClass read_class_json(std::istream& in, bool dedup) {
    nlohmann::ordered_json j;
    try {
        j = nlohmann::ordered_json::parse(in);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(e.what());
    }
    if (!j.is_object() || !j.contains("domain") || !j.contains("hypotheses"))
        throw ParseError("class JSON needs 'domain' and 'hypotheses'");
    if (!j["domain"].is_array()) throw ParseError("'domain' must be an array");
    std::vector<std::string> points;
    for (const auto& p : j["domain"]) {
        if (p.is_string())
            points.push_back(p.get<std::string>());
        else if (p.is_number_integer())
            points.push_back(std::to_string(p.get<long long>()));
        else
            throw ParseError("domain entries must be strings or integers");
    }
    if (!j["hypotheses"].is_object()) throw ParseError("'hypotheses' must be an object");
    std::vector<HypothesisClass::Row> rows;
    for (const auto& [name, vals] : j["hypotheses"].items()) {
        if (!vals.is_array()) throw ParseError("hypothesis '" + name + "' must map to an array");
        std::vector<Label> labels;
        std::size_t col = 0;
        for (const auto& v : vals) {
            ++col;
            std::optional<Label> y;
            if (v.is_number_integer())
                y = parse_label(std::to_string(v.get<long long>()));
            else if (v.is_string())
                y = parse_label(v.get<std::string>());
            if (!y) throw ParseError("hypothesis '" + name + "' entry " + std::to_string(col) + " is not -1 or +1");
            labels.push_back(*y);
        }
        rows.emplace_back(name, std::move(labels));
    }
    try {
        return HypothesisClass::from_table(Domain(std::move(points)), std::move(rows), dedup);
    } catch (const std::invalid_argument& e) {
        throw ParseError(e.what());
    }
}

HypothesisClass load_class(const std::string& path, bool dedup) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    const bool json = path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0;
    return json ? read_class_json(in, dedup) : read_class_csv(in, dedup);
}

void write_class_csv(std::ostream& out, const HypothesisClass& h) {
    out << 'x';
    for (const auto& p : h.domain().points()) out << ',' << p;
    out << '\n';
    for (std::size_t i = 0; i < h.size(); ++i) {
        out << h.name(i);
        for (auto y : h.row(i)) out << ',' << to_string(y);
        out << '\n';
    }
}

}  // namespace abstain
