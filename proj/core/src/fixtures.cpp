#include "hyperchar/fixtures.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <istream>
#include <string_view>

#include <json.hpp>

#include "hyperchar/error.hpp"

namespace hyperchar {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) return {};
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

u64 parse_number(std::string_view text, const std::string& source, std::size_t line,
                 const char* field) {
    text = trim(text);
    u64 value = 0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size()) {
        throw ParseError(source, line,
                         std::string("invalid ") + field + " '" + std::string(text) + "'");
    }
    return value;
}

FixtureRow parse_json_row(std::string_view text, const std::string& source, std::size_t line) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
        FixtureRow row;
        row.p = j.at("p").get<u64>();
        row.order = j.at("n").get<u64>();
        row.generators = j.at("generators").get<std::vector<u64>>();
        row.line = line;
        return row;
    } catch (const nlohmann::json::exception& e) {
        throw ParseError(source, line, std::string("bad JSON record: ") + e.what());
    }
}

FixtureRow parse_text_row(std::string_view text, const std::string& source, std::size_t line) {
    const auto c1 = text.find(',');
    const auto c2 = c1 == std::string_view::npos ? c1 : text.find(',', c1 + 1);
    if (c2 == std::string_view::npos) {
        throw ParseError(source, line, "expected 'p,n,{g1 ... gk}'");
    }
    FixtureRow row;
    row.line = line;
    row.p = parse_number(text.substr(0, c1), source, line, "p");
    row.order = parse_number(text.substr(c1 + 1, c2 - c1 - 1), source, line, "n");

    std::string_view set = trim(text.substr(c2 + 1));
    if (set.size() < 2 || set.front() != '{' || set.back() != '}') {
        throw ParseError(source, line, "generator set must be enclosed in braces");
    }
    set = set.substr(1, set.size() - 2);
    std::size_t pos = 0;
    while (pos < set.size()) {
        const auto end = set.find_first_of(" ,\t", pos);
        const auto token = set.substr(pos, end == std::string_view::npos ? end : end - pos);
        if (!trim(token).empty()) {
            row.generators.push_back(parse_number(token, source, line, "generator"));
        }
        if (end == std::string_view::npos) break;
        pos = end + 1;
    }
    if (row.generators.empty()) throw ParseError(source, line, "empty generator set");
    if (!std::is_sorted(row.generators.begin(), row.generators.end()) ||
        std::adjacent_find(row.generators.begin(), row.generators.end()) != row.generators.end()) {
        throw ParseError(source, line, "generators must be strictly ascending");
    }
    return row;
}

}  // namespace

std::vector<FixtureRow> parse_fixtures(std::istream& in, const std::string& source) {
    std::vector<FixtureRow> rows;
    std::string raw;
    std::size_t line = 0;
    while (std::getline(in, raw)) {
        ++line;
        const std::string_view text = trim(raw);
        if (text.empty() || text.front() == '#') continue;
        FixtureRow row = text.front() == '{' ? parse_json_row(text, source, line)
                                             : parse_text_row(text, source, line);
        if (!is_prime(row.p)) throw ParseError(source, line, "p must be prime");
        if (row.order == 0 || (row.p - 1) % row.order != 0) {
            throw ParseError(source, line, "order must divide p - 1");
        }
        rows.push_back(std::move(row));
    }
    return rows;
}

std::vector<FixtureRow> load_fixtures(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(path.string(), 0, "cannot open fixture file");
    return parse_fixtures(in, path.string());
}

std::string format_fixture_row(const FixtureRow& row) {
    std::string s = std::to_string(row.p) + "," + std::to_string(row.order) + ",{";
    for (std::size_t i = 0; i < row.generators.size(); ++i) {
        if (i) s += ' ';
        s += std::to_string(row.generators[i]);
    }
    return s + "}";
}

}  // namespace hyperchar
