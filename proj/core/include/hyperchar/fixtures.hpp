#pragma once

#include <cstddef>
#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

#include "hyperchar/modular.hpp"

namespace hyperchar {

/// One tabulated generating set. `line` is the 1-based source line, 0 when
/// the row was not read from a file.
struct FixtureRow {
    u64 p = 0;
    u64 order = 0;
    std::vector<u64> generators;
    std::size_t line = 0;

    friend bool operator==(const FixtureRow& a, const FixtureRow& b) {
        return a.p == b.p && a.order == b.order && a.generators == b.generators;
    }
};

/// Parses the fixture format, one row per line:
///
///     p,n,{g1 g2 ... gk}
///
/// Blank lines and lines starting with '#' are skipped. Lines starting with
/// '{' are read as JSON records carrying "p", "n" and "generators", so the
/// CLI's JSON-lines output loads here too. Throws ParseError naming the line.
std::vector<FixtureRow> parse_fixtures(std::istream& in, const std::string& source = "<stream>");
std::vector<FixtureRow> load_fixtures(const std::filesystem::path& path);

/// "7,3,{3 4 5}"
std::string format_fixture_row(const FixtureRow& row);

}  // namespace hyperchar
