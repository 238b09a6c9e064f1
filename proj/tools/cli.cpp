#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperchar/characteristic.hpp"
#include "hyperchar/error.hpp"
#include "hyperchar/fixtures.hpp"
#include "hyperchar/harness.hpp"
#include "hyperchar/modular.hpp"

namespace hyperchar::cli {

namespace {

using nlohmann::json;

enum class Format { plain, csv, json };

std::string join(const std::vector<u64>& v, const char* sep) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

json output_record(u64 p, u64 n, const RouteOutcome& o, bool with_timing) {
    json j{{"p", p}, {"n", n}, {"route", route_name(o.route)}, {"generators", o.generators.generators}};
    if (with_timing) j["elapsed_ms"] = o.elapsed_ms;
    if (o.candidates) {
        json w = json::array();
        for (const auto& wit : o.candidates->witnesses) {
            w.push_back({{"sum", wit.sum}, {"coeffs", wit.coeffs}});
        }
        j["root"] = o.candidates->root;
        j["witnesses"] = std::move(w);
    }
    return j;
}

struct GensetArgs {
    u64 p = 0;
    u64 n = 0;
    std::string route = "dp";
    Format format = Format::plain;
};

int cmd_genset(const GensetArgs& a, std::ostream& out, std::ostream& err) {
    if (!is_prime(a.p)) {
        err << "error: p = " << a.p << " is not prime\n";
        return kBadArgs;
    }
    const Prime p(a.p);
    if (a.n == 0 || (p - 1) % a.n != 0) {
        err << "error: n = " << a.n << " does not divide p - 1 = " << p - 1 << "\n";
        return kBadArgs;
    }

    std::vector<Route> routes;
    if (a.route == "all") {
        routes = applicable_routes(p, a.n);
    } else if (auto r = parse_route(a.route)) {
        if (!route_applicable(*r, p, a.n)) {
            err << "error: route '" << a.route << "' does not apply to |G| = " << a.n << "\n";
            return kInapplicableRoute;
        }
        routes.push_back(*r);
    } else {
        err << "error: unknown route '" << a.route << "'\n";
        return kBadArgs;
    }

    std::vector<RouteOutcome> outcomes;
    for (Route r : routes) outcomes.push_back(run_route(r, p, a.n));
    const bool agree = std::all_of(outcomes.begin(), outcomes.end(), [&](const RouteOutcome& o) {
        return o.generators == outcomes.front().generators;
    });

    if (a.format == Format::csv) out << "p,n,route,generators\n";
    for (const auto& o : outcomes) {
        switch (a.format) {
        case Format::plain:
            if (outcomes.size() > 1) out << route_name(o.route) << ": ";
            out << to_string(o.generators) << "\n";
            break;
        case Format::csv:
            out << a.p << ',' << a.n << ',' << route_name(o.route) << ','
                << join(o.generators.generators, " ") << "\n";
            break;
        case Format::json:
            out << output_record(a.p, a.n, o, true).dump() << "\n";
            break;
        }
        err << "# " << route_name(o.route) << " " << std::fixed << std::setprecision(3)
            << o.elapsed_ms << " ms\n";
    }
    if (!agree) {
        err << "error: routes disagree for (p, n) = (" << a.p << ", " << a.n << ")\n";
        return kMismatch;
    }
    return kOk;
}

struct TableArgs {
    u64 p_max = 0;
    Format format = Format::plain;
    std::string output;
};

int cmd_table(const TableArgs& a, std::ostream& out, std::ostream& err) {
    if (a.p_max < 2) {
        err << "error: --p-max must be >= 2\n";
        return kBadArgs;
    }
    const auto rows = generate_table(a.p_max);

    std::ostringstream body;
    if (a.format == Format::csv) body << "p,n,generators\n";
    for (const auto& row : rows) {
        switch (a.format) {
        case Format::plain:
            body << format_fixture_row(row) << "\n";
            break;
        case Format::csv:
            body << row.p << ',' << row.order << ',' << join(row.generators, " ") << "\n";
            break;
        case Format::json:
            body << json{{"p", row.p}, {"n", row.order}, {"route", "dp"}, {"generators", row.generators}}
                        .dump()
                 << "\n";
            break;
        }
    }

    if (a.output.empty()) {
        out << body.str();
        return out ? kOk : kIoError;
    }
    std::ofstream file(a.output, std::ios::binary | std::ios::trunc);
    if (!file) {
        err << "error: cannot open " << a.output << " for writing\n";
        return kIoError;
    }
    file << body.str();
    file.close();
    if (!file) {
        err << "error: failed writing " << a.output << "\n";
        return kIoError;
    }
    err << "wrote " << rows.size() << " rows to " << a.output << "\n";
    return kOk;
}

int cmd_verify(const std::string& path, std::ostream& out, std::ostream& err) {
    std::vector<FixtureRow> rows;
    try {
        rows = load_fixtures(path);
    } catch (const ParseError& e) {
        err << "error: " << e.what() << "\n";
        return e.line() == 0 ? kIoError : kBadArgs;
    }
    if (rows.empty()) err << "warning: " << path << " contains no fixture rows\n";

    const ValidationReport report = validate_fixtures(rows);
    for (const auto& f : report.failures) {
        out << "MISMATCH line " << f.row.line << ": " << format_fixture_row(f.row) << " route "
            << route_name(f.route) << " computed " << to_string(f.computed) << "\n";
    }
    for (const auto& note : report.notes) out << "note: " << note << "\n";
    out << "total " << report.total << " passed " << report.passed << " failed "
        << report.total - report.passed << "\n";
    for (const auto& t : report.timing) {
        if (t.runs == 0) continue;
        err << "# " << route_name(t.route) << ": " << t.runs << " runs, " << std::fixed
            << std::setprecision(3) << t.total_ms << " ms\n";
    }
    return report.failures.empty() ? kOk : kMismatch;
}

int cmd_conjecture(u64 n_max, std::ostream& out, std::ostream& err) {
    if (n_max % 2 == 0) {
        err << "error: n_max must be odd\n";
        return kBadArgs;
    }
    if (n_max < 3) {
        err << "error: n_max must be >= 3\n";
        return kBadArgs;
    }
    const ConjectureReport report = conjecture_scan(n_max);
    out << "n,a,b,prime\n";
    for (const auto& w : report.verified) {
        out << w.n << ',' << w.a << ',' << w.b << ',' << w.prime << "\n";
    }
    for (u64 n : report.failures) {
        err << "COUNTEREXAMPLE: no prime a^2 + b^2 with a + b = " << n << "\n";
    }
    err << "# " << report.verified.size() << " witnesses, " << report.failures.size()
        << " failures\n";
    return report.failures.empty() ? kOk : kMismatch;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Characteristics of quotient hyperfields F_p/G", "hyperchar"};
    app.require_subcommand(1);

    const std::map<std::string, Format> gen_formats{
        {"plain", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};
    const std::map<std::string, Format> table_formats{
        {"fixture", Format::plain}, {"csv", Format::csv}, {"json", Format::json}};

    GensetArgs genset;
    auto* genset_cmd = app.add_subcommand("genset", "Minimal generating set of char(F_p/G), |G| = n");
    genset_cmd->add_option("--p", genset.p, "Prime modulus")->required();
    genset_cmd->add_option("--n", genset.n, "Subgroup order, must divide p - 1")->required();
    genset_cmd->add_option("--route", genset.route, "dp, closed, norm or all")->capture_default_str();
    genset_cmd->add_option("--format", genset.format, "plain, csv or json")
        ->transform(CLI::CheckedTransformer(gen_formats, CLI::ignore_case));

    TableArgs table;
    auto* table_cmd = app.add_subcommand("table", "Tabulate every (p, n) with p <= p_max");
    table_cmd->add_option("--p-max", table.p_max, "Largest prime to include")->required();
    table_cmd->add_option("--format", table.format, "fixture, csv or json")
        ->transform(CLI::CheckedTransformer(table_formats, CLI::ignore_case));
    table_cmd->add_option("-o,--output", table.output, "Write to a file instead of stdout");

    std::string fixture_path;
    auto* verify_cmd = app.add_subcommand("verify", "Check every fixture row against all routes");
    verify_cmd->add_option("fixture", fixture_path, "Fixture file")->required();

    u64 n_max = 0;
    auto* conj_cmd = app.add_subcommand("conjecture", "Search a^2 + b^2 prime with a + b = n, odd n");
    conj_cmd->add_option("--n-max", n_max, "Largest odd n to scan")->required();

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return kBadArgs;
    }

    try {
        if (*genset_cmd) return cmd_genset(genset, out, err);
        if (*table_cmd) return cmd_table(table, out, err);
        if (*verify_cmd) return cmd_verify(fixture_path, out, err);
        if (*conj_cmd) return cmd_conjecture(n_max, out, err);
    } catch (const InapplicableRoute& e) {
        err << "error: " << e.what() << "\n";
        return kInapplicableRoute;
    } catch (const DomainError& e) {
        err << "error: " << e.what() << "\n";
        return kBadArgs;
    }
    return kBadArgs;
}

}  // namespace hyperchar::cli
