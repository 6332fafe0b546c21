// narycat: exact counting, enumeration, conversion, and verification for
// the nine Narayana-equinumerous families.

#include <functional>
#include <iostream>
#include <map>
#include <queue>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "narycat/bijections.hpp"
#include "narycat/errors.hpp"
#include "narycat/fpaths.hpp"
#include "narycat/jsonio.hpp"
#include "narycat/monomial.hpp"
#include "narycat/numbers.hpp"
#include "narycat/paths.hpp"
#include "narycat/permutations.hpp"
#include "narycat/trees.hpp"
#include "narycat/verify.hpp"

using namespace narycat;

namespace {

// ---------------------------------------------------------------- grids --

// Right-aligned columns, two-space gutter, ragged rows allowed.
std::string align_grid(const std::vector<std::vector<std::string>>& rows) {
    std::vector<std::size_t> width;
    for (const auto& row : rows)
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j >= width.size())
                width.resize(j + 1, 0);
            width[j] = std::max(width[j], row[j].size());
        }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j)
                out += "  ";
            out.append(width[j] - row[j].size(), ' ');
            out += row[j];
        }
        out += '\n';
    }
    return out;
}

std::string csv_grid(const std::vector<std::vector<std::string>>& rows) {
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t j = 0; j < row.size(); ++j) {
            if (j)
                out += ',';
            out += row[j];
        }
        out += '\n';
    }
    return out;
}

int cmd_count(int d, long long n, long long k, bool have_k, const std::string& method) {
    auto cell = [&](long long kk) -> BigInt {
        if (method == "series")
            return series_narayana(d, (int)n).at((int)n, (int)kk);
        if (method == "lagrange")
            return lagrange_narayana(d, n, kk);
        return narayana(d, n, kk);
    };
    if (have_k) {
        std::cout << cell(k).str() << '\n';
        return 0;
    }
    std::string row;
    for (long long kk = 0; kk <= n; ++kk) {
        if (kk)
            row += ' ';
        row += cell(kk).str();
    }
    std::cout << row << '\n';
    return 0;
}

int cmd_table(int d, bool have_d, long long n_max, const std::string& format) {
    std::vector<std::vector<std::string>> rows;
    nlohmann::json j;
    if (have_d) {
        std::vector<std::string> head{"n\\k"};
        for (long long k = 0; k <= n_max; ++k)
            head.push_back(std::to_string(k));
        rows.push_back(head);
        j = {{"kind", "narayana"}, {"d", d}, {"rows", nlohmann::json::array()}};
        for (long long n = 0; n <= n_max; ++n) {
            std::vector<std::string> row{std::to_string(n)};
            nlohmann::json jrow = nlohmann::json::array();
            for (long long k = 0; k <= n; ++k) {
                std::string v = narayana(d, n, k).str();
                row.push_back(v);
                jrow.push_back(v);
            }
            rows.push_back(row);
            j["rows"].push_back(std::move(jrow));
        }
    } else {
        std::vector<std::string> head{"d\\n"};
        for (long long n = 0; n <= n_max; ++n)
            head.push_back(std::to_string(n));
        rows.push_back(head);
        j = {{"kind", "catalan"},
             {"degrees", std::vector<int>{2, 3, 4, 5, 6}},
             {"rows", nlohmann::json::array()}};
        for (int dd = 2; dd <= 6; ++dd) {
            std::vector<std::string> row{std::to_string(dd)};
            nlohmann::json jrow = nlohmann::json::array();
            for (long long n = 0; n <= n_max; ++n) {
                std::string v = catalan(dd, n).str();
                row.push_back(v);
                jrow.push_back(v);
            }
            rows.push_back(row);
            j["rows"].push_back(std::move(jrow));
        }
    }
    if (format == "csv")
        std::cout << csv_grid(rows);
    else if (format == "json")
        std::cout << j.dump() << '\n';
    else
        std::cout << align_grid(rows);
    return 0;
}

// ------------------------------------------------------------ enumerate --

int cmd_enumerate(const std::string& family, int d, long long n, long long k, bool have_k,
                  const std::string& format, long long guard) {
    const long long kk = have_k ? k : -1;
    std::vector<std::pair<std::string, nlohmann::json>> lines;
    if (family == "monomials") {
        for (long long l = have_k ? k : 0; l <= (have_k ? k : n); ++l)
            for (const Monomial& m : enumerate_monomials(d, n, l))
                lines.emplace_back(to_string(m), monomial_to_json(m));
    } else if (family == "schroder") {
        for (const LatticePath& p : enumerate_schroder_native(d, n, kk, guard))
            lines.emplace_back(to_string(p), path_to_json(p));
    } else if (family == "trees") {
        for (const OrderedTree& t : enumerate_T(d, n, kk, guard))
            lines.emplace_back(to_string(t), tree_to_json(t));
    } else if (family == "dyck") {
        for (const LatticePath& p : enumerate_Q(d, n, kk, guard))
            lines.emplace_back(to_string(p), path_to_json(p));
    } else if (family == "perms") {
        for (const Perm& w : enumerate_P(d, n, kk, guard))
            lines.emplace_back(perm_to_string(w), perm_to_json(w));
    } else if (family == "lschroder") {
        for (const LabeledSchroderPath& p : enumerate_labeled_schroder_native(d, n, kk, guard))
            lines.emplace_back(to_string(p, d), labeled_schroder_to_json(p));
    } else if (family == "fpaths") {
        for (const FPath& f : enumerate_F(d, n, kk, guard))
            lines.emplace_back(to_string(f, d), fpath_to_json(f));
    } else if (family == "ldyck") {
        for (const LabeledDyckPath& p : enumerate_labeled_dyck_native(d, n, kk, guard))
            lines.emplace_back(to_string(p, d), labeled_dyck_to_json(p));
    } else if (family == "ltrees") {
        for (const LabeledTree& t : enumerate_labeled_T(d, n, kk, guard))
            lines.emplace_back(to_string(t, d), labeled_tree_to_json(t));
    } else {
        std::cerr << "narycat: unknown family '" << family << "'\n";
        return 2;
    }
    for (const auto& [text, json] : lines)
        std::cout << (format == "jsonl" ? json.dump() : text) << '\n';
    return 0;
}

// -------------------------------------------------------------- convert --

using Object = std::variant<Monomial, LatticePath, OrderedTree, Perm, LabeledSchroderPath,
                            FPath, LabeledDyckPath, LabeledTree>;

struct ConvertEdge {
    std::string to;
    std::string name; // printed in verbose route
    std::function<Object(const Object&, int)> apply;
};

// The bijection map is a tree on the nine families; convert walks its
// unique path between two of them.
const std::map<std::string, std::vector<ConvertEdge>>& convert_edges() {
    static const std::map<std::string, std::vector<ConvertEdge>> edges = {
        {"monomials",
         {{"schroder", "f1", [](const Object& o, int) { return Object{f1(std::get<Monomial>(o))}; }},
          {"trees", "f2", [](const Object& o, int) { return Object{f2(std::get<Monomial>(o))}; }},
          {"lschroder", "f5", [](const Object& o, int) { return Object{f5(std::get<Monomial>(o))}; }},
          {"fpaths", "f6", [](const Object& o, int) { return Object{f6(std::get<Monomial>(o))}; }}}},
        {"schroder",
         {{"monomials", "f1^-1",
           [](const Object& o, int d) { return Object{f1_inv(std::get<LatticePath>(o), d)}; }}}},
        {"trees",
         {{"monomials", "f2^-1",
           [](const Object& o, int d) { return Object{f2_inv(std::get<OrderedTree>(o), d)}; }},
          {"dyck", "f3", [](const Object& o, int) { return Object{f3(std::get<OrderedTree>(o))}; }}}},
        {"dyck",
         {{"trees", "f3^-1",
           [](const Object& o, int d) { return Object{f3_inv(std::get<LatticePath>(o), d)}; }},
          {"perms", "f4", [](const Object& o, int) { return Object{f4(std::get<LatticePath>(o))}; }}}},
        {"perms",
         {{"dyck", "f4^-1",
           [](const Object& o, int d) { return Object{f4_inv(std::get<Perm>(o), d)}; }}}},
        {"lschroder",
         {{"monomials", "f5^-1",
           [](const Object& o, int d) { return Object{f5_inv(std::get<LabeledSchroderPath>(o), d)}; }}}},
        {"fpaths",
         {{"monomials", "f6^-1",
           [](const Object& o, int d) { return Object{f6_inv(std::get<FPath>(o), d)}; }},
          {"ldyck", "f7", [](const Object& o, int) { return Object{f7(std::get<FPath>(o))}; }}}},
        {"ldyck",
         {{"fpaths", "f7^-1",
           [](const Object& o, int d) { return Object{f7_inv(std::get<LabeledDyckPath>(o), d)}; }},
          {"ltrees", "f8", [](const Object& o, int) { return Object{f8(std::get<LabeledDyckPath>(o))}; }}}},
        {"ltrees",
         {{"ldyck", "f8^-1",
           [](const Object& o, int d) { return Object{f8_inv(std::get<LabeledTree>(o), d)}; }}}},
    };
    return edges;
}

std::vector<const ConvertEdge*> convert_route(const std::string& from, const std::string& to) {
    const auto& edges = convert_edges();
    std::map<std::string, std::pair<std::string, const ConvertEdge*>> parent;
    std::queue<std::string> frontier;
    frontier.push(from);
    parent[from] = {"", nullptr};
    while (!frontier.empty()) {
        std::string here = frontier.front();
        frontier.pop();
        if (here == to)
            break;
        for (const ConvertEdge& e : edges.at(here))
            if (!parent.count(e.to)) {
                parent[e.to] = {here, &e};
                frontier.push(e.to);
            }
    }
    std::vector<const ConvertEdge*> route;
    for (std::string at = to; at != from; at = parent.at(at).first)
        route.push_back(parent.at(at).second);
    std::reverse(route.begin(), route.end());
    return route;
}

Object parse_object(const std::string& family, const std::string& text, int d) {
    if (family == "monomials")
        return parse_monomial(text, d);
    if (family == "schroder" || family == "dyck")
        return parse_path(text);
    if (family == "trees")
        return parse_tree(text);
    if (family == "perms")
        return parse_perm(text);
    if (family == "lschroder")
        return parse_labeled_schroder(text, d);
    if (family == "fpaths")
        return parse_fpath(text, d);
    if (family == "ldyck")
        return parse_labeled_dyck(text, d);
    return parse_labeled_tree(text, d); // ltrees
}

std::string print_object(const Object& o, int d) {
    return std::visit(
        [&](const auto& v) -> std::string {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, Monomial>)
                return to_string(v);
            else if constexpr (std::is_same_v<T, LatticePath>)
                return to_string(v);
            else if constexpr (std::is_same_v<T, OrderedTree>)
                return to_string(v);
            else if constexpr (std::is_same_v<T, Perm>)
                return perm_to_string(v);
            else
                return to_string(v, d);
        },
        o);
}

int cmd_convert(const std::string& from, const std::string& to, int d, bool verbose) {
    const std::vector<const ConvertEdge*> route = convert_route(from, to);
    if (verbose) {
        std::cerr << "route: " << from;
        for (const ConvertEdge* e : route)
            std::cerr << " -" << e->name << "-> " << e->to;
        std::cerr << '\n';
    }
    std::string line;
    while (std::getline(std::cin, line)) {
        std::size_t a = line.find_first_not_of(" \t\r");
        if (a == std::string::npos)
            continue;
        try {
            Object o = parse_object(from, line, d);
            for (const ConvertEdge* e : route)
                o = e->apply(o, d);
            std::cout << print_object(o, d) << '\n';
        } catch (const std::exception& e) {
            std::cerr << "narycat: convert: " << e.what() << '\n';
            return 1;
        }
    }
    return 0;
}

// --------------------------------------------------------------- verify --

int cmd_verify(const std::string& suite, int d_max, long long n_max, const std::string& format,
               long long guard) {
    std::vector<int> degrees;
    if (d_max < 0)
        degrees = kDefaultDegrees;
    else
        for (int d = 2; d <= d_max; ++d)
            degrees.push_back(d);
    VerificationReport report;
    if (suite == "counts" || suite == "all")
        report.merge(verify_counts(degrees, n_max, {}, guard));
    if (suite == "bijections" || suite == "all")
        report.merge(verify_bijections(degrees, n_max, guard));
    if (suite == "identities" || suite == "all")
        report.merge(verify_identities(d_max < 0 ? 6 : d_max, n_max < 0 ? 12 : n_max));
    if (format == "jsonl")
        std::cout << to_jsonl(report);
    else
        std::cout << summary_table(report);
    return report.failed() == 0 ? 0 : 1;
}

// ---------------------------------------------------------------- bfile --

int cmd_bfile(const std::string& kind, int d, long long n_max, long long offset) {
    long long index = offset;
    if (kind == "catalan") {
        for (long long n = 0; n <= n_max; ++n)
            std::cout << index++ << ' ' << catalan(d, n).str() << '\n';
    } else { // narayana triangle read by rows
        for (long long n = 0; n <= n_max; ++n)
            for (long long k = 0; k <= n; ++k)
                std::cout << index++ << ' ' << narayana(d, n, k).str() << '\n';
    }
    return 0;
}

const std::vector<std::string> kFamilies = {"monomials", "schroder", "trees",
                                            "dyck",      "perms",    "lschroder",
                                            "fpaths",    "ldyck",    "ltrees"};

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Fuss-Catalan / Narayana counting, enumeration, and bijections"};
    app.require_subcommand(1);

    int d = 2;
    long long n = 0, k = 0, n_max = 7, offset = 1, guard = kDefaultGuard;
    std::string method = "formula", format = "text", family, from, to, suite = "all",
                kind = "catalan";
    int d_max = -1;
    bool verbose = false;

    CLI::App* count = app.add_subcommand("count", "narayana value or row");
    count->add_option("--d", d, "degree (>= 2)")->required()->check(CLI::Range(2, 1000));
    count->add_option("--n", n, "row")->required()->check(CLI::NonNegativeNumber);
    CLI::Option* count_k = count->add_option("--k", k, "column; omit for the whole row");
    count->add_option("--method", method, "formula|series|lagrange")
        ->check(CLI::IsMember({"formula", "series", "lagrange"}));

    CLI::App* table = app.add_subcommand("table", "narayana triangle, or catalan grid without --d");
    CLI::Option* table_d = table->add_option("--d", d, "degree (>= 2)")->check(CLI::Range(2, 1000));
    table->add_option("--n-max", n_max, "last row/column")->required()->check(CLI::NonNegativeNumber);
    table->add_option("--format", format, "text|csv|json")
        ->check(CLI::IsMember({"text", "csv", "json"}));

    CLI::App* enumerate = app.add_subcommand("enumerate", "list family members, one per line");
    enumerate->add_option("--family", family, "which family")
        ->required()
        ->check(CLI::IsMember(kFamilies));
    enumerate->add_option("--d", d, "degree (>= 2)")->required()->check(CLI::Range(2, 1000));
    enumerate->add_option("--n", n, "family-native size")->required()->check(CLI::NonNegativeNumber);
    CLI::Option* enum_k = enumerate->add_option("--k", k, "family-native statistic; omit for all");
    enumerate->add_option("--format", format, "text|jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));
    enumerate->add_option("--guard", guard, "abort past this many objects");

    CLI::App* convert = app.add_subcommand("convert", "map stdin objects between families");
    convert->add_option("--from", from, "input family")->required()->check(CLI::IsMember(kFamilies));
    convert->add_option("--to", to, "output family")->required()->check(CLI::IsMember(kFamilies));
    convert->add_option("--d", d, "degree (>= 2)")->required()->check(CLI::Range(2, 1000));
    convert->add_flag("--verbose", verbose, "print the bijection route to stderr");

    CLI::App* verify = app.add_subcommand("verify", "re-derive counts, bijections, identities");
    verify->add_option("--suite", suite, "counts|bijections|identities|all")
        ->check(CLI::IsMember({"counts", "bijections", "identities", "all"}));
    verify->add_option("--d-max", d_max, "check degrees 2..d-max (default 2..5, identities 2..6)");
    long long verify_n_max = -1;
    verify->add_option("--n-max", verify_n_max, "cap n (default: per-degree cap)");
    verify->add_option("--format", format, "text|jsonl")
        ->check(CLI::IsMember({"text", "jsonl"}));
    verify->add_option("--guard", guard, "skip cells past this many objects");

    CLI::App* bfile = app.add_subcommand("bfile", "OEIS-style b-file lines");
    bfile->add_option("--kind", kind, "catalan|narayana")
        ->check(CLI::IsMember({"catalan", "narayana"}));
    bfile->add_option("--d", d, "degree (>= 2)")->required()->check(CLI::Range(2, 1000));
    bfile->add_option("--n-max", n_max, "last n")->required()->check(CLI::NonNegativeNumber);
    bfile->add_option("--offset", offset, "index of the first line (default 1)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (count->parsed())
            return cmd_count(d, n, k, !count_k->empty(), method);
        if (table->parsed())
            return cmd_table(d, !table_d->empty(), n_max, format);
        if (enumerate->parsed())
            return cmd_enumerate(family, d, n, k, !enum_k->empty(), format, guard);
        if (convert->parsed())
            return cmd_convert(from, to, d, verbose);
        if (verify->parsed())
            return cmd_verify(suite, d_max, verify_n_max, format, guard);
        if (bfile->parsed())
            return cmd_bfile(kind, d, n_max, offset);
    } catch (const std::invalid_argument& e) {
        std::cerr << "narycat: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "narycat: " << e.what() << '\n';
        return 1;
    }
    return 2;
}
