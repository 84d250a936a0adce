// plucker-lab: command-line frontend over the verification library.
//
// Exit codes: 0 all selected checks pass, 1 at least one check fails,
// 2 usage or input error, 3 a computation budget was exceeded (partial
// report emitted). The environment variable PLK_SPAIR_BUDGET overrides
// the S-pair reduction budget used by every Groebner computation.

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "plk/arcs.hpp"
#include "plk/checks.hpp"
#include "plk/graphs.hpp"
#include "plk/lattice.hpp"

namespace {

using nlohmann::json;
using namespace plk;

const std::vector<std::string> kFamilies = {
    "oracle-gate", "gb-quadrics",     "gb-appendix", "elimination",    "sydney",
    "gorenstein",  "asl-basis",       "stanley-reisner", "arcs-bijection"};

std::vector<CheckReport> run_family(const std::string& f, const CheckOptions& o) {
    if (f == "oracle-gate") return check_oracle_gate(o);
    if (f == "gb-quadrics") return check_gb_quadrics(o);
    if (f == "gb-appendix") return check_gb_appendix(o);
    if (f == "elimination") return check_elimination(o);
    if (f == "sydney") return check_sydney(o);
    if (f == "gorenstein") return check_gorenstein(o);
    if (f == "asl-basis") return check_asl_basis(o);
    if (f == "stanley-reisner") return check_stanley_reisner(o);
    return check_arcs_bijection(o);
}

void print_reports(const std::vector<CheckReport>& reports, const std::string& format) {
    if (format == "json") {
        json j;
        j["schema_version"] = 1;
        j["reports"] = json::array();
        for (const CheckReport& r : reports)
            j["reports"].push_back({{"id", r.id},
                                    {"detail", r.detail},
                                    {"verdict", r.verdict},
                                    {"budget_exceeded", r.budget_exceeded},
                                    {"seconds", r.seconds}});
        std::cout << j.dump(2) << "\n";
        return;
    }
    long pass = 0, fail = 0, skip = 0;
    for (const CheckReport& r : reports) {
        std::printf("[%s] %s: %s (%.3fs)\n", r.verdict.c_str(), r.id.c_str(),
                    r.detail.c_str(), r.seconds);
        (r.verdict == "pass" ? pass : r.verdict == "fail" ? fail : skip)++;
    }
    std::printf("%zu checks: %ld pass, %ld fail, %ld skipped\n", reports.size(), pass,
                fail, skip);
}

int report_exit_code(const std::vector<CheckReport>& reports) {
    if (!all_passed(reports)) return 1;
    if (any_budget_exceeded(reports)) return 3;
    return 0;
}

json pair_list(const std::set<PairIndex>& pairs) {
    json out = json::array();
    for (const PairIndex& p : pairs) out.push_back({p.i, p.j});
    return out;
}

Sublattice read_input_sublattice(const std::string& file) {
    if (file.empty()) return read_sublattice_file(std::cin);
    std::ifstream in(file);
    if (!in) throw std::runtime_error("cannot open " + file);
    return read_sublattice_file(in);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "plucker-lab: exact-arithmetic verification of Pluecker quadric Groebner bases,\n"
        "elimination ideals of distributive sublattices, straightening laws, and the\n"
        "arc/tree combinatorics of their initial ideals.\n\n"
        "Reports are emitted in a fixed deterministic order (never by completion\n"
        "time). Exit codes: 0 pass, 1 failure, 2 usage/input error, 3 budget\n"
        "exceeded. PLK_SPAIR_BUDGET overrides the S-pair reduction budget."};
    app.require_subcommand(1);

    CheckOptions opts;
    std::string format = "text";
    app.add_option("--seed", opts.seed,
                   "seed for randomized order extensions and sampled checks")
        ->capture_default_str();
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"text", "json"}))
        ->capture_default_str();
    app.add_flag("--strict-rank", opts.strict_rank,
                 "require sublattice rank exactly n instead of at least n");

    auto* verify = app.add_subcommand("verify", "run one check family");
    verify->fallthrough();
    std::string family;
    verify->add_option("family", family, "one of: oracle-gate " + [] {
                           std::string s;
                           for (const auto& f : kFamilies)
                               if (f != "oracle-gate") s += f + " ";
                           return s;
                       }())
        ->required()
        ->check(CLI::IsMember(kFamilies));
    int verify_n = 0;
    verify->add_option("--n", verify_n, "largest point count to run (0 = full range)");
    std::string order;
    verify->add_option("--order", order,
                       "gb-quadrics only: restrict to one monomial order")
        ->check(CLI::IsMember({"revlex", "lex"}));

    auto* runall = app.add_subcommand(
        "run-all", "oracle gate first, then every family in a fixed order");
    runall->fallthrough();
    int max_n = 0;
    runall->add_option("--max-n", max_n, "largest point count to run (0 = full range)");

    auto* count = app.add_subcommand("count", "print one enumeration cardinality");
    count->fallthrough();
    std::string what;
    count->add_option("what", what, "perfect | gorenstein | arcs")
        ->required()
        ->check(CLI::IsMember({"perfect", "gorenstein", "arcs"}));
    int count_n = 0;
    count->add_option("--n", count_n, "point count")->required();

    auto* show = app.add_subcommand(
        "show", "derive data from a sublattice file (header 'n: <int>', then 'i j' lines)");
    show->fallthrough();
    std::string thing;
    show->add_option("what", thing, "fundamental-chain | join-irreducibles | graph")
        ->required()
        ->check(CLI::IsMember({"fundamental-chain", "join-irreducibles", "graph"}));
    std::string file;
    show->add_option("--file", file, "input path (default: stdin)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    if (const char* env = std::getenv("PLK_SPAIR_BUDGET")) {
        char* end = nullptr;
        const long long v = std::strtoll(env, &end, 10);
        if (end == env || *end != '\0' || v <= 0) {
            std::fprintf(stderr, "PLK_SPAIR_BUDGET must be a positive integer, got '%s'\n",
                         env);
            return 2;
        }
        opts.buchberger.spair_budget = v;
    }

    try {
        if (verify->parsed()) {
            if (!order.empty() && family != "gb-quadrics") {
                std::fprintf(stderr, "--order applies only to gb-quadrics\n");
                return 2;
            }
            opts.max_n = verify_n;
            std::vector<CheckReport> reports = run_family(family, opts);
            if (!order.empty()) {
                const std::string tag =
                    order == "revlex" ? "graded revlex" : "nest-poset lex";
                std::erase_if(reports, [&](const CheckReport& r) {
                    return r.detail.find(tag) == std::string::npos;
                });
            }
            print_reports(reports, format);
            return report_exit_code(reports);
        }
        if (runall->parsed()) {
            opts.max_n = max_n;
            const auto reports = run_all_checks(opts);
            print_reports(reports, format);
            return report_exit_code(reports);
        }
        if (count->parsed()) {
            BigInt value;
            if (what == "perfect")
                value = BigInt(static_cast<long>(enumerate_perfect_compatible(count_n).size()));
            else if (what == "gorenstein")
                value = count_gorenstein_perfect(count_n);
            else
                value = BigInt(static_cast<long>(enumerate_maximal(count_n).size()));
            if (format == "json") {
                json j{{"schema_version", 1},
                       {"what", what},
                       {"n", count_n},
                       {"count", value.str()}};
                std::cout << j.dump(2) << "\n";
            } else {
                std::cout << value.str() << "\n";
            }
            return 0;
        }
        // show
        const Sublattice s = read_input_sublattice(file);
        if (thing == "fundamental-chain") {
            if (!is_perfect(s)) {
                std::fprintf(stderr, "fundamental-chain requires a perfect sublattice\n");
                return 2;
            }
            const Chain chain = fundamental_chain(s);
            if (format == "json") {
                json arr = json::array();
                for (const PairIndex& p : chain) arr.push_back({p.i, p.j});
                std::cout << json{{"schema_version", 1}, {"chain", arr}}.dump(2) << "\n";
            } else {
                std::string line;
                for (const PairIndex& p : chain) line += p.str() + " ";
                if (!line.empty()) line.pop_back();
                std::cout << line << "\n";
            }
        } else if (thing == "join-irreducibles") {
            const Sublattice ji = join_irreducibles(s);
            if (format == "json")
                std::cout << json{{"schema_version", 1},
                                  {"n", ji.n},
                                  {"members", pair_list(ji.members)}}
                                 .dump(2)
                          << "\n";
            else
                write_sublattice_file(std::cout, ji);
        } else {
            const Graph g = graph_of(s);
            json edges = json::array();
            for (const PairIndex& e : g.edges) edges.push_back({e.i, e.j});
            if (format == "json")
                std::cout << json{{"schema_version", 1}, {"n", g.n}, {"edges", edges}}.dump(2)
                          << "\n";
            else
                write_graph_file(std::cout, g);
        }
        return 0;
    } catch (const BudgetExceeded& e) {
        std::fprintf(stderr, "budget exceeded: %s\n", e.what());
        return 3;
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
}
