#include "azi/cli.hpp"

#include "azi/enumerate.hpp"
#include "azi/errors.hpp"
#include "azi/families.hpp"
#include "azi/graph6.hpp"
#include "azi/indices.hpp"
#include "azi/report.hpp"
#include "azi/transform.hpp"
#include "azi/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>

namespace azi::cli {

namespace {

std::vector<Graph> load_graphs(const std::string& family, const std::string& graph6_path,
                               std::istream& in) {
    if (!family.empty() && !graph6_path.empty())
        throw Error(ErrorKind::UsageError, "pass either --family or --graph6, not both");
    if (!family.empty()) return {construct(parse_family_spec(family))};
    if (graph6_path.empty())
        throw Error(ErrorKind::UsageError, "a graph is required: pass --family or --graph6");
    std::string text;
    if (graph6_path == "-") {
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ifstream file(graph6_path);
        if (!file) throw Error(ErrorKind::UsageError, "cannot read '" + graph6_path + "'");
        std::ostringstream buf;
        buf << file.rdbuf();
        text = buf.str();
    }
    auto graphs = graph6_decode_lines(text);
    if (graphs.empty()) throw Error(ErrorKind::UsageError, "no graph6 lines in input");
    return graphs;
}

const IndexKernel& kernel_by_name(const std::string& name) {
    if (name == "azi") return azi_kernel();
    if (name == "abc") return abc_kernel();
    throw Error(ErrorKind::UsageError, "unknown index '" + name + "' (expected azi|abc)");
}

// All output goes through one sink so --out PATH and stdout behave the same.
class Sink {
public:
    Sink(const std::string& path, std::ostream& fallback) : stream_(&fallback) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw Error(ErrorKind::UsageError, "cannot open '" + path + "' for writing");
            stream_ = &file_;
        }
    }
    std::ostream& get() { return *stream_; }

private:
    std::ofstream file_;
    std::ostream* stream_;
};

struct Options {
    std::string index = "azi";
    std::string family;
    std::string graph6_path;
    std::string direction = "min";
    std::string format;
    std::string out_path;
    int n = 0;
    int k = 0;
    int nmax = 10;
    int workers = 0; // 0 = available parallelism
    int budget = 18;
    long max_results = 0; // 0 = unlimited
    long max_steps = 200;
    std::uint64_t seed = 1;
};

// One --format flag per subcommand, each with its own default; the default is
// applied after parsing so registration order cannot leak across subcommands.
struct FormatDefaults {
    std::vector<std::tuple<CLI::App*, CLI::Option*, std::string>> entries;

    void add(CLI::App* cmd, Options& o, const std::string& default_format) {
        auto* opt = cmd->add_option("--format", o.format, "output format")
                        ->check(CLI::IsMember({"json", "csv", "graph6", "table"}));
        cmd->add_option("--out", o.out_path, "write output to a file instead of stdout");
        entries.emplace_back(cmd, opt, default_format);
    }

    void resolve(Options& o) const {
        for (const auto& [cmd, opt, fallback] : entries)
            if (cmd->parsed() && opt->count() == 0) o.format = fallback;
    }
};

int emit_checks(const std::vector<TheoremCheck>& checks, const Options& o, std::ostream& out) {
    if (o.format == "table")
        out << format_check_table(checks);
    else
        out << format_report(checks, parse_output_format(o.format));
    for (const auto& c : checks)
        if (!c.passed) return 1;
    return 0;
}

} // namespace

int run(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err,
        std::istream& in) {
    CLI::App app{"Exact AZI/ABC indices, tree & cactus enumeration, and extremal verification"};
    app.name("azi");
    app.require_subcommand(1);
    Options o;
    FormatDefaults fmt;

    auto* compute = app.add_subcommand("compute", "Evaluate an index on graphs");
    compute->add_option("--index", o.index, "index to evaluate")->check(CLI::IsMember({"azi", "abc"}));
    compute->add_option("--family", o.family, "family spec, e.g. g0:5,2 or path:10");
    compute->add_option("--graph6", o.graph6_path, "graph6 file ('-' for stdin)");

    auto* family = app.add_subcommand("family", "Construct a named family member");
    family->add_option("--family", o.family, "family spec")->required();
    fmt.add(family, o, "graph6");

    auto* enumerate = app.add_subcommand("enumerate", "List trees or cacti up to isomorphism");
    enumerate->add_option("--n", o.n, "vertex count")->required();
    enumerate->add_option("--k", o.k, "cycle count (0 = trees)");
    enumerate->add_option("--max-results", o.max_results, "stop after this many graphs");
    fmt.add(enumerate, o, "graph6");

    auto* extremal = app.add_subcommand("extremal", "Scan a family for an index extreme");
    extremal->add_option("--n", o.n, "vertex count")->required();
    extremal->add_option("--k", o.k, "cycle count (0 = trees)");
    extremal->add_option("--index", o.index, "index")->check(CLI::IsMember({"azi", "abc"}));
    extremal->add_option("--direction", o.direction, "min or max")
        ->check(CLI::IsMember({"min", "max"}));
    extremal->add_option("--workers", o.workers, "parallel scan workers (0 = auto)");
    fmt.add(extremal, o, "json");

    auto* verify = app.add_subcommand("verify", "Check the extremal theorems");
    verify->require_subcommand(1);
    auto* theorem1 = verify->add_subcommand("theorem1", "min AZI over cacti = F(n,k) at G0(n,k)");
    theorem1->add_option("--nmax", o.nmax, "largest n (trees capped at 16, cacti at 10)");
    theorem1->add_option("--workers", o.workers, "parallel scan workers (0 = auto)");
    fmt.add(theorem1, o, "table");
    auto* theorem2 = verify->add_subcommand("theorem2", "structure of max-AZI trees, n >= 10");
    theorem2->add_option("--n", o.n, "vertex count")->required();
    theorem2->add_option("--workers", o.workers, "parallel scan workers (0 = auto)");
    fmt.add(theorem2, o, "table");
    auto* maxclaims = verify->add_subcommand("maxclaims", "argmax-AZI tree sets for 4 <= n <= 9");
    maxclaims->add_option("--n", o.n, "vertex count")->required();
    maxclaims->add_option("--workers", o.workers, "parallel scan workers (0 = auto)");
    fmt.add(maxclaims, o, "table");
    auto* fmonotone = verify->add_subcommand("fmonotone", "F(n,k) strictly increasing in k");
    fmonotone->add_option("--nmax", o.nmax, "largest n");
    fmt.add(fmonotone, o, "table");

    auto* conjecture = app.add_subcommand("conjecture", "compare max-AZI and min-ABC tree sets");
    conjecture->add_option("--n", o.n, "vertex count")->required();
    conjecture->add_option("--workers", o.workers, "parallel scan workers (0 = auto)");
    conjecture->add_option("--budget", o.budget, "enumeration budget cap");
    fmt.add(conjecture, o, "json");

    auto* climb = app.add_subcommand("climb", "hill-climb for high-AZI trees");
    climb->add_option("--family", o.family, "seed tree family spec");
    climb->add_option("--graph6", o.graph6_path, "seed tree graph6 file ('-' for stdin)");
    climb->add_option("--max-steps", o.max_steps, "move budget");
    climb->add_option("--seed", o.seed, "random kick seed");
    fmt.add(climb, o, "json");

    try {
        std::vector<std::string> args(argv.rbegin(), argv.rend());
        app.parse(args);
        fmt.resolve(o);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e, out, err);
        return code == 0 ? 0 : 2;
    }

    try {
        if (*compute) {
            const auto& kernel = kernel_by_name(o.index);
            for (const auto& g : load_graphs(o.family, o.graph6_path, in)) {
                if (kernel.has_exact()) {
                    Rational exact = augmented_zagreb_index(g);
                    out << to_fraction_string(exact) << "\n" << repr_double(to_double(exact)) << "\n";
                } else {
                    out << repr_double(atom_bond_connectivity_index(g)) << "\n";
                }
            }
            return 0;
        }
        if (*family) {
            Sink sink(o.out_path, out);
            Graph g = construct(parse_family_spec(o.family));
            if (o.format == "graph6") {
                sink.get() << graph6_encode(g) << "\n";
            } else if (o.format == "json") {
                nlohmann::ordered_json j;
                j["spec"] = o.family;
                j["n"] = g.vertex_count();
                j["m"] = g.edge_count();
                j["graph6"] = graph6_encode(g);
                sink.get() << j.dump(2) << "\n";
            } else {
                throw Error(ErrorKind::UsageError, "family supports --format graph6|json");
            }
            return 0;
        }
        if (*enumerate) {
            Sink sink(o.out_path, out);
            auto stream = o.k == 0 ? trees(o.n) : cacti(o.n, o.k);
            if (stream->empty_domain())
                throw Error(ErrorKind::EmptyDomain, "no cacti: need n >= 2k+1");
            std::optional<long> cap;
            if (o.max_results > 0) cap = o.max_results;
            auto graphs = collect(*stream, cap);
            if (o.format == "graph6") {
                for (const auto& g : graphs) sink.get() << graph6_encode(g) << "\n";
            } else if (o.format == "csv") {
                sink.get() << "graph6\n";
                for (const auto& g : graphs) sink.get() << graph6_encode(g) << "\n";
            } else if (o.format == "json") {
                nlohmann::ordered_json j;
                j["n"] = o.n;
                j["k"] = o.k;
                j["count"] = graphs.size();
                auto& list = j["graphs"] = nlohmann::ordered_json::array();
                for (const auto& g : graphs) list.push_back(graph6_encode(g));
                sink.get() << j.dump(2) << "\n";
            } else {
                throw Error(ErrorKind::UsageError, "enumerate supports --format graph6|csv|json");
            }
            return 0;
        }
        if (*extremal) {
            Sink sink(o.out_path, out);
            auto report = scan({o.n, o.k, std::nullopt}, kernel_by_name(o.index),
                               o.direction == "min" ? Direction::Min : Direction::Max, o.workers);
            if (o.format == "table")
                throw Error(ErrorKind::UsageError, "extremal supports --format json|csv|graph6");
            sink.get() << format_report(report, parse_output_format(o.format));
            return 0;
        }
        if (*verify) {
            Sink sink(o.out_path, out);
            std::vector<TheoremCheck> checks;
            if (*theorem1)
                checks = verify_theorem1(o.nmax, o.workers);
            else if (*theorem2)
                checks.push_back(verify_theorem2(o.n, o.workers));
            else if (*maxclaims)
                checks.push_back(verify_max_claims(o.n, o.workers));
            else if (*fmonotone)
                checks.push_back(verify_f_monotone(o.nmax));
            return emit_checks(checks, o, sink.get());
        }
        if (*conjecture) {
            Sink sink(o.out_path, out);
            auto verdict = check_conjecture(o.n, o.workers, o.budget);
            if (o.format == "table" || o.format == "graph6")
                throw Error(ErrorKind::UsageError, "conjecture supports --format json|csv");
            sink.get() << format_report(verdict, parse_output_format(o.format));
            return 0;
        }
        if (*climb) {
            Sink sink(o.out_path, out);
            auto seeds = load_graphs(o.family, o.graph6_path, in);
            if (seeds.size() != 1)
                throw Error(ErrorKind::UsageError, "climb expects exactly one seed tree");
            auto trace = hill_climb_max_azi(seeds[0], o.max_steps, o.seed);
            if (o.format == "table")
                throw Error(ErrorKind::UsageError, "climb supports --format json|csv|graph6");
            sink.get() << format_report(trace, parse_output_format(o.format));
            return 0;
        }
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
    err << "error: no subcommand selected\n";
    return 2;
}

int run_main(int argc, char** argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) args.emplace_back(argv[i]);
    return run(args, std::cout, std::cerr, std::cin);
}

} // namespace azi::cli
