#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "izr/classify.hpp"
#include "izr/enumerate.hpp"
#include "izr/json_io.hpp"
#include "izr/suites.hpp"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitIncomplete = 2;
constexpr int kExitUsage = 64;

class Output {
public:
    explicit Output(const std::string& path) {
        if (!path.empty()) {
            file_.open(path, std::ios::binary);
            if (!file_) throw std::invalid_argument("cannot open output file '" + path + "'");
        }
    }
    std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
    std::ofstream file_;
};

std::string seconds_string(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3fs", s);
    return buf;
}

izr::Variety parse_variety_or_throw(const std::string& s) {
    auto v = izr::variety_from_string(s);
    if (!v)
        throw std::invalid_argument("--variety must be one of i, i20, mc, s, is (got '" + s +
                                    "')");
    return *v;
}

struct EnumerateArgs {
    int size = 2;
    std::string variety = "i";
    bool no_iso_reduce = false;
    std::optional<double> budget;
    int jobs = 1;
    std::string out;
};

int cmd_enumerate(const EnumerateArgs& args) {
    izr::SearchConfig cfg;
    cfg.size = args.size;
    cfg.filter = parse_variety_or_throw(args.variety);
    cfg.iso_reduce = !args.no_iso_reduce;
    cfg.budget_seconds = args.budget;
    cfg.jobs = args.jobs;
    Output out(args.out);

    izr::EnumerationResult result = izr::enumerate(cfg);

    for (const izr::FiniteAlgebra& a : result.algebras)
        out.stream() << izr::algebra_to_json(a).dump() << '\n';
    nlohmann::ordered_json meta;
    meta["complete"] = result.complete;
    meta["count"] = result.algebras.size();
    meta["elapsed"] = result.elapsed_seconds;
    out.stream() << meta.dump() << '\n';
    return result.complete ? kExitPass : kExitIncomplete;
}

struct CheckArgs {
    std::string algebra_path;
    std::string identity_text;
};

int cmd_check(const CheckArgs& args) {
    izr::FiniteAlgebra alg = izr::load_algebra_file(args.algebra_path);
    izr::Identity id = izr::parse_identity(args.identity_text);
    if (auto w = izr::find_witness(alg, id)) {
        std::cout << "false\n" << izr::witness_to_json(*w).dump() << '\n';
        return kExitFail;
    }
    std::cout << "true\n";
    return kExitPass;
}

int cmd_classify(const std::string& algebra_path, const std::string& out_path) {
    izr::FiniteAlgebra alg = izr::load_algebra_file(algebra_path);
    Output out(out_path);
    out.stream() << izr::to_json(izr::classify(alg)).dump() << '\n';
    return kExitPass;
}

struct VerifyArgs {
    std::string suite;
    int max_size = 3;
    int jobs = 1;
    std::optional<double> budget;
    std::string cache_dir;
    std::string out;
};

int cmd_verify(const VerifyArgs& args) {
    izr::SuiteOptions opts;
    opts.jobs = args.jobs;
    opts.budget_seconds = args.budget;
    if (!args.cache_dir.empty()) opts.cache_dir = args.cache_dir;
    Output out(args.out);
    izr::SuiteResult result = izr::run_suite(args.suite, args.max_size, opts);
    out.stream() << izr::to_json(result).dump() << '\n';
    return izr::exit_code(result.verdict);
}

struct SearchArgs {
    std::string name;
    int max_size = 3;
    int jobs = 1;
    std::optional<double> budget;
    std::string out;
};

int cmd_search(const SearchArgs& args) {
    if (args.name != "br-not-bisemilattice")
        throw std::invalid_argument("unknown search '" + args.name +
                                    "' (available: br-not-bisemilattice)");
    izr::SuiteOptions opts;
    opts.jobs = args.jobs;
    opts.budget_seconds = args.budget;
    Output out(args.out);
    izr::SearchOutcome outcome = izr::search_birkhoff_not_bisemilattice(args.max_size, opts);

    for (const izr::FiniteAlgebra& a : outcome.algebras)
        out.stream() << izr::algebra_to_json(a).dump() << '\n';
    nlohmann::ordered_json meta;
    meta["complete"] = outcome.complete;
    meta["count"] = outcome.algebras.size();
    meta["elapsed"] = outcome.elapsed_seconds;
    out.stream() << meta.dump() << '\n';
    return outcome.complete ? kExitPass : kExitIncomplete;
}

struct CensusArgs {
    std::string sizes;
    std::string varieties;
    int jobs = 1;
    std::optional<double> budget;
    std::string out;
};

int cmd_census(const CensusArgs& args) {
    int lo = 0, hi = 0;
    const std::size_t dots = args.sizes.find("..");
    try {
        if (dots == std::string::npos) {
            lo = hi = std::stoi(args.sizes);
        } else {
            lo = std::stoi(args.sizes.substr(0, dots));
            hi = std::stoi(args.sizes.substr(dots + 2));
        }
    } catch (const std::exception&) {
        throw std::invalid_argument("--sizes must be N or A..B (got '" + args.sizes + "')");
    }
    if (lo < 1 || hi < lo) throw std::invalid_argument("--sizes range is empty or invalid");

    std::vector<izr::Variety> varieties;
    std::size_t start = 0;
    while (start <= args.varieties.size()) {
        std::size_t comma = args.varieties.find(',', start);
        std::string tok = args.varieties.substr(
            start, comma == std::string::npos ? std::string::npos : comma - start);
        if (!tok.empty()) varieties.push_back(parse_variety_or_throw(tok));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    if (varieties.empty()) throw std::invalid_argument("--variety list is empty");

    Output out(args.out);
    bool all_complete = true;
    for (int size = lo; size <= hi; ++size) {
        for (izr::Variety v : varieties) {
            izr::CountResult r = izr::count_classes(size, v, args.budget, args.jobs);
            out.stream() << size << ", " << izr::to_string(v) << ", ";
            if (r.complete)
                out.stream() << r.count;
            else
                out.stream() << "≥" << r.count << " (incomplete)";
            out.stream() << ", " << seconds_string(r.elapsed_seconds) << '\n';
            all_complete = all_complete && r.complete;
        }
    }
    return all_complete ? kExitPass : kExitIncomplete;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Finite-model laboratory for implication zroupoids"};
    app.require_subcommand(1);

    EnumerateArgs en;
    CLI::App* enumerate = app.add_subcommand(
        "enumerate", "Enumerate algebras of one size, up to isomorphism by default");
    enumerate->add_option("--size", en.size, "Carrier size")->required();
    enumerate->add_option("--variety", en.variety, "Class filter: i, i20, mc, s, is");
    enumerate->add_flag("--no-iso-reduce", en.no_iso_reduce, "Emit every table, not one per class");
    enumerate->add_option("--budget", en.budget, "Wall-clock budget in seconds");
    enumerate->add_option("--jobs", en.jobs, "Worker threads")->check(CLI::PositiveNumber);
    enumerate->add_option("--out", en.out, "Write to file instead of stdout");

    CheckArgs ch;
    CLI::App* check = app.add_subcommand("check", "Check one identity on one algebra");
    check->add_option("--algebra", ch.algebra_path, "Algebra file (JSON or Cayley)")->required();
    check->add_option("--identity", ch.identity_text, "Identity, e.g. \"x'' = x\"")->required();

    std::string classify_path, classify_out;
    CLI::App* classify = app.add_subcommand("classify", "Full classification report");
    classify->add_option("--algebra", classify_path, "Algebra file (JSON or Cayley)")->required();
    classify->add_option("--out", classify_out, "Write to file instead of stdout");

    VerifyArgs ve;
    CLI::App* verify = app.add_subcommand("verify", "Run a verification suite");
    verify->add_option("--suite", ve.suite, "Suite name (see --list)")->required();
    verify->add_option("--max-size", ve.max_size, "Largest carrier size")->required();
    verify->add_option("--jobs", ve.jobs, "Worker threads")->check(CLI::PositiveNumber);
    verify->add_option("--budget", ve.budget, "Wall-clock budget in seconds");
    verify->add_option("--cache-dir", ve.cache_dir,
                       "Reuse completed enumeration streams from this directory");
    verify->add_option("--out", ve.out, "Write to file instead of stdout");

    SearchArgs se;
    CLI::App* search = app.add_subcommand("search", "Run a counterexample search");
    search->add_option("--name", se.name, "Search name: br-not-bisemilattice")->required();
    search->add_option("--max-size", se.max_size, "Largest carrier size")->required();
    search->add_option("--jobs", se.jobs, "Worker threads")->check(CLI::PositiveNumber);
    search->add_option("--budget", se.budget, "Wall-clock budget in seconds");
    search->add_option("--out", se.out, "Write to file instead of stdout");

    CensusArgs ce;
    CLI::App* census = app.add_subcommand("census", "Isomorphism-class counts per size/class");
    census->add_option("--sizes", ce.sizes, "Size range A..B")->required();
    census->add_option("--variety", ce.varieties, "Comma-separated classes")->required();
    census->add_option("--jobs", ce.jobs, "Worker threads")->check(CLI::PositiveNumber);
    census->add_option("--budget", ce.budget, "Wall-clock budget per row, in seconds");
    census->add_option("--out", ce.out, "Write to file instead of stdout");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (enumerate->parsed()) return cmd_enumerate(en);
        if (check->parsed()) return cmd_check(ch);
        if (classify->parsed()) return cmd_classify(classify_path, classify_out);
        if (verify->parsed()) return cmd_verify(ve);
        if (search->parsed()) return cmd_search(se);
        if (census->parsed()) return cmd_census(ce);
    } catch (const izr::ParseError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
