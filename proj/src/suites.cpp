#include "izr/suites.hpp"

#include <algorithm>
#include <atomic>
#include <cctype>
#include <filesystem>
#include <fstream>
#include <functional>
#include <map>
#include <stdexcept>
#include <thread>

#include "embedded_catalogs.hpp"
#include "izr/json_io.hpp"

namespace izr {

std::string_view to_string(Verdict v) {
    switch (v) {
        case Verdict::Pass: return "pass";
        case Verdict::Fail: return "fail";
        case Verdict::Incomplete: return "incomplete";
    }
    return "?";
}

int exit_code(Verdict v) {
    switch (v) {
        case Verdict::Pass: return 0;
        case Verdict::Fail: return 1;
        case Verdict::Incomplete: return 2;
    }
    return 1;
}

nlohmann::ordered_json to_json(const SuiteResult& r) {
    nlohmann::ordered_json j;
    j["suite"] = r.suite;
    j["scope"] = {{"variety", std::string(to_string(r.scope.variety))},
                  {"min_size", r.scope.min_size},
                  {"max_size", r.scope.max_size}};
    j["checked"] = r.algebras_checked;
    nlohmann::ordered_json fails = nlohmann::ordered_json::array();
    for (const SuiteFailure& f : r.failures) {
        nlohmann::ordered_json e;
        e["algebra"] = algebra_to_json(f.algebra);
        e["check"] = f.check;
        e["witness"] = f.witness;
        fails.push_back(std::move(e));
    }
    j["failures"] = std::move(fails);
    j["verdict"] = std::string(to_string(r.verdict));
    return j;
}

const IdentityCatalog& builtin_catalog(std::string_view name) {
    static const std::map<std::string, IdentityCatalog, std::less<>> catalogs = [] {
        std::map<std::string, IdentityCatalog, std::less<>> m;
        m.emplace("l2", parse_catalog(detail::kCatalogL2));
        m.emplace("l3", parse_catalog(detail::kCatalogL3));
        m.emplace("equivalence", parse_catalog(detail::kCatalogEquivalence));
        m.emplace("transfer", parse_catalog(detail::kCatalogTransfer));
        m.emplace("is-lemma", parse_catalog(detail::kCatalogIsLemma));
        m.emplace("s-theorem", parse_catalog(detail::kCatalogSTheorem));
        return m;
    }();
    auto it = catalogs.find(name);
    if (it == catalogs.end())
        throw std::invalid_argument("unknown builtin catalog '" + std::string(name) + "'");
    return it->second;
}

std::vector<std::string> builtin_catalog_names() {
    return {"l2", "l3", "equivalence", "transfer", "is-lemma", "s-theorem"};
}

namespace {

using Clock = std::chrono::steady_clock;

std::optional<Clock::time_point> make_deadline(const SuiteOptions& opts) {
    if (!opts.budget_seconds) return std::nullopt;
    return Clock::now() + std::chrono::duration_cast<Clock::duration>(
                              std::chrono::duration<double>(*opts.budget_seconds));
}

std::optional<std::vector<FiniteAlgebra>> load_cached_stream(const std::string& path) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    std::vector<FiniteAlgebra> out;
    std::string line;
    bool complete = false;
    try {
        while (std::getline(in, line)) {
            if (line.empty()) continue;
            const auto j = nlohmann::json::parse(line);
            if (j.contains("complete")) {
                complete = j.at("complete").get<bool>();
                break;
            }
            out.push_back(algebra_from_json(j));
        }
    } catch (const std::exception&) {
        return std::nullopt;  // unreadable cache entries are re-enumerated
    }
    if (!complete) return std::nullopt;
    return out;
}

void store_cached_stream(const std::string& path, const EnumerationResult& r) {
    std::ofstream out(path, std::ios::binary);
    if (!out) return;
    for (const FiniteAlgebra& a : r.algebras) out << algebra_to_json(a).dump() << '\n';
    nlohmann::ordered_json meta;
    meta["complete"] = true;
    meta["count"] = r.algebras.size();
    meta["elapsed"] = r.elapsed_seconds;
    out << meta.dump() << '\n';
}

EnumerationResult enumerate_scope_size(Variety v, int size, const SuiteOptions& opts,
                                       std::optional<Clock::time_point> deadline) {
    std::optional<std::string> cache_file;
    if (opts.cache_dir) {
        std::filesystem::create_directories(*opts.cache_dir);
        cache_file = (std::filesystem::path(*opts.cache_dir) /
                      (std::string(to_string(v)) + "-" + std::to_string(size) + ".jsonl"))
                         .string();
        if (auto cached = load_cached_stream(*cache_file)) {
            EnumerationResult r;
            r.algebras = std::move(*cached);
            r.complete = true;
            return r;
        }
    }
    SearchConfig cfg;
    cfg.size = size;
    cfg.filter = v;
    cfg.iso_reduce = true;
    cfg.jobs = opts.jobs;
    EnumerationResult r = enumerate_until(cfg, deadline);
    if (cache_file && r.complete) store_cached_stream(*cache_file, r);
    return r;
}

template <typename Fn>
void parallel_for(std::size_t count, int jobs, Fn&& fn) {
    if (jobs <= 1 || count <= 1) {
        for (std::size_t i = 0; i < count; ++i) fn(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= count) return;
            fn(i);
        }
    };
    std::vector<std::thread> pool;
    const int width = std::min<std::size_t>(jobs, count);
    for (int j = 0; j < width; ++j) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

// Enumerates the scope size by size and applies `check` to each algebra;
// per-algebra failures are appended in canonical order regardless of jobs.
SuiteResult run_over_scope(
    std::string suite_name, const SuiteScope& scope, const SuiteOptions& opts,
    const std::function<void(const FiniteAlgebra&, std::vector<SuiteFailure>&)>& check) {
    SuiteResult res;
    res.suite = std::move(suite_name);
    res.scope = scope;
    const auto deadline = make_deadline(opts);
    bool complete = true;

    for (int size = scope.min_size; size <= scope.max_size && complete; ++size) {
        EnumerationResult er = enumerate_scope_size(scope.variety, size, opts, deadline);
        if (!er.complete) complete = false;
        res.algebras_checked += static_cast<long long>(er.algebras.size());

        std::vector<std::vector<SuiteFailure>> slots(er.algebras.size());
        parallel_for(er.algebras.size(), opts.jobs,
                     [&](std::size_t i) { check(er.algebras[i], slots[i]); });
        for (auto& slot : slots)
            for (auto& f : slot) res.failures.push_back(std::move(f));
    }

    if (!res.failures.empty())
        res.verdict = Verdict::Fail;
    else
        res.verdict = complete ? Verdict::Pass : Verdict::Incomplete;
    return res;
}

}  // namespace

SuiteResult run_catalog_suite(const SuiteScope& scope, const IdentityCatalog& catalog,
                              const SuiteOptions& opts, std::string suite_name) {
    return run_over_scope(std::move(suite_name), scope, opts,
                          [&catalog](const FiniteAlgebra& a, std::vector<SuiteFailure>& out) {
                              for (const Identity& id : catalog.entries())
                                  if (auto w = find_witness(a, id))
                                      out.push_back({a, id.name, witness_to_json(*w)});
                          });
}

SuiteResult run_equivalence_suite(int max_size, const SuiteOptions& opts) {
    const IdentityCatalog& cat = builtin_catalog("equivalence");
    SuiteScope scope{Variety::I, 1, max_size};
    return run_over_scope(
        "equivalence", scope, opts,
        [&cat](const FiniteAlgebra& a, std::vector<SuiteFailure>& out) {
            nlohmann::ordered_json cluster;
            bool first_value = false, mixed = false, first = true;
            for (const Identity& id : cat.entries()) {
                const bool sat = satisfies(a, id);
                cluster[id.name] = sat;
                if (first) {
                    first_value = sat;
                    first = false;
                } else if (sat != first_value) {
                    mixed = true;
                }
            }
            if (mixed)
                out.push_back({a, "equivalence-cluster",
                               nlohmann::ordered_json{{"cluster", cluster}}});
        });
}

namespace {

struct Statement {
    Variety scope;
    std::function<void(const FiniteAlgebra&, std::vector<SuiteFailure>&)> check;
};

void check_catalog_on(const FiniteAlgebra& a, const IdentityCatalog& cat,
                      std::vector<SuiteFailure>& out) {
    for (const Identity& id : cat.entries())
        if (auto w = find_witness(a, id)) out.push_back({a, id.name, witness_to_json(*w)});
}

const std::map<std::string, Statement, std::less<>>& statement_registry() {
    static const std::map<std::string, Statement, std::less<>> reg = [] {
        std::map<std::string, Statement, std::less<>> m;

        m.emplace("main", Statement{Variety::I, [](const FiniteAlgebra& a,
                                                   std::vector<SuiteFailure>& out) {
                      if (auto w = satisfies_birkhoff(derive_bimagma(a)))
                          out.push_back({a, "birkhoff", element_witness_to_json(*w)});
                  }});

        m.emplace("theo-bs-i20", Statement{Variety::I20, [](const FiniteAlgebra& a,
                                                            std::vector<SuiteFailure>& out) {
                      if (auto w = satisfies_birkhoff(derive_bimagma(a)))
                          out.push_back({a, "birkhoff", element_witness_to_json(*w)});
                  }});

        m.emplace("bisemigroup", Statement{Variety::I, [](const FiniteAlgebra& a,
                                                          std::vector<SuiteFailure>& out) {
                      if (auto w = bisemigroup_witness(derive_bimagma(a)))
                          out.push_back({a, w->law, element_witness_to_json(*w)});
                  }});

        m.emplace("corollary-iff", Statement{Variety::I, [](const FiniteAlgebra& a,
                                                            std::vector<SuiteFailure>& out) {
                      const DerivedBimagma bm = derive_bimagma(a);
                      const bool birkhoff_system =
                          !is_bisemilattice(bm) && !satisfies_birkhoff(bm);
                      const bool symmetric = in_variety(a, Variety::S);
                      if (birkhoff_system != symmetric)
                          out.push_back({a, "birkhoff-system-iff-symmetric",
                                         nlohmann::ordered_json{
                                             {"derived_is_birkhoff_system", birkhoff_system},
                                             {"in_S", symmetric}}});
                  }});

        m.emplace("s-theorem", Statement{Variety::S, [](const FiniteAlgebra& a,
                                                        std::vector<SuiteFailure>& out) {
                      check_catalog_on(a, builtin_catalog("s-theorem"), out);
                  }});

        m.emplace("is-lemma", Statement{Variety::IS, [](const FiniteAlgebra& a,
                                                        std::vector<SuiteFailure>& out) {
                      check_catalog_on(a, builtin_catalog("is-lemma"), out);
                  }});

        m.emplace("is-semigroup", Statement{Variety::IS, [](const FiniteAlgebra& a,
                                                            std::vector<SuiteFailure>& out) {
                      if (auto w = essentially_semigroup_witness(derive_bimagma(a)))
                          out.push_back({a, w->law, element_witness_to_json(*w)});
                  }});

        return m;
    }();
    return reg;
}

std::string lower(std::string_view s) {
    std::string out(s);
    for (char& c : out) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    return out;
}

}  // namespace

std::vector<std::string> statement_names() {
    std::vector<std::string> names;
    for (const auto& [name, _] : statement_registry()) names.push_back(name);
    return names;
}

SuiteResult run_statement_suite(std::string_view name, int max_size, const SuiteOptions& opts) {
    const std::string key = lower(name);
    auto it = statement_registry().find(key);
    if (it == statement_registry().end())
        throw std::invalid_argument("unknown statement '" + std::string(name) + "'");
    SuiteScope scope{it->second.scope, 1, max_size};
    return run_over_scope(key, scope, opts, it->second.check);
}

SuiteResult run_transfer_harness(const IdentityCatalog& catalog, int max_size,
                                 const SuiteOptions& opts) {
    for (const Identity& id : catalog.entries())
        if (!is_transfer_shape(id))
            throw std::invalid_argument("transfer harness: identity '" + id.name +
                                        "' is not transfer-shaped");

    SuiteResult res;
    res.suite = "transfer";
    res.scope = SuiteScope{Variety::I, 1, max_size};
    const auto deadline = make_deadline(opts);
    bool complete = true;

    std::vector<FiniteAlgebra> members;
    for (int size = 1; size <= max_size && complete; ++size) {
        EnumerationResult er = enumerate_scope_size(Variety::I, size, opts, deadline);
        if (!er.complete) complete = false;
        for (auto& a : er.algebras) members.push_back(std::move(a));
    }
    res.algebras_checked = static_cast<long long>(members.size());

    std::vector<char> involutive(members.size());
    for (std::size_t i = 0; i < members.size(); ++i)
        involutive[i] = satisfies(members[i], involution_identity());

    for (const Identity& id : catalog.entries()) {
        bool holds_i20 = true;
        std::optional<std::size_t> failing;
        std::optional<Witness> failing_witness;
        for (std::size_t i = 0; i < members.size(); ++i) {
            auto w = find_witness(members[i], id);
            if (w && involutive[i]) {
                holds_i20 = false;
                break;
            }
            if (w && !failing) {
                failing = i;
                failing_witness = std::move(w);
            }
        }
        if (holds_i20 && failing) {
            nlohmann::ordered_json payload;
            payload["red_flag"] = true;
            payload["holds_I20"] = true;
            payload["holds_I"] = false;
            payload["witness"] = witness_to_json(*failing_witness);
            res.failures.push_back({members[*failing], id.name, std::move(payload)});
        }
    }

    if (!res.failures.empty())
        res.verdict = Verdict::Fail;
    else
        res.verdict = complete ? Verdict::Pass : Verdict::Incomplete;
    return res;
}

SuiteResult run_suite(std::string_view name, int max_size, const SuiteOptions& opts) {
    const std::string key = lower(name);
    if (key == "equivalence") return run_equivalence_suite(max_size, opts);
    if (key == "catalog-l2")
        return run_catalog_suite({Variety::I20, 1, max_size}, builtin_catalog("l2"), opts,
                                 "catalog-l2");
    if (key == "catalog-l3")
        return run_catalog_suite({Variety::I20, 1, max_size}, builtin_catalog("l3"), opts,
                                 "catalog-l3");
    if (key == "transfer") return run_transfer_harness(builtin_catalog("transfer"), max_size, opts);
    return run_statement_suite(key, max_size, opts);
}

std::vector<std::string> suite_names() {
    std::vector<std::string> names = statement_names();
    names.push_back("equivalence");
    names.push_back("catalog-l2");
    names.push_back("catalog-l3");
    names.push_back("transfer");
    std::sort(names.begin(), names.end());
    return names;
}

SearchOutcome search_birkhoff_not_bisemilattice(int max_size, const SuiteOptions& opts) {
    const auto start = Clock::now();
    const auto deadline = make_deadline(opts);
    SearchOutcome out;
    for (int size = 1; size <= max_size && out.complete; ++size) {
        EnumerationResult er = enumerate_scope_size(Variety::I, size, opts, deadline);
        if (!er.complete) out.complete = false;
        for (auto& a : er.algebras) {
            const DerivedBimagma bm = derive_bimagma(a);
            if (!bisemigroup_witness(bm) && !satisfies_birkhoff(bm) && is_bisemilattice(bm))
                out.algebras.push_back(std::move(a));
        }
    }
    out.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start).count();
    return out;
}

}  // namespace izr
