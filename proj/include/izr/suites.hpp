#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "izr/classify.hpp"
#include "izr/enumerate.hpp"

namespace izr {

struct SuiteScope {
    Variety variety = Variety::I;
    int min_size = 1;
    int max_size = 3;
};

struct SuiteOptions {
    int jobs = 1;
    std::optional<double> budget_seconds;
    // When set, completed enumeration streams are written to (and reused
    // from) this directory, keyed by class and size. Suites re-enumerate
    // by default.
    std::optional<std::string> cache_dir;
};

enum class Verdict { Pass, Fail, Incomplete };

std::string_view to_string(Verdict v);
int exit_code(Verdict v);  // pass 0, fail 1, incomplete 2

struct SuiteFailure {
    FiniteAlgebra algebra;
    std::string check;
    nlohmann::ordered_json witness;
};

struct SuiteResult {
    std::string suite;
    SuiteScope scope;
    long long algebras_checked = 0;
    std::vector<SuiteFailure> failures;
    Verdict verdict = Verdict::Pass;
};

nlohmann::ordered_json to_json(const SuiteResult& r);

// Catalogs shipped with the library (also present as files under
// catalogs/): "l2", "l3", "equivalence", "transfer", "is-lemma",
// "s-theorem".
const IdentityCatalog& builtin_catalog(std::string_view name);
std::vector<std::string> builtin_catalog_names();

// Every catalog identity checked on every algebra in scope.
SuiteResult run_catalog_suite(const SuiteScope& scope, const IdentityCatalog& catalog,
                              const SuiteOptions& opts = {},
                              std::string suite_name = "catalog");

// The four equivalent conditions, checked as a cluster: a member fails
// only when the four satisfaction values are not all equal.
SuiteResult run_equivalence_suite(int max_size, const SuiteOptions& opts = {});

// Registered quantified statements; see statement_names().
SuiteResult run_statement_suite(std::string_view name, int max_size,
                                const SuiteOptions& opts = {});
std::vector<std::string> statement_names();

// For each (transfer-shaped) identity, compares "holds on every involutive
// member up to the bound" against "holds on every member up to the bound"
// and red-flags identities where the first is true and the second false.
// Throws std::invalid_argument naming the offender if an identity is not
// transfer-shaped.
SuiteResult run_transfer_harness(const IdentityCatalog& catalog, int max_size,
                                 const SuiteOptions& opts = {});

// CLI-level dispatcher: statement names plus "equivalence", "catalog-l2",
// "catalog-l3" and "transfer". Names are case-insensitive.
SuiteResult run_suite(std::string_view name, int max_size, const SuiteOptions& opts = {});
std::vector<std::string> suite_names();

struct SearchOutcome {
    std::vector<FiniteAlgebra> algebras;
    bool complete = true;
    double elapsed_seconds = 0.0;
};

// All class representatives up to max_size whose derived bimagma is a
// Birkhoff bisemigroup but not a bisemilattice.
SearchOutcome search_birkhoff_not_bisemilattice(int max_size, const SuiteOptions& opts = {});

}  // namespace izr
