#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "izr/algebra.hpp"

namespace izr {

enum class Variety { I, I20, MC, S, IS };

std::optional<Variety> variety_from_string(std::string_view s);
std::string_view to_string(Variety v);

// Membership of a (complete) algebra in the requested class. Every class
// is relative to the defining identities, so I-membership is included.
bool in_variety(const FiniteAlgebra& alg, Variety v);

// Search state: -1 marks UNSET cells.
struct PartialTable {
    int size = 0;
    std::vector<std::int16_t> entries;

    static PartialTable empty(int n);
    int at(int a, int b) const { return entries[a * size + b]; }
    void set(int a, int b, int v) { entries[a * size + b] = static_cast<std::int16_t>(v); }
};

// True iff no fully determined instance of the defining identity or of
// 0'' = 0 is violated. An instance is fully determined when every table
// lookup it needs (on either side) is set.
bool check_partial(const PartialTable& pt);

struct SearchConfig {
    int size = 2;
    Variety filter = Variety::I;
    bool iso_reduce = true;
    std::optional<double> budget_seconds;
    int parallel_width = 0;  // 0 = choose automatically when jobs > 1
    int jobs = 1;
};

struct EnumerationResult {
    std::vector<FiniteAlgebra> algebras;  // sorted by (size, row-major table)
    bool complete = true;
    double elapsed_seconds = 0.0;
};

// Every algebra of the configured size in the configured class. With
// iso_reduce, exactly the canonical (lexicographically least) member of
// each isomorphism class is emitted. Output order is deterministic and
// independent of jobs/parallel_width.
EnumerationResult enumerate(const SearchConfig& cfg);

// As above with an absolute deadline shared across several calls.
EnumerationResult enumerate_until(
    const SearchConfig& cfg,
    std::optional<std::chrono::steady_clock::time_point> deadline);

struct CountResult {
    long long count = 0;
    bool complete = true;
    double elapsed_seconds = 0.0;
};

CountResult count_classes(int size, Variety filter, std::optional<double> budget_seconds = {},
                          int jobs = 1);

}  // namespace izr
