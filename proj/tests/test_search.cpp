#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "izr/enumerate.hpp"
#include "support/oracle.hpp"

using namespace izr;

namespace {

std::vector<FiniteAlgebra> run(int size, Variety v, bool iso_reduce, int jobs = 1,
                               int width = 0) {
    SearchConfig cfg;
    cfg.size = size;
    cfg.filter = v;
    cfg.iso_reduce = iso_reduce;
    cfg.jobs = jobs;
    cfg.parallel_width = width;
    EnumerationResult r = enumerate(cfg);
    REQUIRE(r.complete);
    return std::move(r.algebras);
}

}  // namespace

TEST_CASE("size 1 has exactly the trivial algebra") {
    const auto got = run(1, Variety::I, true);
    REQUIRE(got.size() == 1);
    CHECK(got[0] == FiniteAlgebra::from_rows({{0}}));
}

TEST_CASE("labeled enumeration equals brute force at sizes 2 and 3") {
    for (int n : {2, 3}) {
        auto brute = testing::brute_force_izroupoids(n);
        std::sort(brute.begin(), brute.end());
        const auto got = run(n, Variety::I, false);
        CHECK(got == brute);
    }
}

TEST_CASE("iso reduction emits one canonical representative per class") {
    for (int n : {2, 3}) {
        const auto classes = run(n, Variety::I, true);
        for (const auto& a : classes) CHECK(canonical_form(a) == a);
        for (std::size_t i = 0; i < classes.size(); ++i)
            for (std::size_t j = i + 1; j < classes.size(); ++j)
                CHECK_FALSE(isomorphic(classes[i], classes[j]));
        // every brute-force member is represented
        for (const auto& m : testing::brute_force_izroupoids(n)) {
            bool covered = false;
            for (const auto& c : classes)
                if (isomorphic(m, c)) {
                    covered = true;
                    break;
                }
            CHECK(covered);
        }
    }
}

TEST_CASE("golden class counts") {
    // Sizes 1-3 confirmed against the brute-force oracle; size 4 frozen
    // from the validated enumerator.
    CHECK(count_classes(1, Variety::I).count == 1);
    CHECK(count_classes(2, Variety::I).count == 3);
    CHECK(count_classes(3, Variety::I).count == 17);
    CHECK(count_classes(4, Variety::I).count == 249);

    CHECK(count_classes(2, Variety::I20).count == 2);
    CHECK(count_classes(2, Variety::MC).count == 3);
    CHECK(count_classes(2, Variety::S).count == 2);
    CHECK(count_classes(2, Variety::IS).count == 2);

    CHECK(count_classes(3, Variety::I20).count == 5);
    CHECK(count_classes(3, Variety::MC).count == 15);
    CHECK(count_classes(3, Variety::S).count == 3);
    CHECK(count_classes(3, Variety::IS).count == 6);
}

TEST_CASE("every emitted algebra satisfies its filter") {
    for (Variety v : {Variety::I, Variety::I20, Variety::MC, Variety::S, Variety::IS}) {
        for (const auto& a : run(3, v, true)) {
            CHECK(is_izroupoid(a));
            CHECK(in_variety(a, v));
        }
    }
}

TEST_CASE("subclass streams are contained in their parents") {
    for (int n : {2, 3}) {
        const auto i = run(n, Variety::I, true);
        const auto s = run(n, Variety::S, true);
        const auto i20 = run(n, Variety::I20, true);
        const auto mc = run(n, Variety::MC, true);
        const auto is = run(n, Variety::IS, true);
        auto contains = [](const std::vector<FiniteAlgebra>& big, const FiniteAlgebra& x) {
            return std::binary_search(big.begin(), big.end(), x);
        };
        for (const auto& a : s) {
            CHECK(contains(i20, a));
            CHECK(contains(mc, a));
        }
        for (const auto* sub : {&s, &i20, &mc, &is})
            for (const auto& a : *sub) CHECK(contains(i, a));
    }
}

TEST_CASE("streams are deterministic and independent of parallelism") {
    const auto base = run(3, Variety::I, true);
    CHECK(base == run(3, Variety::I, true));
    CHECK(base == run(3, Variety::I, true, 4));
    CHECK(base == run(3, Variety::I, true, 2, 5));
    CHECK(base == run(3, Variety::I, true, 8, 2));

    const auto labeled = run(3, Variety::I, false);
    CHECK(labeled == run(3, Variety::I, false, 4));
}

TEST_CASE("check_partial") {
    CHECK(check_partial(PartialTable::empty(3)));

    PartialTable pt = PartialTable::empty(2);
    pt.set(0, 0, 1);
    pt.set(1, 0, 1);  // 0'' = (0 -> 0) -> 0 = 1 -> 0 = 1 != 0
    CHECK_FALSE(check_partial(pt));
    pt.set(1, 0, 0);
    CHECK(check_partial(pt));

    // On complete tables check_partial coincides with is_izroupoid.
    std::vector<std::uint8_t> t(4, 0);
    while (true) {
        FiniteAlgebra a(2, t);
        PartialTable full = PartialTable::empty(2);
        for (int x = 0; x < 2; ++x)
            for (int y = 0; y < 2; ++y) full.set(x, y, a.apply(x, y));
        CHECK(check_partial(full) == is_izroupoid(a));
        std::size_t i = 0;
        while (i < t.size() && ++t[i] == 2) t[i++] = 0;
        if (i == t.size()) break;
    }
    std::mt19937 rng(23);
    for (int k = 0; k < 200; ++k) {
        std::vector<std::uint8_t> t3(9);
        for (auto& v : t3) v = static_cast<std::uint8_t>(rng() % 3);
        FiniteAlgebra a(3, t3);
        PartialTable full = PartialTable::empty(3);
        for (int x = 0; x < 3; ++x)
            for (int y = 0; y < 3; ++y) full.set(x, y, a.apply(x, y));
        CHECK(check_partial(full) == is_izroupoid(a));
    }
}

TEST_CASE("budget exhaustion aborts cleanly") {
    SearchConfig cfg;
    cfg.size = 5;
    cfg.filter = Variety::I;
    cfg.budget_seconds = 0.0;
    EnumerationResult r = enumerate(cfg);
    CHECK_FALSE(r.complete);
    for (const auto& a : r.algebras) CHECK(is_izroupoid(a));  // partial but sound
}

TEST_CASE("configuration validation") {
    SearchConfig cfg;
    cfg.size = 0;
    CHECK_THROWS_AS(enumerate(cfg), std::invalid_argument);
    cfg.size = 8;
    CHECK_THROWS_AS(enumerate(cfg), std::invalid_argument);
    cfg.size = 2;
    cfg.parallel_width = 4;
    CHECK_THROWS_AS(enumerate(cfg), std::invalid_argument);
    cfg.parallel_width = 0;
    cfg.jobs = 0;
    CHECK_THROWS_AS(enumerate(cfg), std::invalid_argument);
    CHECK_FALSE(variety_from_string("bogus").has_value());
    CHECK(variety_from_string("i20") == Variety::I20);
}
