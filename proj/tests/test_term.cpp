#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "izr/suites.hpp"
#include "izr/term.hpp"

using namespace izr;

namespace {

TermPtr v(const char* name) { return Term::variable(name); }

}  // namespace

TEST_CASE("derived operators expand into the core signature") {
    // x' = x -> 0
    CHECK(equal(parse_term("x'"), Term::arrow(v("x"), Term::zero())));
    // x ^ y = (x -> (y -> 0)) -> 0
    CHECK(equal(parse_term("x ^ y"),
                Term::arrow(Term::arrow(v("x"), Term::arrow(v("y"), Term::zero())),
                            Term::zero())));
    CHECK(equal(parse_term("0"), Term::zero()));
    CHECK(equal(parse_term("x v y"), join(v("x"), v("y"))));
    CHECK(to_string(*parse_term("x v y")) == "(((x -> 0) -> (y -> 0) -> 0) -> 0) -> 0");
    CHECK(to_string(*parse_term("x ^ y")) == "(x -> y -> 0) -> 0");

    // No derived operator survives expansion.
    std::function<bool(const Term&)> core = [&](const Term& t) {
        switch (t.kind()) {
            case Term::Kind::Zero:
            case Term::Kind::Variable: return true;
            case Term::Kind::Arrow: return core(*t.left()) && core(*t.right());
        }
        return false;
    };
    CHECK(core(*parse_term("x' ^ (y v z')' v 0''")));
}

TEST_CASE("precedence and associativity") {
    CHECK(equal(parse_term("x -> y -> z"), Term::arrow(v("x"), Term::arrow(v("y"), v("z")))));
    CHECK(equal(parse_term("(x -> y) -> z"), Term::arrow(Term::arrow(v("x"), v("y")), v("z"))));
    // ' > ^ > v > ->
    CHECK(equal(parse_term("x ^ y'"), meet(v("x"), prime(v("y")))));
    CHECK(equal(parse_term("x ^ y v z -> u"),
                Term::arrow(join(meet(v("x"), v("y")), v("z")), v("u"))));
    CHECK(equal(parse_term("x v y ^ z"), join(v("x"), meet(v("y"), v("z")))));
    CHECK(equal(parse_term("(x -> y)'"), prime(Term::arrow(v("x"), v("y")))));
    CHECK(equal(parse_term("x''"), prime(prime(v("x")))));
}

TEST_CASE("unicode arrows are accepted, ASCII is emitted") {
    CHECK(equal(parse_term("x → y"), parse_term("x -> y")));
    CHECK(to_string(*parse_term("x → y")) == "x -> y");
}

TEST_CASE("identifiers are a letter plus optional digits") {
    CHECK(equal(parse_term("x1 -> y23"), Term::arrow(v("x1"), v("y23"))));
    CHECK_THROWS_AS(parse_term("xy"), ParseError);   // two adjacent atoms
    CHECK_THROWS_AS(parse_term("x y"), ParseError);
    // bare `v` is the join operator, never a variable
    CHECK(equal(parse_term("v1 v v2"), join(v("v1"), v("v2"))));
}

TEST_CASE("parse errors carry positions") {
    CHECK_THROWS_AS(parse_term(""), ParseError);
    CHECK_THROWS_AS(parse_term("x ->"), ParseError);
    CHECK_THROWS_AS(parse_term("(x -> y"), ParseError);
    CHECK_THROWS_AS(parse_term("-> x"), ParseError);
    CHECK_THROWS_AS(parse_term("x $ y"), ParseError);
    try {
        parse_term("x $ y");
        FAIL("expected ParseError");
    } catch (const ParseError& e) {
        CHECK(e.position() == 2);
    }
    CHECK_THROWS_AS(parse_identity("x'' x"), ParseError);
    CHECK_THROWS_AS(parse_identity("x = y = z"), ParseError);
    CHECK_THROWS_AS(parse_identity("x''"), ParseError);
}

TEST_CASE("parse_identity keeps both sides as written") {
    Identity id = parse_identity("x'' = x");
    CHECK(equal(id.lhs, prime(prime(v("x")))));
    CHECK(equal(id.rhs, v("x")));
    CHECK(id.name.empty());

    Identity br = parse_identity("x ^ (x v y) = x v (x ^ y)");
    CHECK(equal(br.lhs, meet(v("x"), join(v("x"), v("y")))));
    CHECK(equal(br.rhs, join(v("x"), meet(v("x"), v("y")))));

    Identity trivial = parse_identity("0 = 0");
    CHECK(trivial.lhs->is_zero());
    CHECK(trivial.rhs->is_zero());
}

TEST_CASE("variables_of lists first occurrences in order") {
    CHECK(variables_of(*Term::arrow(v("x"), Term::arrow(v("y"), Term::zero()))) ==
          std::vector<std::string>{"x", "y"});
    CHECK(variables_of(*Term::zero()).empty());
    CHECK(variables_of(parse_identity("x ^ (x v y) = x v (x ^ y)")) ==
          std::vector<std::string>{"x", "y"});
    CHECK(variables_of(*parse_term("z -> (y -> z) -> x")) ==
          std::vector<std::string>{"z", "y", "x"});
    CHECK(variables_of(parse_identity("y' = x -> y")) == std::vector<std::string>{"y", "x"});
}

TEST_CASE("transfer shape") {
    CHECK(is_transfer_shape(parse_identity("(x -> y) -> z = (y -> x) -> z")));
    CHECK_FALSE(is_transfer_shape(parse_identity("x'' = x")));
    CHECK(is_transfer_shape(parse_identity("x ^ (x v y) = x v (x ^ y)")));
    CHECK_FALSE(is_transfer_shape(parse_identity("0 -> (x -> y) = x -> (0 -> y)")));
    // invariant under renaming
    CHECK(is_transfer_shape(parse_identity("(u -> z1) -> y2 = (z1 -> u) -> y2")));
}

namespace {

TermPtr random_term(std::mt19937& rng, int depth) {
    static const char* names[] = {"x", "y", "z", "u"};
    std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 2);
    switch (pick(rng)) {
        case 0: return Term::variable(names[rng() % 4]);
        case 1: return Term::zero();
        default: return Term::arrow(random_term(rng, depth - 1), random_term(rng, depth - 1));
    }
}

}  // namespace

TEST_CASE("printing round-trips") {
    std::mt19937 rng(20240817);
    for (int i = 0; i < 500; ++i) {
        TermPtr t = random_term(rng, 5);
        CHECK(equal(parse_term(to_string(*t)), t));
    }
    // Printed normal forms re-print verbatim.
    for (const char* s : {"0", "x", "x -> y -> z", "(x -> y) -> z", "0 -> x",
                          "((x -> 0) -> y) -> 0", "(x -> y -> 0) -> 0"}) {
        CHECK(to_string(*parse_term(s)) == s);
    }
}

TEST_CASE("catalog files parse and enforce unique names") {
    IdentityCatalog cat = parse_catalog("# header\n\nA: x = x\nB : x' = x -> 0\n");
    CHECK(cat.size() == 2);
    REQUIRE(cat.find("A") != nullptr);
    REQUIRE(cat.find("B") != nullptr);
    CHECK(equal(cat.find("B")->lhs, cat.find("B")->rhs));
    CHECK(cat.find("C") == nullptr);

    CHECK_THROWS_AS(parse_catalog("A: x = x\nA: y = y\n"), ParseError);
    CHECK_THROWS_AS(parse_catalog("no-colon-line\n"), ParseError);
    CHECK_THROWS_AS(parse_catalog("A: x -> = y\n"), ParseError);
}

TEST_CASE("builtin catalogs") {
    CHECK(builtin_catalog("l2").size() == 22);
    CHECK(builtin_catalog("l3").size() == 16);
    CHECK(builtin_catalog("equivalence").size() == 4);
    CHECK(builtin_catalog("is-lemma").size() == 4);
    CHECK(builtin_catalog("s-theorem").size() == 4);
    for (int i = 1; i <= 22; ++i)
        CHECK(builtin_catalog("l2").find("L2-" + std::to_string(i)) != nullptr);
    for (int i = 1; i <= 16; ++i)
        CHECK(builtin_catalog("l3").find("L3-" + std::to_string(i)) != nullptr);
    for (const Identity& id : builtin_catalog("transfer").entries())
        CHECK(is_transfer_shape(id));
    CHECK(builtin_catalog("transfer").size() == 25);
    CHECK_THROWS_AS(builtin_catalog("nope"), std::invalid_argument);
}
