#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "izr/term.hpp"

namespace izr {

// Finite algebra <A, ->, 0> with carrier {0,...,n-1}. The constant 0 is
// always carrier element 0; table()[a*n + b] stores a -> b.
class FiniteAlgebra {
public:
    FiniteAlgebra(int size, std::vector<std::uint8_t> table);
    static FiniteAlgebra from_rows(const std::vector<std::vector<int>>& rows);

    int size() const { return n_; }
    int apply(int a, int b) const { return table_[a * n_ + b]; }
    const std::vector<std::uint8_t>& table() const { return table_; }
    std::vector<std::vector<int>> rows() const;

    friend bool operator==(const FiniteAlgebra&, const FiniteAlgebra&) = default;
    friend auto operator<=>(const FiniteAlgebra&, const FiniteAlgebra&) = default;

private:
    int n_;
    std::vector<std::uint8_t> table_;
};

using Assignment = std::map<std::string, int>;

struct Witness {
    Assignment assignment;
    int lhs_value = 0;
    int rhs_value = 0;
};

class EvalError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

int eval_term(const FiniteAlgebra& alg, const Term& t, const Assignment& env);

// Checks the identity under every assignment of carrier elements to its
// variables (first-occurrence order, little-endian mixed-radix counting,
// so the first variable cycles fastest). Returns the first failing
// assignment, or nullopt when the identity holds.
std::optional<Witness> find_witness(const FiniteAlgebra& alg, const Identity& id);
bool satisfies(const FiniteAlgebra& alg, const Identity& id);

// Named core identities.
const Identity& defining_identity();        // (x -> y) -> z = ((z' -> x) -> (y -> z)')'
const Identity& zero_involution_identity(); // 0'' = 0
const Identity& involution_identity();      // x'' = x
const Identity& meet_commutative_identity();// x ^ y = y ^ x
const Identity& arrow_associative_identity();// x -> (y -> z) = (x -> y) -> z
const Identity& birkhoff_identity();        // x ^ (x v y) = x v (x ^ y)

bool is_izroupoid(const FiniteAlgebra& alg);

// The derived bimagma <A, ^, v>.
struct DerivedBimagma {
    int size = 0;
    std::vector<std::uint8_t> meet;
    std::vector<std::uint8_t> join;

    int meet_at(int a, int b) const { return meet[a * size + b]; }
    int join_at(int a, int b) const { return join[a * size + b]; }

    friend bool operator==(const DerivedBimagma&, const DerivedBimagma&) = default;
};

DerivedBimagma derive_bimagma(const FiniteAlgebra& alg);

// Isomorphism = bijection pi with pi(0) = 0 and pi(x -> y) = pi(x) -> pi(y).
std::optional<std::vector<int>> isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b);
bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b);

FiniteAlgebra relabel(const FiniteAlgebra& alg, const std::vector<int>& perm);

// Lexicographically least row-major table among all relabelings fixing
// element 0. Throws std::domain_error above max_size (the permutation
// search is factorial in the carrier size).
FiniteAlgebra canonical_form(const FiniteAlgebra& alg, int max_size = 7);

// Flattened postfix program for the identity-checking loops.
struct CompiledTerm {
    // code[i] >= 0: push env[code[i]]; -1: push 0; -2: pop b, pop a, push a->b.
    std::vector<std::int32_t> code;
    int stack_need = 1;
};

CompiledTerm compile_term(const Term& t, const std::vector<std::string>& var_order);
int eval_compiled(const CompiledTerm& ct, const FiniteAlgebra& alg, std::span<const int> env);

}  // namespace izr
