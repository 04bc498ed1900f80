#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "izr/algebra.hpp"

namespace izr {

// Counterexample over concrete carrier elements (used for checks that run
// directly on derived tables rather than through term evaluation).
struct ElementWitness {
    std::string law;
    std::vector<int> elements;
    int lhs_value = 0;
    int rhs_value = 0;
};

nlohmann::ordered_json element_witness_to_json(const ElementWitness& w);

using AnyWitness = std::variant<Witness, ElementWitness>;
nlohmann::ordered_json any_witness_to_json(const AnyWitness& w);

// Law checks on raw n x n tables; nullopt means the law holds.
std::optional<ElementWitness> associativity_witness(const std::vector<std::uint8_t>& table, int n,
                                                    const std::string& law);
std::optional<ElementWitness> commutativity_witness(const std::vector<std::uint8_t>& table, int n,
                                                    const std::string& law);
std::optional<ElementWitness> idempotence_witness(const std::vector<std::uint8_t>& table, int n,
                                                  const std::string& law);

// Both operations associative.
std::optional<ElementWitness> bisemigroup_witness(const DerivedBimagma& bm);
// Both operations associative, commutative and idempotent.
std::optional<ElementWitness> is_bisemilattice(const DerivedBimagma& bm);
// x ^ (x v y) = x v (x ^ y) over the derived tables.
std::optional<ElementWitness> satisfies_birkhoff(const DerivedBimagma& bm);
// Meet and join tables coincide and the common operation is associative.
bool essentially_semigroup(const DerivedBimagma& bm);
std::optional<ElementWitness> essentially_semigroup_witness(const DerivedBimagma& bm);

struct ClassificationReport {
    bool in_i = false;
    bool in_i20 = false;
    bool in_mc = false;
    bool in_s = false;
    bool in_is = false;
    bool derived_is_bisemigroup = false;
    bool derived_is_bisemilattice = false;
    bool derived_satisfies_br = false;
    bool derived_is_birkhoff_system = false;
    bool derived_is_birkhoff_bisemigroup = false;
    bool derived_essentially_semigroup = false;
    std::map<std::string, AnyWitness> witnesses;  // failed flag -> evidence
};

// Computes every flag by exhaustive checks. in_i20/in_mc/in_is record the
// satisfaction of their defining identities; in_i and in_s are the
// variety memberships. Composite flags are computed from fresh checks and
// cross-validated against their definitions (throws std::logic_error on
// disagreement, which would indicate an evaluator bug).
ClassificationReport classify(const FiniteAlgebra& alg);

nlohmann::ordered_json to_json(const ClassificationReport& report);

}  // namespace izr
