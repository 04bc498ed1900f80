#include "izr/classify.hpp"

#include <stdexcept>

#include "izr/json_io.hpp"

namespace izr {

nlohmann::ordered_json element_witness_to_json(const ElementWitness& w) {
    nlohmann::ordered_json j;
    j["law"] = w.law;
    j["elements"] = w.elements;
    j["lhs"] = w.lhs_value;
    j["rhs"] = w.rhs_value;
    return j;
}

nlohmann::ordered_json any_witness_to_json(const AnyWitness& w) {
    if (const Witness* aw = std::get_if<Witness>(&w)) return witness_to_json(*aw);
    return element_witness_to_json(std::get<ElementWitness>(w));
}

std::optional<ElementWitness> associativity_witness(const std::vector<std::uint8_t>& t, int n,
                                                    const std::string& law) {
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            for (int c = 0; c < n; ++c) {
                const int lhs = t[t[a * n + b] * n + c];
                const int rhs = t[a * n + t[b * n + c]];
                if (lhs != rhs) return ElementWitness{law, {a, b, c}, lhs, rhs};
            }
    return std::nullopt;
}

std::optional<ElementWitness> commutativity_witness(const std::vector<std::uint8_t>& t, int n,
                                                    const std::string& law) {
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            const int lhs = t[a * n + b];
            const int rhs = t[b * n + a];
            if (lhs != rhs) return ElementWitness{law, {a, b}, lhs, rhs};
        }
    return std::nullopt;
}

std::optional<ElementWitness> idempotence_witness(const std::vector<std::uint8_t>& t, int n,
                                                  const std::string& law) {
    for (int a = 0; a < n; ++a)
        if (t[a * n + a] != a) return ElementWitness{law, {a}, t[a * n + a], a};
    return std::nullopt;
}

std::optional<ElementWitness> bisemigroup_witness(const DerivedBimagma& bm) {
    if (auto w = associativity_witness(bm.meet, bm.size, "meet-associativity")) return w;
    return associativity_witness(bm.join, bm.size, "join-associativity");
}

std::optional<ElementWitness> is_bisemilattice(const DerivedBimagma& bm) {
    if (auto w = associativity_witness(bm.meet, bm.size, "meet-associativity")) return w;
    if (auto w = commutativity_witness(bm.meet, bm.size, "meet-commutativity")) return w;
    if (auto w = idempotence_witness(bm.meet, bm.size, "meet-idempotence")) return w;
    if (auto w = associativity_witness(bm.join, bm.size, "join-associativity")) return w;
    if (auto w = commutativity_witness(bm.join, bm.size, "join-commutativity")) return w;
    return idempotence_witness(bm.join, bm.size, "join-idempotence");
}

std::optional<ElementWitness> satisfies_birkhoff(const DerivedBimagma& bm) {
    const int n = bm.size;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            const int lhs = bm.meet_at(a, bm.join_at(a, b));
            const int rhs = bm.join_at(a, bm.meet_at(a, b));
            if (lhs != rhs) return ElementWitness{"birkhoff", {a, b}, lhs, rhs};
        }
    return std::nullopt;
}

std::optional<ElementWitness> essentially_semigroup_witness(const DerivedBimagma& bm) {
    const int n = bm.size;
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (bm.meet_at(a, b) != bm.join_at(a, b))
                return ElementWitness{"meet-equals-join", {a, b}, bm.meet_at(a, b),
                                      bm.join_at(a, b)};
    return associativity_witness(bm.meet, n, "meet-associativity");
}

bool essentially_semigroup(const DerivedBimagma& bm) {
    return !essentially_semigroup_witness(bm).has_value();
}

ClassificationReport classify(const FiniteAlgebra& alg) {
    ClassificationReport r;

    auto record = [&](const std::string& flag, AnyWitness w) {
        r.witnesses.emplace(flag, std::move(w));
    };

    // Source-algebra flags.
    std::optional<Witness> w_def = find_witness(alg, defining_identity());
    std::optional<Witness> w_zero =
        w_def ? std::nullopt : find_witness(alg, zero_involution_identity());
    r.in_i = !w_def && !w_zero;
    if (w_def)
        record("in_I", *w_def);
    else if (w_zero)
        record("in_I", *w_zero);

    std::optional<Witness> w_inv = find_witness(alg, involution_identity());
    r.in_i20 = !w_inv;
    if (w_inv) record("in_I20", *w_inv);

    const DerivedBimagma bm = derive_bimagma(alg);

    std::optional<ElementWitness> w_mc =
        commutativity_witness(bm.meet, bm.size, "meet-commutativity");
    r.in_mc = !w_mc;
    if (w_mc) record("in_MC", *w_mc);

    std::optional<ElementWitness> w_assoc =
        associativity_witness(alg.table(), alg.size(), "arrow-associativity");
    r.in_is = !w_assoc;
    if (w_assoc) record("in_IS", *w_assoc);

    // S-membership computed from its own definition, then cross-checked.
    r.in_s = is_izroupoid(alg) && satisfies(alg, involution_identity()) &&
             satisfies(alg, meet_commutative_identity());
    if (r.in_s != (r.in_i && r.in_i20 && r.in_mc))
        throw std::logic_error("classify: in_S disagrees with in_I && in_I20 && in_MC");
    if (!r.in_s) {
        if (w_inv)
            record("in_S", *w_inv);
        else if (w_mc)
            record("in_S", *w_mc);
        else if (w_def)
            record("in_S", *w_def);
        else if (w_zero)
            record("in_S", *w_zero);
    }

    // Derived-algebra flags.
    std::optional<ElementWitness> w_bsg = bisemigroup_witness(bm);
    r.derived_is_bisemigroup = !w_bsg;
    if (w_bsg) record("derived_is_bisemigroup", *w_bsg);

    std::optional<ElementWitness> w_bsl = is_bisemilattice(bm);
    r.derived_is_bisemilattice = !w_bsl;
    if (w_bsl) record("derived_is_bisemilattice", *w_bsl);

    std::optional<ElementWitness> w_br = satisfies_birkhoff(bm);
    r.derived_satisfies_br = !w_br;
    if (w_br) record("derived_satisfies_BR", *w_br);

    r.derived_is_birkhoff_system = !is_bisemilattice(bm) && !satisfies_birkhoff(bm);
    if (r.derived_is_birkhoff_system != (r.derived_is_bisemilattice && r.derived_satisfies_br))
        throw std::logic_error("classify: birkhoff-system flag disagrees with its definition");
    if (!r.derived_is_birkhoff_system) {
        if (w_bsl)
            record("derived_is_birkhoff_system", *w_bsl);
        else if (w_br)
            record("derived_is_birkhoff_system", *w_br);
    }

    r.derived_is_birkhoff_bisemigroup = !bisemigroup_witness(bm) && !satisfies_birkhoff(bm);
    if (r.derived_is_birkhoff_bisemigroup != (r.derived_is_bisemigroup && r.derived_satisfies_br))
        throw std::logic_error("classify: birkhoff-bisemigroup flag disagrees with its definition");
    if (!r.derived_is_birkhoff_bisemigroup) {
        if (w_bsg)
            record("derived_is_birkhoff_bisemigroup", *w_bsg);
        else if (w_br)
            record("derived_is_birkhoff_bisemigroup", *w_br);
    }

    std::optional<ElementWitness> w_ess = essentially_semigroup_witness(bm);
    r.derived_essentially_semigroup = !w_ess;
    if (w_ess) record("derived_essentially_semigroup", *w_ess);

    return r;
}

nlohmann::ordered_json to_json(const ClassificationReport& r) {
    nlohmann::ordered_json j;
    j["in_I"] = r.in_i;
    j["in_I20"] = r.in_i20;
    j["in_MC"] = r.in_mc;
    j["in_S"] = r.in_s;
    j["in_IS"] = r.in_is;
    j["derived_is_bisemigroup"] = r.derived_is_bisemigroup;
    j["derived_is_bisemilattice"] = r.derived_is_bisemilattice;
    j["derived_satisfies_BR"] = r.derived_satisfies_br;
    j["derived_is_birkhoff_system"] = r.derived_is_birkhoff_system;
    j["derived_is_birkhoff_bisemigroup"] = r.derived_is_birkhoff_bisemigroup;
    j["derived_essentially_semigroup"] = r.derived_essentially_semigroup;
    nlohmann::ordered_json w = nlohmann::ordered_json::object();
    for (const auto& [flag, wit] : r.witnesses) w[flag] = any_witness_to_json(wit);
    j["witnesses"] = w;
    return j;
}

}  // namespace izr
