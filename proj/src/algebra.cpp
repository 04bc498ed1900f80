#include "izr/algebra.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace izr {

FiniteAlgebra::FiniteAlgebra(int size, std::vector<std::uint8_t> table)
    : n_(size), table_(std::move(table)) {
    if (n_ < 1) throw std::invalid_argument("algebra size must be >= 1");
    if (n_ > 255) throw std::invalid_argument("algebra size must be <= 255");
    if (table_.size() != static_cast<std::size_t>(n_) * n_)
        throw std::invalid_argument("operation table must have size n*n");
    for (std::uint8_t v : table_)
        if (v >= n_) throw std::invalid_argument("table entry out of carrier range");
}

FiniteAlgebra FiniteAlgebra::from_rows(const std::vector<std::vector<int>>& rows) {
    int n = static_cast<int>(rows.size());
    std::vector<std::uint8_t> flat;
    flat.reserve(static_cast<std::size_t>(n) * n);
    for (const auto& row : rows) {
        if (static_cast<int>(row.size()) != n)
            throw std::invalid_argument("operation table must be square");
        for (int v : row) {
            if (v < 0 || v >= n) throw std::invalid_argument("table entry out of carrier range");
            flat.push_back(static_cast<std::uint8_t>(v));
        }
    }
    return FiniteAlgebra(n, std::move(flat));
}

std::vector<std::vector<int>> FiniteAlgebra::rows() const {
    std::vector<std::vector<int>> out(n_, std::vector<int>(n_));
    for (int a = 0; a < n_; ++a)
        for (int b = 0; b < n_; ++b) out[a][b] = apply(a, b);
    return out;
}

int eval_term(const FiniteAlgebra& alg, const Term& t, const Assignment& env) {
    switch (t.kind()) {
        case Term::Kind::Zero:
            return 0;
        case Term::Kind::Variable: {
            auto it = env.find(t.var_name());
            if (it == env.end()) throw EvalError("unbound variable '" + t.var_name() + "'");
            if (it->second < 0 || it->second >= alg.size())
                throw EvalError("assignment value out of carrier range for '" + t.var_name() + "'");
            return it->second;
        }
        case Term::Kind::Arrow:
            return alg.apply(eval_term(alg, *t.left(), env), eval_term(alg, *t.right(), env));
    }
    throw EvalError("corrupt term");
}

namespace {

void compile_into(const Term& t, const std::vector<std::string>& var_order, CompiledTerm& out,
                  int& depth) {
    switch (t.kind()) {
        case Term::Kind::Zero:
            out.code.push_back(-1);
            ++depth;
            break;
        case Term::Kind::Variable: {
            auto it = std::find(var_order.begin(), var_order.end(), t.var_name());
            if (it == var_order.end())
                throw EvalError("unbound variable '" + t.var_name() + "'");
            out.code.push_back(static_cast<std::int32_t>(it - var_order.begin()));
            ++depth;
            break;
        }
        case Term::Kind::Arrow:
            compile_into(*t.left(), var_order, out, depth);
            compile_into(*t.right(), var_order, out, depth);
            out.stack_need = std::max(out.stack_need, depth);
            out.code.push_back(-2);
            --depth;
            break;
    }
}

}  // namespace

CompiledTerm compile_term(const Term& t, const std::vector<std::string>& var_order) {
    CompiledTerm ct;
    int depth = 0;
    compile_into(t, var_order, ct, depth);
    ct.stack_need = std::max(ct.stack_need, depth);
    return ct;
}

int eval_compiled(const CompiledTerm& ct, const FiniteAlgebra& alg, std::span<const int> env) {
    // Identity catalogs stay tiny; a fixed stack is plenty.
    int stack[64];
    int sp = 0;
    if (ct.stack_need > 64) throw EvalError("term too deep for compiled evaluation");
    for (std::int32_t op : ct.code) {
        if (op >= 0) {
            stack[sp++] = env[static_cast<std::size_t>(op)];
        } else if (op == -1) {
            stack[sp++] = 0;
        } else {
            int b = stack[--sp];
            int a = stack[--sp];
            stack[sp++] = alg.apply(a, b);
        }
    }
    return stack[0];
}

std::optional<Witness> find_witness(const FiniteAlgebra& alg, const Identity& id) {
    const std::vector<std::string> vars = variables_of(id);
    const CompiledTerm lhs = compile_term(*id.lhs, vars);
    const CompiledTerm rhs = compile_term(*id.rhs, vars);
    const int n = alg.size();
    const int k = static_cast<int>(vars.size());

    std::vector<int> env(vars.size(), 0);
    while (true) {
        int lv = eval_compiled(lhs, alg, env);
        int rv = eval_compiled(rhs, alg, env);
        if (lv != rv) {
            Witness w;
            for (int i = 0; i < k; ++i) w.assignment[vars[i]] = env[i];
            w.lhs_value = lv;
            w.rhs_value = rv;
            return w;
        }
        int i = 0;
        while (i < k && ++env[i] == n) env[i++] = 0;
        if (i == k) return std::nullopt;
    }
}

bool satisfies(const FiniteAlgebra& alg, const Identity& id) {
    return !find_witness(alg, id).has_value();
}

namespace {

Identity named(const char* name, const char* src) {
    Identity id = parse_identity(src);
    id.name = name;
    return id;
}

}  // namespace

const Identity& defining_identity() {
    static const Identity id = named("I", "(x -> y) -> z = ((z' -> x) -> (y -> z)')'");
    return id;
}

const Identity& zero_involution_identity() {
    static const Identity id = named("0''=0", "0'' = 0");
    return id;
}

const Identity& involution_identity() {
    static const Identity id = named("x''=x", "x'' = x");
    return id;
}

const Identity& meet_commutative_identity() {
    static const Identity id = named("MC", "x ^ y = y ^ x");
    return id;
}

const Identity& arrow_associative_identity() {
    static const Identity id = named("A", "x -> (y -> z) = (x -> y) -> z");
    return id;
}

const Identity& birkhoff_identity() {
    static const Identity id = named("BR", "x ^ (x v y) = x v (x ^ y)");
    return id;
}

bool is_izroupoid(const FiniteAlgebra& alg) {
    return satisfies(alg, defining_identity()) && satisfies(alg, zero_involution_identity());
}

DerivedBimagma derive_bimagma(const FiniteAlgebra& alg) {
    const int n = alg.size();
    DerivedBimagma bm;
    bm.size = n;
    bm.meet.resize(static_cast<std::size_t>(n) * n);
    bm.join.resize(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a) {
        for (int b = 0; b < n; ++b) {
            // a ^ b = (a -> b')'
            bm.meet[a * n + b] =
                static_cast<std::uint8_t>(alg.apply(alg.apply(a, alg.apply(b, 0)), 0));
        }
    }
    for (int a = 0; a < n; ++a) {
        const int pa = alg.apply(a, 0);
        for (int b = 0; b < n; ++b) {
            const int pb = alg.apply(b, 0);
            // a v b = (a' ^ b')'
            bm.join[a * n + b] = static_cast<std::uint8_t>(alg.apply(bm.meet[pa * n + pb], 0));
        }
    }
    return bm;
}

FiniteAlgebra relabel(const FiniteAlgebra& alg, const std::vector<int>& perm) {
    const int n = alg.size();
    if (static_cast<int>(perm.size()) != n || perm[0] != 0)
        throw std::invalid_argument("relabel: permutation must fix 0 and cover the carrier");
    std::vector<std::uint8_t> out(static_cast<std::size_t>(n) * n);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            out[perm[a] * n + perm[b]] = static_cast<std::uint8_t>(perm[alg.apply(a, b)]);
    return FiniteAlgebra(n, std::move(out));
}

namespace {

// Applies fn to every permutation of {0..n-1} fixing 0; stops early on true.
template <typename Fn>
bool for_each_zero_fixing_perm(int n, Fn&& fn) {
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    do {
        if (fn(perm)) return true;
    } while (std::next_permutation(perm.begin() + 1, perm.end()));
    return false;
}

}  // namespace

std::optional<std::vector<int>> isomorphism(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    if (a.size() != b.size()) return std::nullopt;
    const int n = a.size();
    std::optional<std::vector<int>> found;
    for_each_zero_fixing_perm(n, [&](const std::vector<int>& perm) {
        for (int x = 0; x < n; ++x)
            for (int y = 0; y < n; ++y)
                if (perm[a.apply(x, y)] != b.apply(perm[x], perm[y])) return false;
        found = perm;
        return true;
    });
    return found;
}

bool isomorphic(const FiniteAlgebra& a, const FiniteAlgebra& b) {
    return isomorphism(a, b).has_value();
}

FiniteAlgebra canonical_form(const FiniteAlgebra& alg, int max_size) {
    if (alg.size() > max_size)
        throw std::domain_error("canonical_form: size " + std::to_string(alg.size()) +
                                " exceeds the configured bound " + std::to_string(max_size));
    FiniteAlgebra best = alg;
    for_each_zero_fixing_perm(alg.size(), [&](const std::vector<int>& perm) {
        FiniteAlgebra candidate = relabel(alg, perm);
        if (candidate < best) best = std::move(candidate);
        return false;
    });
    return best;
}

}  // namespace izr
