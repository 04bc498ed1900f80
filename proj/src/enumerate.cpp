#include "izr/enumerate.hpp"

#include <algorithm>
#include <atomic>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace izr {

std::optional<Variety> variety_from_string(std::string_view s) {
    if (s == "i" || s == "I") return Variety::I;
    if (s == "i20" || s == "I20") return Variety::I20;
    if (s == "mc" || s == "MC") return Variety::MC;
    if (s == "s" || s == "S") return Variety::S;
    if (s == "is" || s == "IS") return Variety::IS;
    return std::nullopt;
}

std::string_view to_string(Variety v) {
    switch (v) {
        case Variety::I: return "I";
        case Variety::I20: return "I20";
        case Variety::MC: return "MC";
        case Variety::S: return "S";
        case Variety::IS: return "IS";
    }
    return "?";
}

namespace {

bool table_involutive(const FiniteAlgebra& a) {
    for (int x = 0; x < a.size(); ++x)
        if (a.apply(a.apply(x, 0), 0) != x) return false;
    return true;
}

bool table_meet_commutative(const FiniteAlgebra& a) {
    const DerivedBimagma bm = derive_bimagma(a);
    for (int x = 0; x < a.size(); ++x)
        for (int y = x + 1; y < a.size(); ++y)
            if (bm.meet_at(x, y) != bm.meet_at(y, x)) return false;
    return true;
}

bool table_arrow_associative(const FiniteAlgebra& a) {
    const int n = a.size();
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                if (a.apply(x, a.apply(y, z)) != a.apply(a.apply(x, y), z)) return false;
    return true;
}

}  // namespace

bool in_variety(const FiniteAlgebra& alg, Variety v) {
    if (!is_izroupoid(alg)) return false;
    switch (v) {
        case Variety::I: return true;
        case Variety::I20: return table_involutive(alg);
        case Variety::MC: return table_meet_commutative(alg);
        case Variety::S: return table_involutive(alg) && table_meet_commutative(alg);
        case Variety::IS: return table_arrow_associative(alg);
    }
    return false;
}

PartialTable PartialTable::empty(int n) {
    PartialTable pt;
    pt.size = n;
    pt.entries.assign(static_cast<std::size_t>(n) * n, -1);
    return pt;
}

bool check_partial(const PartialTable& pt) {
    const int n = pt.size;
    auto look = [&](int a, int b, int& out) {
        int v = pt.at(a, b);
        if (v < 0) return false;
        out = v;
        return true;
    };

    // 0'' = 0
    {
        int p, pp;
        if (look(0, 0, p) && look(p, 0, pp) && pp != 0) return false;
    }

    // (x -> y) -> z = ((z' -> x) -> (y -> z)')'
    for (int x = 0; x < n; ++x) {
        for (int y = 0; y < n; ++y) {
            for (int z = 0; z < n; ++z) {
                int xy, lhs;
                if (!look(x, y, xy) || !look(xy, z, lhs)) continue;
                int zp, a, yz, yzp, b, rhs;
                if (!look(z, 0, zp) || !look(zp, x, a) || !look(y, z, yz) ||
                    !look(yz, 0, yzp) || !look(a, yzp, b) || !look(b, 0, rhs))
                    continue;
                if (lhs != rhs) return false;
            }
        }
    }
    return true;
}

namespace {

using Clock = std::chrono::steady_clock;

constexpr int kSat = 0;
constexpr int kUndetermined = 1;
constexpr int kViolated = 2;

// Backtracking search over partial tables with watched constraint
// instances. Cells are filled in a fixed order: column 0 (the ' map),
// then row 0, then the remaining cells row-major. Each constraint
// instance is parked on exactly one cell: an undetermined instance on
// the first unset cell its evaluation needs, a satisfied instance on the
// latest-filled cell it reads. Because the fill order is fixed, unset
// cells always form a suffix of the order, so any change to a cell an
// instance depends on forces its park cell to be reassigned first; the
// instance is then re-evaluated. A completed table has therefore had
// every instance checked against its final values.
class Searcher {
public:
    Searcher(const SearchConfig& cfg, std::optional<Clock::time_point> deadline,
             std::atomic<bool>* stop)
        : n_(cfg.size),
          cells_(n_ * n_),
          cfg_(cfg),
          deadline_(deadline),
          stop_(stop),
          table_(static_cast<std::size_t>(cells_), -1),
          fill_pos_(cells_, 0),
          watch_(cells_) {
        build_fill_order();
        build_instances();
        if (cfg_.iso_reduce) build_perms();
    }

    // Full search below a (consistent, already validated) prefix of
    // values for fill positions [0, prefix.size()).
    void run(const std::vector<std::uint8_t>& prefix, std::vector<FiniteAlgebra>& out) {
        out_ = &out;
        for (std::size_t i = 0; i < prefix.size(); ++i) {
            bool ok = assign(order_[i], prefix[i]);
            if (!ok) {
                unwind(i + 1);
                return;
            }
        }
        dfs(static_cast<int>(prefix.size()));
        unwind(prefix.size());
    }

    // Enumerates consistent prefixes of the first `width` fill positions.
    std::vector<std::vector<std::uint8_t>> prefixes(int width) {
        std::vector<std::vector<std::uint8_t>> out;
        std::vector<std::uint8_t> cur;
        prefix_dfs(0, width, cur, out);
        return out;
    }

    bool aborted() const { return aborted_; }

private:
    void build_fill_order() {
        order_.reserve(cells_);
        for (int x = 0; x < n_; ++x) order_.push_back(x * n_ + 0);
        for (int y = 1; y < n_; ++y) order_.push_back(0 * n_ + y);
        for (int x = 1; x < n_; ++x)
            for (int y = 1; y < n_; ++y) order_.push_back(x * n_ + y);
        for (int p = 0; p < cells_; ++p) fill_pos_[order_[p]] = p;

        // Positions after which a row (and column 0) is fully set; the
        // lexicographic dominance test is run there.
        checkpoint_.assign(cells_, false);
        if (n_ >= 2) {
            for (int r = 0; r < n_; ++r) checkpoint_[2 * n_ - 2 + r * (n_ - 1)] = true;
        } else {
            checkpoint_[0] = true;
        }
    }

    void build_instances() {
        // ids: [0, n^3) are defining-identity triples (x,y,z); n^3 is the
        // 0''=0 law; the rest (optional) are x''=x per element.
        instance_count_ = n_ * n_ * n_ + 1;
        propagate_involution_ =
            cfg_.filter == Variety::I20 || cfg_.filter == Variety::S;
        if (propagate_involution_) instance_count_ += n_;
        for (int id = 0; id < instance_count_; ++id) watch_[first_cell(id)].push_back(id);
    }

    int first_cell(int id) const {
        const int n3 = n_ * n_ * n_;
        if (id < n3) return (id / (n_ * n_)) * n_ + (id / n_) % n_;  // (x, y)
        if (id == n3) return 0;                                      // (0, 0)
        return (id - n3 - 1) * n_ + 0;                               // (x, 0)
    }

    void build_perms() {
        std::vector<int> perm(n_);
        std::iota(perm.begin(), perm.end(), 0);
        while (std::next_permutation(perm.begin() + 1, perm.end())) {
            std::vector<int> inv(n_);
            for (int i = 0; i < n_; ++i) inv[perm[i]] = i;
            perms_.push_back(perm);
            inv_perms_.push_back(std::move(inv));
        }
    }

    struct Eval {
        int status;
        int park;
    };

    Eval eval_instance(int id) const {
        int deepest = -1;
        int deep_cell = 0;
        int park = -1;
        auto look = [&](int a, int b, int& out) {
            const int cell = a * n_ + b;
            const int v = table_[cell];
            if (v < 0) {
                park = cell;
                return false;
            }
            if (fill_pos_[cell] > deepest) {
                deepest = fill_pos_[cell];
                deep_cell = cell;
            }
            out = v;
            return true;
        };

        const int n3 = n_ * n_ * n_;
        if (id < n3) {
            const int x = id / (n_ * n_), y = (id / n_) % n_, z = id % n_;
            int xy, lhs, zp, a, yz, yzp, b, rhs;
            if (!look(x, y, xy) || !look(xy, z, lhs) || !look(z, 0, zp) || !look(zp, x, a) ||
                !look(y, z, yz) || !look(yz, 0, yzp) || !look(a, yzp, b) || !look(b, 0, rhs))
                return {kUndetermined, park};
            return {lhs == rhs ? kSat : kViolated, deep_cell};
        }
        if (id == n3) {
            int p, pp;
            if (!look(0, 0, p) || !look(p, 0, pp)) return {kUndetermined, park};
            return {pp == 0 ? kSat : kViolated, deep_cell};
        }
        const int x = id - n3 - 1;
        int p, pp;
        if (!look(x, 0, p) || !look(p, 0, pp)) return {kUndetermined, park};
        return {pp == x ? kSat : kViolated, deep_cell};
    }

    bool assign(int cell, int value) {
        table_[cell] = static_cast<std::int16_t>(value);
        pending_.swap(watch_[cell]);
        watch_[cell].clear();
        for (std::size_t i = 0; i < pending_.size(); ++i) {
            const Eval r = eval_instance(pending_[i]);
            if (r.status == kViolated) {
                // Re-park everything on this cell; the caller unassigns it.
                for (std::size_t j = i; j < pending_.size(); ++j)
                    watch_[cell].push_back(pending_[j]);
                pending_.clear();
                return false;
            }
            watch_[r.park].push_back(pending_[i]);
        }
        pending_.clear();
        return true;
    }

    void unassign(int cell) { table_[cell] = -1; }

    void unwind(std::size_t depth) {
        for (std::size_t i = 0; i < depth; ++i) unassign(order_[i]);
    }

    bool out_of_time() {
        if (stop_->load(std::memory_order_relaxed)) return true;
        if (deadline_ && (tick_++ & 0x3ff) == 0 && Clock::now() >= *deadline_) {
            stop_->store(true, std::memory_order_relaxed);
            return true;
        }
        return false;
    }

    // True when some relabeling of every completion of the current prefix
    // is lexicographically smaller, so no completion can be canonical.
    bool dominated() const {
        for (std::size_t p = 0; p < perms_.size(); ++p) {
            const std::vector<int>& perm = perms_[p];
            const std::vector<int>& inv = inv_perms_[p];
            for (int cell = 0; cell < cells_; ++cell) {
                const int v = table_[cell];
                if (v < 0) break;
                const int pre = table_[inv[cell / n_] * n_ + inv[cell % n_]];
                if (pre < 0) break;
                const int w = perm[pre];
                if (w < v) return true;
                if (w > v) break;
            }
        }
        return false;
    }

    bool keep_completed(const FiniteAlgebra& a) const {
        switch (cfg_.filter) {
            case Variety::I: break;
            case Variety::I20:
                if (!table_involutive(a)) return false;
                break;
            case Variety::MC:
                if (!table_meet_commutative(a)) return false;
                break;
            case Variety::S:
                if (!table_involutive(a) || !table_meet_commutative(a)) return false;
                break;
            case Variety::IS:
                if (!table_arrow_associative(a)) return false;
                break;
        }
        if (cfg_.iso_reduce) {
            for (const std::vector<int>& perm : perms_)
                if (relabel(a, perm) < a) return false;
        }
        return true;
    }

    void dfs(int depth) {
        if (out_of_time()) {
            aborted_ = true;
            return;
        }
        if (depth == cells_) {
            std::vector<std::uint8_t> flat(cells_);
            for (int i = 0; i < cells_; ++i) flat[i] = static_cast<std::uint8_t>(table_[i]);
            FiniteAlgebra a(n_, std::move(flat));
            if (keep_completed(a)) out_->push_back(std::move(a));
            return;
        }
        const int cell = order_[depth];
        for (int v = 0; v < n_; ++v) {
            if (assign(cell, v)) {
                if (!cfg_.iso_reduce || !checkpoint_[depth] || !dominated()) dfs(depth + 1);
            }
            unassign(cell);
            if (aborted_) return;
        }
    }

    void prefix_dfs(int depth, int width, std::vector<std::uint8_t>& cur,
                    std::vector<std::vector<std::uint8_t>>& out) {
        if (depth == width) {
            out.push_back(cur);
            return;
        }
        const int cell = order_[depth];
        for (int v = 0; v < n_; ++v) {
            if (assign(cell, v)) {
                if (!cfg_.iso_reduce || !checkpoint_[depth] || !dominated()) {
                    cur.push_back(static_cast<std::uint8_t>(v));
                    prefix_dfs(depth + 1, width, cur, out);
                    cur.pop_back();
                }
            }
            unassign(cell);
        }
    }

    const int n_;
    const int cells_;
    const SearchConfig cfg_;
    const std::optional<Clock::time_point> deadline_;
    std::atomic<bool>* stop_;

    std::vector<std::int16_t> table_;
    std::vector<int> order_;
    std::vector<int> fill_pos_;
    std::vector<char> checkpoint_;
    std::vector<std::vector<int>> watch_;
    std::vector<int> pending_;
    int instance_count_ = 0;
    bool propagate_involution_ = false;

    std::vector<std::vector<int>> perms_;      // nontrivial perms fixing 0
    std::vector<std::vector<int>> inv_perms_;

    std::vector<FiniteAlgebra>* out_ = nullptr;
    bool aborted_ = false;
    unsigned tick_ = 0;
};

}  // namespace

EnumerationResult enumerate_until(const SearchConfig& cfg,
                                  std::optional<Clock::time_point> deadline) {
    if (cfg.size < 1) throw std::invalid_argument("enumerate: size must be >= 1");
    if (cfg.size > 7) throw std::invalid_argument("enumerate: sizes beyond 7 are not supported");
    if (cfg.parallel_width < 0 || cfg.parallel_width >= cfg.size * cfg.size)
        throw std::invalid_argument("enumerate: parallel_width must be in [0, n*n)");
    if (cfg.jobs < 1) throw std::invalid_argument("enumerate: jobs must be >= 1");

    const auto start = Clock::now();
    if (cfg.budget_seconds) {
        auto own = start + std::chrono::duration_cast<Clock::duration>(
                               std::chrono::duration<double>(*cfg.budget_seconds));
        if (!deadline || own < *deadline) deadline = own;
    }

    std::atomic<bool> stop{false};
    EnumerationResult result;

    const int jobs = cfg.jobs;
    int width = cfg.parallel_width;
    if (jobs > 1 && width == 0) width = std::min(cfg.size + 2, cfg.size * cfg.size - 1);

    if (jobs == 1 || width == 0) {
        Searcher searcher(cfg, deadline, &stop);
        searcher.run({}, result.algebras);
        result.complete = !searcher.aborted();
    } else {
        Searcher splitter(cfg, deadline, &stop);
        const auto prefixes = splitter.prefixes(width);
        std::vector<std::vector<FiniteAlgebra>> slots(prefixes.size());
        std::atomic<std::size_t> next{0};
        std::atomic<bool> any_aborted{splitter.aborted()};

        auto worker = [&] {
            Searcher searcher(cfg, deadline, &stop);
            while (true) {
                const std::size_t i = next.fetch_add(1);
                if (i >= prefixes.size()) return;
                searcher.run(prefixes[i], slots[i]);
                if (searcher.aborted()) any_aborted.store(true);
            }
        };
        std::vector<std::thread> pool;
        for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
        for (auto& t : pool) t.join();

        for (auto& slot : slots)
            for (auto& a : slot) result.algebras.push_back(std::move(a));
        result.complete = !any_aborted.load();
    }

    std::sort(result.algebras.begin(), result.algebras.end());
    result.elapsed_seconds =
        std::chrono::duration<double>(Clock::now() - start).count();
    return result;
}

EnumerationResult enumerate(const SearchConfig& cfg) { return enumerate_until(cfg, {}); }

CountResult count_classes(int size, Variety filter, std::optional<double> budget_seconds,
                          int jobs) {
    SearchConfig cfg;
    cfg.size = size;
    cfg.filter = filter;
    cfg.iso_reduce = true;
    cfg.budget_seconds = budget_seconds;
    cfg.jobs = jobs;
    EnumerationResult r = enumerate(cfg);
    return {static_cast<long long>(r.algebras.size()), r.complete, r.elapsed_seconds};
}

}  // namespace izr
