#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <limits>
#include <numeric>
#include <string>
#include <thread>

#include "schelling/equilibrium.hpp"
#include "schelling/error.hpp"

namespace schelling {
namespace {

__extension__ using wide = __int128;
__extension__ using uwide = unsigned __int128;

std::int64_t lcm_checked(std::int64_t a, std::int64_t b) {
    std::int64_t g = std::gcd(a, b);
    wide r = wide(a / g) * b;
    if (r > std::numeric_limits<std::int64_t>::max() / 1024) return -1;
    return static_cast<std::int64_t>(r);
}

/// Integer-scaled evaluator for one game. Tolerances are multiplied by the
/// common denominator so every utility is (weighted sum) / (D * count), and
/// all comparisons reduce to exact integer cross-multiplication.
class Kernel {
public:
    explicit Kernel(const GameInstance& game)
        : game_(game), n_(game.node_count()), lambda_(game.lambda()) {
        const auto& tv = game.tolerance();
        std::int64_t den = 1;
        for (int d = 0; d < lambda_; ++d) {
            den = lcm_checked(den, tv[d].den());
            if (den < 0) throw std::overflow_error("tolerance denominators too large");
        }
        for (int d = 0; d < lambda_; ++d) weights_.push_back(tv[d].num() * (den / tv[d].den()));
        std::int64_t l = 1;
        for (int k = 2; k <= game.topology().max_degree() && l > 0; ++k) l = lcm_checked(l, k);
        degree_lcm_ = l;  // -1: welfare keys unavailable, fall back to rationals
        stride_ = static_cast<std::size_t>(lambda_) + 1;
        counts_.resize(static_cast<std::size_t>(n_));
        sums_.resize(static_cast<std::size_t>(n_) * stride_);
    }

    // Fills per-node occupied-neighbor counts and per-type weighted sums.
    void load(const std::vector<TypeIndex>& cells) {
        std::fill(counts_.begin(), counts_.end(), 0);
        std::fill(sums_.begin(), sums_.end(), 0);
        const auto& topo = game_.topology();
        for (NodeId u = 0; u < n_; ++u) {
            const TypeIndex tu = cells[static_cast<std::size_t>(u)];
            if (tu == kEmpty) continue;
            for (NodeId v : topo.neighbors(u)) {
                ++counts_[static_cast<std::size_t>(v)];
                std::int64_t* row = &sums_[static_cast<std::size_t>(v) * stride_];
                for (int ell = 1; ell <= lambda_; ++ell) row[ell] += weights_[static_cast<std::size_t>(std::abs(ell - tu))];
            }
        }
    }

    [[nodiscard]] bool equilibrium(const std::vector<TypeIndex>& cells) const {
        const auto& topo = game_.topology();
        const std::int64_t full = weights_[0];
        for (NodeId u = 0; u < n_; ++u) {
            const TypeIndex tu = cells[static_cast<std::size_t>(u)];
            if (tu == kEmpty) continue;
            const std::int64_t cur_c = counts_[static_cast<std::size_t>(u)];
            const std::int64_t cur_s = sums_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(tu)];
            if (cur_c > 0 && cur_s == full * cur_c) continue;  // utility 1
            for (NodeId v = 0; v < n_; ++v) {
                if (cells[static_cast<std::size_t>(v)] != kEmpty) continue;
                std::int64_t s = sums_[static_cast<std::size_t>(v) * stride_ + static_cast<std::size_t>(tu)];
                std::int64_t c = counts_[static_cast<std::size_t>(v)];
                if (topo.adjacent(u, v)) {
                    s -= full;
                    --c;
                }
                if (c == 0 || s == 0) continue;
                if (cur_c == 0) return false;
                if (wide(s) * cur_c > wide(cur_s) * c) return false;
            }
        }
        return true;
    }

    [[nodiscard]] bool has_welfare_key() const noexcept { return degree_lcm_ > 0; }

    /// SW * D * L as an exact integer, L = lcm(1..max degree).
    [[nodiscard]] wide welfare_key(const std::vector<TypeIndex>& cells) const {
        wide total = 0;
        for (NodeId u = 0; u < n_; ++u) {
            const TypeIndex tu = cells[static_cast<std::size_t>(u)];
            if (tu == kEmpty) continue;
            const std::int64_t c = counts_[static_cast<std::size_t>(u)];
            if (c == 0) continue;
            total += wide(sums_[static_cast<std::size_t>(u) * stride_ + static_cast<std::size_t>(tu)]) * (degree_lcm_ / c);
        }
        return total;
    }

private:
    const GameInstance& game_;
    int n_;
    int lambda_;
    std::vector<std::int64_t> weights_;
    std::int64_t degree_lcm_ = 1;
    std::size_t stride_ = 0;
    std::vector<std::int64_t> counts_;
    std::vector<std::int64_t> sums_;
};

struct TaskResult {
    std::vector<std::vector<TypeIndex>> equilibria;
    std::vector<TypeIndex> best;
    wide best_key = -1;
    Rational best_rational = Rational(-1);
    std::uint64_t visited = 0;
};

class Walker {
public:
    Walker(const GameInstance& game, Kernel& kernel, TaskResult& out)
        : game_(game), kernel_(kernel), out_(out), n_(game.node_count()) {}

    void run(std::vector<TypeIndex> prefix, std::vector<int> remaining) {
        cells_ = std::move(prefix);
        remaining_ = std::move(remaining);
        const auto depth = cells_.size();
        cells_.resize(static_cast<std::size_t>(n_), kEmpty);
        recurse(static_cast<int>(depth));
    }

private:
    void recurse(int node) {
        if (node == n_) {
            visit();
            return;
        }
        for (std::size_t t = 0; t < remaining_.size(); ++t) {
            if (remaining_[t] == 0) continue;
            --remaining_[t];
            cells_[static_cast<std::size_t>(node)] = static_cast<TypeIndex>(t);
            recurse(node + 1);
            ++remaining_[t];
        }
    }

    void visit() {
        ++out_.visited;
        kernel_.load(cells_);
        if (kernel_.equilibrium(cells_)) out_.equilibria.push_back(cells_);
        if (kernel_.has_welfare_key()) {
            wide key = kernel_.welfare_key(cells_);
            if (key > out_.best_key) {
                out_.best_key = key;
                out_.best = cells_;
            }
        } else {
            Rational sw = social_welfare(game_, Assignment::from_types(game_, cells_));
            if (sw > out_.best_rational) {
                out_.best_rational = sw;
                out_.best = cells_;
            }
        }
    }

    const GameInstance& game_;
    Kernel& kernel_;
    TaskResult& out_;
    int n_;
    std::vector<TypeIndex> cells_;
    std::vector<int> remaining_;
};

struct Prefix {
    std::vector<TypeIndex> cells;
    std::vector<int> remaining;
};

void expand_prefixes(Prefix& current, int depth, std::vector<Prefix>& out) {
    if (static_cast<int>(current.cells.size()) == depth) {
        out.push_back(current);
        return;
    }
    for (std::size_t t = 0; t < current.remaining.size(); ++t) {
        if (current.remaining[t] == 0) continue;
        --current.remaining[t];
        current.cells.push_back(static_cast<TypeIndex>(t));
        expand_prefixes(current, depth, out);
        current.cells.pop_back();
        ++current.remaining[t];
    }
}

}  // namespace

std::uint64_t placement_count(const GameInstance& game) {
    // Product of binomials C(remaining, x) per type, then the empties are forced.
    constexpr auto kMax = std::numeric_limits<std::uint64_t>::max();
    uwide total = 1;
    int remaining = game.node_count();
    for (int t = 0; t < game.lambda(); ++t) {
        uwide binom = 1;
        const int k = game.agents_per_type();
        for (int i = 1; i <= k; ++i) {
            binom = binom * static_cast<unsigned>(remaining - k + i) / static_cast<unsigned>(i);
            if (binom > kMax) return kMax;
        }
        total *= binom;
        if (total > kMax) return kMax;
        remaining -= k;
    }
    return static_cast<std::uint64_t>(total);
}

EnumerationResult enumerate_placements(const GameInstance& game, const EnumerationOptions& options) {
    const std::uint64_t count = placement_count(game);
    if (count > options.budget) {
        throw Error(ErrorCode::BudgetExceeded,
                    "enumeration would visit " +
                        (count == std::numeric_limits<std::uint64_t>::max() ? std::string("more than 2^64")
                                                                            : std::to_string(count)) +
                        " placements, budget is " + std::to_string(options.budget));
    }

    // Partition the lexicographic walk by prefix so each task covers a
    // contiguous, ordered slice; concatenating task outputs in prefix order
    // reproduces the sequential result for any worker count.
    Prefix root;
    root.remaining.assign(static_cast<std::size_t>(game.lambda()) + 1, game.agents_per_type());
    root.remaining[0] = game.empty_count();
    const int workers = std::max(1, options.workers);
    int depth = 0;
    {
        std::vector<Prefix> probe;
        while (depth < game.node_count()) {
            probe.clear();
            expand_prefixes(root, depth, probe);
            if (probe.size() >= static_cast<std::size_t>(workers) * 16 || depth >= 6) break;
            ++depth;
        }
    }
    std::vector<Prefix> prefixes;
    expand_prefixes(root, depth, prefixes);

    std::vector<TaskResult> results(prefixes.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        Kernel kernel(game);
        for (std::size_t i = next.fetch_add(1); i < prefixes.size(); i = next.fetch_add(1)) {
            Walker walker(game, kernel, results[i]);
            walker.run(prefixes[i].cells, prefixes[i].remaining);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(workers));
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (auto& th : pool) th.join();
    }

    EnumerationResult out;
    const TaskResult* best = nullptr;
    for (const auto& r : results) {
        out.placements += r.visited;
        for (const auto& cells : r.equilibria) out.equilibria.push_back(Assignment::from_types(game, cells));
        if (r.best.empty()) continue;
        if (!best || r.best_key > best->best_key || r.best_rational > best->best_rational) best = &r;
    }
    for (const auto& eq : out.equilibria) out.equilibrium_welfare.push_back(social_welfare(game, eq));
    if (best) {
        out.optimum = Assignment::from_types(game, best->best);
        out.opt = social_welfare(game, out.optimum);
    }
    return out;
}

}  // namespace schelling
