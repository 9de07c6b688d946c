#include "schelling/instances.hpp"

#include <memory>
#include <algorithm>
#include <numeric>
#include <string>

#include "schelling/constructions.hpp"
#include "schelling/error.hpp"

namespace schelling {

namespace {

std::vector<NodeId> node_range(NodeId first, int count) {
    std::vector<NodeId> out(static_cast<std::size_t>(count));
    std::iota(out.begin(), out.end(), first);
    return out;
}

void add_clique(std::vector<Edge>& edges, const std::vector<NodeId>& nodes) {
    for (std::size_t i = 0; i < nodes.size(); ++i) {
        for (std::size_t j = i + 1; j < nodes.size(); ++j) edges.emplace_back(nodes[i], nodes[j]);
    }
}

void add_biclique(std::vector<Edge>& edges, const std::vector<NodeId>& a, const std::vector<NodeId>& b) {
    for (NodeId u : a) {
        for (NodeId v : b) edges.emplace_back(u, v);
    }
}

void require_t1_below_one(const ToleranceVector& tv) {
    if (tv[1] == Rational(1)) throw Error(ErrorCode::T1IsOne, "construction needs t_1 < 1");
}

void require_length(const ToleranceVector& tv, int lambda) {
    if (tv.lambda() != lambda) {
        throw Error(ErrorCode::InvalidParameters, "tolerance vector has length " + std::to_string(tv.lambda()) +
                                                      ", expected " + std::to_string(lambda));
    }
}

}  // namespace

NamedInstance no_equilibrium_tree_game(int lambda, const ToleranceVector& tv) {
    if (lambda < 2) throw Error(ErrorCode::InvalidParameters, "lambda must be at least 2");
    require_length(tv, lambda);
    require_t1_below_one(tv);

    const int gammas = 2 * lambda - 1;
    const int n = lambda * (2 * lambda + 1);
    // alpha = 0, beta = 1, Gamma = 2..2λ, then λ leaves per gamma
    std::vector<Edge> edges{{0, 1}};
    const auto gamma = node_range(2, gammas);
    std::vector<NodeId> delta;
    NodeId next = 2 + gammas;
    for (NodeId g : gamma) {
        edges.emplace_back(1, g);
        for (int k = 0; k < lambda; ++k) {
            edges.emplace_back(g, next);
            delta.push_back(next++);
        }
    }
    auto topo = std::make_shared<const Topology>(build_graph(n + 1, edges).with_kind("tree"));

    NamedInstance out{"no-eq-tree", GameInstance::make(topo, lambda, 2 * lambda + 1, tv), {}, {}, {}, {}};
    out.parameters["lambda"] = std::to_string(lambda);
    out.groups["alpha"] = {0};
    out.groups["beta"] = {1};
    out.groups["Gamma"] = gamma;
    out.groups["Delta"] = delta;
    return out;
}

NamedInstance poa_lb_game(int lambda, int mu, const ToleranceVector& tv) {
    if (lambda < 2 || mu < 1) throw Error(ErrorCode::InvalidParameters, "need lambda >= 2 and mu >= 1");
    require_length(tv, lambda);

    const int x = 2 * lambda * mu + 1;
    const int n = lambda * x;
    const int chain = 2 * mu;
    const NodeId center = 0;
    auto large = [&](int i) { return node_range(1 + (i - 1) * x, x); };
    // node of small clique K_{i,j} carrying label q (1..λ)
    auto small = [&](int i, int j, int q) { return 1 + n + ((i - 1) * chain + (j - 1)) * lambda + (q - 1); };
    auto last = [&](int q) { return 1 + n + lambda * chain * lambda + (q - 1); };

    std::vector<Edge> edges;
    std::map<std::string, std::vector<NodeId>> groups;
    std::vector<NodeId> small_nodes;
    for (int i = 1; i <= lambda; ++i) {
        const auto k = large(i);
        add_clique(edges, k);
        edges.emplace_back(center, k.front());
        groups["K_" + std::to_string(i)] = k;
        for (int j = 1; j <= chain; ++j) {
            std::vector<NodeId> clique;
            for (int q = 1; q <= lambda; ++q) clique.push_back(small(i, j, q));
            add_clique(edges, clique);
            small_nodes.insert(small_nodes.end(), clique.begin(), clique.end());
            groups["K_" + std::to_string(i) + "," + std::to_string(j)] = clique;
        }
        edges.emplace_back(center, small(i, 1, i));
        for (int j = 1; j < chain; ++j) {
            // odd j: every label but i continues downward; even j: only label i does
            for (int q = 1; q <= lambda; ++q) {
                if ((j % 2 == 1) == (q != i)) edges.emplace_back(small(i, j, q), small(i, j + 1, q));
            }
        }
        edges.emplace_back(small(i, chain, i), last(i));
    }
    std::vector<NodeId> k_last;
    for (int q = 1; q <= lambda; ++q) k_last.push_back(last(q));
    add_clique(edges, k_last);
    groups["K"] = k_last;
    groups["c"] = {center};

    auto topo = std::make_shared<const Topology>(build_graph(2 * n + 1, edges));
    NamedInstance out{"poa-lb", GameInstance::make(topo, lambda, x, tv), {}, {}, std::move(groups), {}};

    std::vector<TypeIndex> eq(static_cast<std::size_t>(2 * n + 1), kEmpty);
    for (NodeId v : small_nodes) eq[static_cast<std::size_t>(v)] = (v - 1 - n) % lambda + 1;
    for (NodeId v : k_last) eq[static_cast<std::size_t>(v)] = (v - 1 - n) % lambda + 1;
    out.assignments.emplace("equilibrium_v", Assignment::from_types(out.game, std::move(eq)));

    std::vector<TypeIndex> opt(static_cast<std::size_t>(2 * n + 1), kEmpty);
    for (int i = 1; i <= lambda; ++i) {
        for (NodeId v : large(i)) opt[static_cast<std::size_t>(v)] = i;
    }
    out.assignments.emplace("optimal", Assignment::from_types(out.game, std::move(opt)));

    out.parameters["lambda"] = std::to_string(lambda);
    out.parameters["mu"] = std::to_string(mu);
    return out;
}

Rational poa_lb_equilibrium_welfare(int lambda, int mu, const ToleranceVector& tv) {
    require_length(tv, lambda);
    const Rational total = tolerance_sums(tv).tau_ell_total();
    const Rational n = Rational(lambda) * Rational(2 * lambda * mu + 1);
    const Rational l(lambda);
    return total / (l * l) * n + (total - l * l) / (l * Rational(lambda - 1));
}

PosGameSizes pos_game_sizes(int b) {
    if (b < 2 || b % 2 != 0 || b % 3 == 0) {
        throw Error(ErrorCode::BadB, "b must be even, at least 2 and not a multiple of 3, got " + std::to_string(b));
    }
    PosGameSizes s;
    s.b = b;
    s.z = 2 * b + 1;
    s.c = b * s.z;
    s.n = 2 * s.c * (s.z + 1);
    return s;
}

NamedInstance pos_game(int b, const Rational& t1) {
    const auto s = pos_game_sizes(b);
    if (t1 == Rational(1)) throw Error(ErrorCode::T1IsOne, "construction needs t_1 < 1");
    const auto tv = ToleranceVector::make({Rational(1), t1});
    const int h = s.c * s.z / 2;

    NodeId next = 0;
    auto take = [&](int count) {
        auto out = node_range(next, count);
        next += count;
        return out;
    };
    const auto I = take(h);
    const auto J = take(s.c);
    const auto K = take(h);
    std::vector<std::vector<NodeId>> X;
    std::vector<std::vector<NodeId>> Y;
    for (int i = 0; i < s.z; ++i) X.push_back(take(b));
    for (int i = 0; i < s.z; ++i) Y.push_back(take(s.c));
    const NodeId sink = next++;

    std::vector<Edge> edges;
    for (int i = 0; i < h; ++i) edges.emplace_back(I[static_cast<std::size_t>(i)], K[static_cast<std::size_t>(i)]);
    add_clique(edges, K);
    std::vector<NodeId> x_all;
    std::vector<NodeId> y_all;
    for (int i = 0; i < s.z; ++i) {
        x_all.insert(x_all.end(), X[static_cast<std::size_t>(i)].begin(), X[static_cast<std::size_t>(i)].end());
        y_all.insert(y_all.end(), Y[static_cast<std::size_t>(i)].begin(), Y[static_cast<std::size_t>(i)].end());
    }
    add_biclique(edges, K, x_all);
    for (int i = 0; i < s.z; ++i) add_biclique(edges, X[static_cast<std::size_t>(i)], Y[static_cast<std::size_t>(i)]);
    add_biclique(edges, {sink}, y_all);
    add_biclique(edges, {sink}, J);

    auto topo = std::make_shared<const Topology>(build_graph(next, edges));
    NamedInstance out{"pos", GameInstance::make(topo, 2, s.c * (s.z + 1), tv), {}, {}, {}, {}};

    const auto node_count = static_cast<std::size_t>(next);
    constexpr TypeIndex red = 1;
    constexpr TypeIndex blue = 2;
    auto paint = [](std::vector<TypeIndex>& types, const std::vector<NodeId>& nodes, TypeIndex t) {
        for (NodeId v : nodes) types[static_cast<std::size_t>(v)] = t;
    };

    std::vector<TypeIndex> eq(node_count, kEmpty);
    paint(eq, I, red);
    paint(eq, K, red);
    paint(eq, x_all, red);
    paint(eq, J, blue);
    paint(eq, y_all, blue);
    eq[static_cast<std::size_t>(sink)] = blue;
    eq[static_cast<std::size_t>(Y.front().front())] = kEmpty;
    out.assignments.emplace("equilibrium_v", Assignment::from_types(out.game, std::move(eq)));

    std::vector<TypeIndex> star(node_count, kEmpty);
    paint(star, I, red);
    paint(star, K, red);
    paint(star, J, red);
    paint(star, x_all, blue);
    paint(star, y_all, blue);
    star[static_cast<std::size_t>(sink)] = blue;
    star[static_cast<std::size_t>(X.front().front())] = kEmpty;
    out.assignments.emplace("v_star", Assignment::from_types(out.game, std::move(star)));

    out.groups["I"] = I;
    out.groups["J"] = J;
    out.groups["K"] = K;
    out.groups["X"] = x_all;
    out.groups["Y"] = y_all;
    out.groups["S"] = {sink};
    for (int i = 0; i < s.z; ++i) {
        out.groups["X_" + std::to_string(i + 1)] = X[static_cast<std::size_t>(i)];
        out.groups["Y_" + std::to_string(i + 1)] = Y[static_cast<std::size_t>(i)];
    }
    out.parameters["b"] = std::to_string(b);
    out.parameters["t1"] = t1.str();
    out.parameters["z"] = std::to_string(s.z);
    out.parameters["c"] = std::to_string(s.c);
    return out;
}

Rational pos_equilibrium_welfare(int b, const Rational& t1) {
    const auto s = pos_game_sizes(b);
    const Rational c(s.c), z(s.z), cz(s.c * s.z), h = cz / 2, bb(b);
    return cz + bb * (z - 1) * (h + t1 * c) / (h + c) + bb * (h + t1 * (c - 1)) / (h + c - 1) +
           (cz - 1) * (Rational(1) + t1 * bb) / (bb + 1) + c + 1;
}

Rational pos_vstar_welfare_zero_tolerance_form(int b, const Rational& t1) {
    const auto s = pos_game_sizes(b);
    const Rational c(s.c), cz(s.c * s.z), h = cz / 2;
    return h * (Rational(1) + (h + t1 * (c - 1)) / (h + c - 1)) + (c - 1) * (c + t1 * h) / (h + c) + cz +
           cz / (cz + c);
}

Rational pos_vstar_welfare(int b, const Rational& t1) {
    // J agents see only the blue s and s sees c red J agents; both drop out of the form above when t1 = 0
    const auto s = pos_game_sizes(b);
    const Rational c(s.c), cz(s.c * s.z);
    return pos_vstar_welfare_zero_tolerance_form(b, t1) + t1 * c / (cz + c) + c * t1;
}

Rational pos_vstar_lower_bound(int b, const Rational& t1) {
    const auto s = pos_game_sizes(b);
    const Rational z(s.z), cz(s.c * s.z);
    return cz * (Rational(2) * z + 3 + t1) / (z + 2);
}

Rational pos_equilibrium_upper_bound(int b, const Rational& t1) {
    const auto s = pos_game_sizes(b);
    const Rational c(s.c), cz(s.c * s.z), bb(b);
    return cz * (bb * (Rational(1) + t1) + 2) / (bb + 1) + Rational(2) * c + 1;
}

NamedInstance seven_type_grid_example() {
    const auto binary = standard_tolerance(ToleranceKind::alpha_binary, 7, 2);
    const auto perturbed = ToleranceVector::make({1, 1, Rational(3, 5), 0, 0, 0, 0});
    NamedInstance out{"seven-type-grid", GameInstance::make(grid(4, 4), 2, binary), {}, {}, {}, {}};
    out.assignments.emplace("equilibrium_v", construct_binary_grid(out.game));
    out.tolerances.emplace("binary", binary);
    out.tolerances.emplace("perturbed", perturbed);
    out.parameters["rows"] = "4";
    out.parameters["cols"] = "4";
    return out;
}

// --- bounds -------------------------------------------------------------------

namespace {

constexpr std::pair<BoundKind, std::string_view> kBoundNames[] = {
    {BoundKind::poa_upper, "poa-upper"},
    {BoundKind::poa_lower, "poa-lower"},
    {BoundKind::zts_poa, "zts-poa"},
    {BoundKind::pos_lower, "pos-lower"},
    {BoundKind::proportional_poa_upper, "proportional-poa-upper"},
    {BoundKind::inverse_poa_upper, "inverse-poa-upper"},
};

Rational upper_with_tau(int lambda, int n, const Rational& tau) {
    const Rational denom = tau * Rational(n) - Rational(lambda);
    if (denom <= Rational(0)) {
        throw Error(ErrorCode::DegenerateDenominator, "tau*n <= lambda (" + tau.str() + "*" + std::to_string(n) +
                                                          " <= " + std::to_string(lambda) + ")");
    }
    return Rational(lambda) * Rational(n) / denom;
}

const ToleranceVector& need_tolerance(const BoundParams& p) {
    if (!p.tolerance) throw Error(ErrorCode::InvalidParameters, "this bound needs a tolerance vector");
    if (p.tolerance->lambda() != p.lambda) {
        throw Error(ErrorCode::InvalidParameters, "tolerance vector length differs from lambda");
    }
    return *p.tolerance;
}

}  // namespace

std::optional<BoundKind> parse_bound_kind(std::string_view name) {
    for (const auto& [kind, text] : kBoundNames) {
        if (name == text) return kind;
        std::string underscored(text);
        std::replace(underscored.begin(), underscored.end(), '-', '_');
        if (name == underscored) return kind;
    }
    return std::nullopt;
}

std::string_view to_string(BoundKind kind) {
    for (const auto& [k, text] : kBoundNames) {
        if (k == kind) return text;
    }
    return "unknown";
}

Rational harmonic(int lambda) {
    Rational h(0);
    for (int d = 1; d <= lambda; ++d) h += Rational(1, d);
    return h;
}

Rational evaluate_bound(BoundKind kind, const BoundParams& p) {
    if (p.lambda < 2) throw Error(ErrorCode::InvalidParameters, "lambda must be at least 2");
    if (kind != BoundKind::pos_lower && (p.n <= 0 || p.n % p.lambda != 0)) {
        throw Error(ErrorCode::InvalidParameters, "n must be a positive multiple of lambda");
    }
    switch (kind) {
    case BoundKind::poa_upper:
        return upper_with_tau(p.lambda, p.n, tolerance_sums(need_tolerance(p)).tau);
    case BoundKind::zts_poa:
        return upper_with_tau(p.lambda, p.n, Rational(1));
    case BoundKind::proportional_poa_upper:
        return upper_with_tau(p.lambda, p.n, Rational(p.lambda, 2));
    case BoundKind::inverse_poa_upper:
        return upper_with_tau(p.lambda, p.n, harmonic(p.lambda));
    case BoundKind::poa_lower: {
        const Rational total = tolerance_sums(need_tolerance(p)).tau_ell_total();
        const Rational l(p.lambda);
        const Rational denom = total / l * Rational(p.n) - (l * l - total) / (l - 1);
        if (denom <= Rational(0)) throw Error(ErrorCode::DegenerateDenominator, "lower-bound denominator is not positive");
        return l * Rational(p.n) / denom;
    }
    case BoundKind::pos_lower: {
        if (p.lambda != 2) throw Error(ErrorCode::InvalidParameters, "pos-lower is stated for two types");
        return Rational(2) / tolerance_sums(need_tolerance(p)).tau;
    }
    }
    throw Error(ErrorCode::InvalidParameters, "unknown bound kind");
}

}  // namespace schelling
