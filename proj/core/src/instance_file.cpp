#include "schelling/instance_file.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "json.hpp"
#include "schelling/error.hpp"

namespace schelling {

namespace {

using nlohmann::json;

constexpr std::string_view kFormat = "schelling-instance";
constexpr int kVersion = 1;

[[noreturn]] void fail(const std::string& what) { throw Error(ErrorCode::ParseError, what); }

const json& field(const json& obj, const char* key) {
    if (!obj.is_object() || !obj.contains(key)) fail(std::string("missing field '") + key + "'");
    return obj.at(key);
}

int as_int(const json& j, const char* what) {
    if (!j.is_number_integer()) fail(std::string(what) + " must be an integer");
    return j.get<int>();
}

Rational as_rational(const json& j) {
    try {
        if (j.is_number_integer()) return Rational(j.get<std::int64_t>());
        if (j.is_string()) return Rational::parse(j.get<std::string>());
    } catch (const std::invalid_argument& e) {
        fail(e.what());
    }
    fail("rationals are written as integers or \"p/q\" strings");
}

ToleranceVector parse_tolerance(const json& j, int lambda) {
    if (j.is_array()) {
        std::vector<Rational> values;
        for (const auto& v : j) values.push_back(as_rational(v));
        return ToleranceVector::make(values);
    }
    if (j.is_object()) {
        const auto kind_text = field(j, "kind");
        if (!kind_text.is_string()) fail("tolerance kind must be a string");
        const auto kind = parse_tolerance_kind(kind_text.get<std::string>());
        if (!kind) fail("unknown tolerance kind '" + kind_text.get<std::string>() + "'");
        std::optional<int> alpha;
        if (j.contains("alpha")) alpha = as_int(j.at("alpha"), "alpha");
        return standard_tolerance(*kind, lambda, alpha);
    }
    fail("tolerance must be a list of rationals or {kind, alpha}");
}

json tolerance_json(const ToleranceVector& tv) {
    json out = json::array();
    for (const auto& r : tv.values()) out.push_back(r.str());
    return out;
}

Topology generated_topology(const json& spec) {
    const auto& gen = field(spec, "generator");
    if (!gen.is_string()) fail("generator must be a string");
    const auto name = gen.get<std::string>();
    if (name == "grid") return grid(as_int(field(spec, "rows"), "rows"), as_int(field(spec, "cols"), "cols"));
    if (auto kind = parse_graph_kind(name)) return standard_graph(*kind, as_int(field(spec, "size"), "size"));
    if (name == "named") {
        const auto& inst = field(spec, "instance");
        if (!inst.is_string()) fail("instance must be a string");
        const auto which = inst.get<std::string>();
        // the board does not depend on the tolerance, so any valid vector will do
        if (which == "no-eq-tree") {
            const int lambda = as_int(field(spec, "lambda"), "lambda");
            return no_equilibrium_tree_game(lambda, standard_tolerance(ToleranceKind::zero, lambda)).game.topology();
        }
        if (which == "poa-lb") {
            const int lambda = as_int(field(spec, "lambda"), "lambda");
            return poa_lb_game(lambda, as_int(field(spec, "mu"), "mu"), standard_tolerance(ToleranceKind::zero, lambda))
                .game.topology();
        }
        if (which == "pos") return pos_game(as_int(field(spec, "b"), "b"), Rational(0)).game.topology();
        if (which == "seven-type-grid") return grid(4, 4);
        fail("unknown named instance '" + which + "'");
    }
    fail("unknown generator '" + name + "'");
}

Topology parse_topology(const json& j) {
    if (!j.is_object()) fail("topology must be an object");
    Topology topo = [&] {
        if (j.contains("generator")) return generated_topology(j);
        const int n = as_int(field(j, "node_count"), "node_count");
        std::vector<Edge> edges;
        const auto& list = field(j, "edges");
        if (!list.is_array()) fail("edges must be a list");
        for (const auto& e : list) {
            if (!e.is_array() || e.size() != 2) fail("each edge is a pair [u, v]");
            edges.emplace_back(as_int(e[0], "edge endpoint"), as_int(e[1], "edge endpoint"));
        }
        if (j.contains("grid")) {
            const auto& g = j.at("grid");
            auto built = grid(as_int(field(g, "rows"), "rows"), as_int(field(g, "cols"), "cols"));
            if (built.node_count() != n || build_graph(n, built.edges()) != build_graph(n, edges)) fail("grid shape does not match edges");
            return built;
        }
        return build_graph(n, edges);
    }();
    if (j.contains("kind")) {
        if (!j.at("kind").is_string()) fail("kind must be a string");
        topo = topo.with_kind(j.at("kind").get<std::string>());
    }
    return topo;
}

json topology_json(const Topology& t) {
    json out;
    out["node_count"] = t.node_count();
    out["kind"] = t.kind();
    if (const auto& g = t.grid()) out["grid"] = {{"rows", g->rows}, {"cols", g->cols}};
    json edges = json::array();
    for (const auto& [u, v] : t.edges()) edges.push_back({u, v});
    out["edges"] = std::move(edges);
    return out;
}

Assignment parse_assignment(const GameInstance& game, const json& j) {
    if (!j.is_array()) fail("an assignment is a list of [node, type] pairs");
    std::vector<std::pair<NodeId, TypeIndex>> pairs;
    for (const auto& p : j) {
        if (!p.is_array() || p.size() != 2) fail("each placement is a pair [node, type]");
        pairs.emplace_back(as_int(p[0], "node"), as_int(p[1], "type"));
    }
    return Assignment::from_pairs(game, pairs);
}

}  // namespace

InstanceFile to_instance_file(const NamedInstance& instance) {
    InstanceFile out{instance.name, instance.game, instance.assignments, instance.tolerances, instance.parameters};
    return out;
}

InstanceFile parse_instance(std::string_view text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        fail(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail("instance document must be a JSON object");
    if (doc.contains("format") && doc.at("format") != kFormat) fail("unexpected format tag");
    if (doc.contains("version") && doc.at("version") != kVersion) fail("unsupported version");

    auto topo = std::make_shared<const Topology>(parse_topology(field(doc, "topology")));
    const auto& g = field(doc, "game");
    const int lambda = as_int(field(g, "lambda"), "lambda");
    const int x = as_int(field(g, "agents_per_type"), "agents_per_type");
    auto tv = parse_tolerance(field(g, "tolerance"), lambda);

    InstanceFile out{doc.value("name", std::string()), GameInstance::make(topo, lambda, x, std::move(tv)), {}, {}, {}};
    if (doc.contains("assignments")) {
        const auto& list = doc.at("assignments");
        if (!list.is_object()) fail("assignments must map labels to placements");
        for (const auto& [label, pairs] : list.items()) out.assignments.emplace(label, parse_assignment(out.game, pairs));
    }
    if (doc.contains("tolerances")) {
        const auto& list = doc.at("tolerances");
        if (!list.is_object()) fail("tolerances must map labels to vectors");
        for (const auto& [label, values] : list.items()) {
            auto extra = parse_tolerance(values, lambda);
            if (extra.lambda() != lambda) fail("tolerance '" + label + "' has the wrong length");
            out.tolerances.emplace(label, std::move(extra));
        }
    }
    if (doc.contains("metadata")) {
        const auto& meta = doc.at("metadata");
        if (!meta.is_object()) fail("metadata must be an object");
        for (const auto& [key, value] : meta.items()) {
            out.metadata.emplace(key, value.is_string() ? value.get<std::string>() : value.dump());
        }
    }
    return out;
}

std::string serialize_instance(const InstanceFile& file) {
    json doc;
    doc["format"] = kFormat;
    doc["version"] = kVersion;
    doc["name"] = file.name;
    doc["topology"] = topology_json(file.game.topology());
    doc["game"] = {{"lambda", file.game.lambda()},
                   {"agents_per_type", file.game.agents_per_type()},
                   {"tolerance", tolerance_json(file.game.tolerance())}};
    json assignments = json::object();
    for (const auto& [label, a] : file.assignments) {
        json pairs = json::array();
        for (const auto& [v, t] : a.pairs()) pairs.push_back({v, t});
        assignments[label] = std::move(pairs);
    }
    doc["assignments"] = std::move(assignments);
    json tolerances = json::object();
    for (const auto& [label, tv] : file.tolerances) tolerances[label] = tolerance_json(tv);
    doc["tolerances"] = std::move(tolerances);
    doc["metadata"] = file.metadata;
    return doc.dump(1) + "\n";
}

InstanceFile read_instance_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) fail("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_instance(buf.str());
}

void write_instance_file(const std::filesystem::path& path, const InstanceFile& file) {
    std::ofstream out(path);
    if (!out) fail("cannot write " + path.string());
    out << serialize_instance(file);
    if (!out) fail("write failed for " + path.string());
}

ToleranceVector parse_tolerance_list(std::string_view text) {
    std::vector<Rational> values;
    std::size_t start = 0;
    while (start <= text.size()) {
        const auto comma = text.find(',', start);
        const auto piece = text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start);
        try {
            values.push_back(Rational::parse(piece));
        } catch (const std::invalid_argument& e) {
            fail("bad tolerance entry '" + std::string(piece) + "': " + e.what());
        }
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return ToleranceVector::make(values);
}

}  // namespace schelling
