#include "quadres/diagram.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <sstream>

#include <json.hpp>

#include "quadres/errors.hpp"

namespace quadres {

std::vector<Template> build_template_set(const RingSpec& spec) {
    std::vector<Template> out;
    for (const auto& [i, j] : spec.generators) {
        if (i == j) {
            out.push_back({Template::Kind::RepeatedColumn, i, i});
        } else {
            out.push_back({Template::Kind::Column, j, i});
            out.push_back({Template::Kind::Column, i, j});
        }
    }
    for (int i = 1; i <= spec.num_vars; ++i)
        for (int j = i + 1; j <= spec.num_vars; ++j)
            if (!spec.kills(i, j)) out.push_back({Template::Kind::Diamond, i, j});
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<int> Diagram::level_counts() const {
    std::vector<int> counts;
    counts.reserve(levels.size());
    for (const auto& lv : levels) counts.push_back(static_cast<int>(lv.size()));
    return counts;
}

int Diagram::index_in_level(int id) const {
    const auto& lv = levels[static_cast<std::size_t>(vertex_level[static_cast<std::size_t>(id)])];
    return id - lv.front();
}

namespace {

int add_vertex(Diagram& d, int level) {
    const int id = static_cast<int>(d.vertex_level.size());
    d.vertex_level.push_back(level);
    while (static_cast<int>(d.levels.size()) <= level) d.levels.emplace_back();
    d.levels[static_cast<std::size_t>(level)].push_back(id);
    d.out_edges.emplace_back();
    d.in_edges.emplace_back();
    return id;
}

void add_edge(Diagram& d, int from, int to, int label, int sign) {
    const int idx = static_cast<int>(d.edges.size());
    d.edges.push_back({from, to, label, sign});
    d.out_edges[static_cast<std::size_t>(from)].push_back(idx);
    d.in_edges[static_cast<std::size_t>(to)].push_back(idx);
}

std::string key_str(const DemandKey& k) {
    return "(v" + std::to_string(k.target) + ", x" + std::to_string(k.label) + ")";
}

/// d(L+1 -> L) followed by d(L+2 -> L+1) must vanish entry-wise in R.
void check_top_composite_zero(const Diagram& d) {
    const int top = d.top_level();
    if (top < 2) return;
    for (int v2 : d.levels[static_cast<std::size_t>(top)]) {
        // accumulate the composite against every level-(top-2) vertex
        std::map<std::pair<int, std::pair<int, int>>, int> acc;  // (w, (l1<=l2)) -> coeff
        for (int ei : d.out_edges[static_cast<std::size_t>(v2)]) {
            const Edge& e = d.edges[static_cast<std::size_t>(ei)];
            for (int fi : d.out_edges[static_cast<std::size_t>(e.to)]) {
                const Edge& f = d.edges[static_cast<std::size_t>(fi)];
                if (d.spec.kills(e.label, f.label)) continue;  // product is 0 in R
                auto mono = std::minmax(e.label, f.label);
                acc[{f.to, {mono.first, mono.second}}] += e.sign * f.sign;
            }
        }
        for (const auto& [key, coeff] : acc) {
            if (coeff != 0)
                throw InternalConsistencyError(
                    "composite of levels " + std::to_string(top) + "," + std::to_string(top - 1) +
                    " does not vanish at vertex v" + std::to_string(v2) + " -> v" +
                    std::to_string(key.first) + " (surviving x" + std::to_string(key.second.first) +
                    "x" + std::to_string(key.second.second) + ", coefficient " +
                    std::to_string(coeff) + ")");
        }
    }
}

}  // namespace

Diagram init_diagram(const RingSpec& spec, int initial_label) {
    if (initial_label < 1 || initial_label > spec.num_vars)
        throw InvalidInputError("initial label x" + std::to_string(initial_label) +
                                " out of range 1.." + std::to_string(spec.num_vars));
    bool divides_some = false;
    for (const auto& [i, j] : spec.generators)
        if (i == initial_label || j == initial_label) divides_some = true;
    if (!divides_some)
        throw InvalidInputError("x" + std::to_string(initial_label) +
                                " divides no generator of the ideal; no valid initial map");
    Diagram d;
    d.spec = spec;
    d.initial_label = initial_label;
    const int bottom = add_vertex(d, 0);
    const int first = add_vertex(d, 1);
    add_edge(d, first, bottom, initial_label, +1);
    return d;
}

Demands collect_demands(const Diagram& d) {
    const int top = d.top_level();
    const auto& top_ids = d.levels[static_cast<std::size_t>(top)];

    std::vector<DemandKey> keys;
    for (int v : top_ids) {
        for (int ei : d.out_edges[static_cast<std::size_t>(v)]) {
            const Edge& e = d.edges[static_cast<std::size_t>(ei)];
            for (int j = 1; j <= d.spec.num_vars; ++j)
                if (d.spec.kills(e.label, j)) keys.push_back({v, j});
        }
    }

    // Diamond pairs: two top edges into a common vertex, distinct sources,
    // distinct labels whose product survives in R.
    std::vector<std::array<int, 5>> raw_links;  // (t1, l1, t2, l2, equal)
    if (top >= 1) {
        for (int w : d.levels[static_cast<std::size_t>(top - 1)]) {
            const auto& incoming = d.in_edges[static_cast<std::size_t>(w)];
            for (std::size_t a = 0; a < incoming.size(); ++a) {
                for (std::size_t b = a + 1; b < incoming.size(); ++b) {
                    const Edge& e1 = d.edges[static_cast<std::size_t>(incoming[a])];
                    const Edge& e2 = d.edges[static_cast<std::size_t>(incoming[b])];
                    if (e1.from == e2.from || e1.label == e2.label) continue;
                    if (d.spec.kills(e1.label, e2.label)) continue;
                    // new edges: e2.label into e1.from, e1.label into e2.from,
                    // sign product = -s1*s2
                    const bool equal = (e1.sign * e2.sign) == -1;
                    keys.push_back({e1.from, e2.label});
                    keys.push_back({e2.from, e1.label});
                    raw_links.push_back({e1.from, e2.label, e2.from, e1.label, equal ? 1 : 0});
                }
            }
        }
    }

    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());

    Demands out;
    out.keys = std::move(keys);
    auto key_index = [&](int target, int label) {
        const DemandKey k{target, label};
        return static_cast<int>(std::lower_bound(out.keys.begin(), out.keys.end(), k) -
                                out.keys.begin());
    };
    for (const auto& [t1, l1, t2, l2, eq] : raw_links)
        out.links.push_back({key_index(t1, l1), key_index(t2, l2), eq != 0});
    return out;
}

std::vector<std::vector<int>> merge_demands(const Demands& demands) {
    const int n = static_cast<int>(demands.keys.size());
    std::vector<int> parent(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) parent[static_cast<std::size_t>(i)] = i;
    std::function<int(int)> find = [&](int x) {
        while (parent[static_cast<std::size_t>(x)] != x) {
            parent[static_cast<std::size_t>(x)] =
                parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
            x = parent[static_cast<std::size_t>(x)];
        }
        return x;
    };
    for (const auto& link : demands.links) {
        const int ra = find(link.a), rb = find(link.b);
        if (ra != rb) parent[static_cast<std::size_t>(std::max(ra, rb))] = std::min(ra, rb);
    }
    std::map<int, std::vector<int>> classes;  // root -> members (ascending)
    for (int i = 0; i < n; ++i) classes[find(i)].push_back(i);
    std::vector<std::vector<int>> out;
    out.reserve(classes.size());
    for (auto& [root, members] : classes) out.push_back(std::move(members));
    // keys are sorted, so ordering classes by root = ordering by smallest key
    return out;
}

std::vector<int> assign_signs(const Demands& demands) {
    const int n = static_cast<int>(demands.keys.size());
    std::vector<std::vector<std::pair<int, bool>>> adj(static_cast<std::size_t>(n));
    for (const auto& link : demands.links) {
        adj[static_cast<std::size_t>(link.a)].emplace_back(link.b, link.equal);
        adj[static_cast<std::size_t>(link.b)].emplace_back(link.a, link.equal);
    }

    std::vector<int> parity(static_cast<std::size_t>(n), -1);  // -1 unvisited, else 0/1
    std::vector<int> parent(static_cast<std::size_t>(n), -1);
    std::vector<int> signs(static_cast<std::size_t>(n), +1);
    std::vector<int> component;
    std::vector<int> stack;

    for (int start = 0; start < n; ++start) {
        if (parity[static_cast<std::size_t>(start)] != -1) continue;
        component.clear();
        stack.assign(1, start);
        parity[static_cast<std::size_t>(start)] = 0;
        bool mixed = false;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            component.push_back(u);
            for (const auto& [v, equal] : adj[static_cast<std::size_t>(u)]) {
                const int want = equal ? parity[static_cast<std::size_t>(u)]
                                       : 1 - parity[static_cast<std::size_t>(u)];
                if (parity[static_cast<std::size_t>(v)] == -1) {
                    parity[static_cast<std::size_t>(v)] = want;
                    parent[static_cast<std::size_t>(v)] = u;
                    if (want == 1) mixed = true;
                    stack.push_back(v);
                } else if (parity[static_cast<std::size_t>(v)] != want) {
                    // odd constraint cycle: the path u..start joined with v..start
                    std::string cyc = key_str(demands.keys[static_cast<std::size_t>(v)]);
                    for (int w = u; w != -1; w = parent[static_cast<std::size_t>(w)])
                        cyc += " - " + key_str(demands.keys[static_cast<std::size_t>(w)]);
                    cyc += " ... ";
                    for (int w = v; w != -1; w = parent[static_cast<std::size_t>(w)])
                        cyc += key_str(demands.keys[static_cast<std::size_t>(w)]) + " - ";
                    throw SignConflictError("inconsistent parity system while signing new edges",
                                            cyc);
                }
            }
        }
        if (!mixed) continue;  // all constraints satisfied by +1 everywhere
        // negative side: the one holding the smallest (label, target) key
        int best = component.front();
        auto rank_of = [&](int idx) {
            const DemandKey& k = demands.keys[static_cast<std::size_t>(idx)];
            return std::make_pair(k.label, k.target);
        };
        for (int idx : component)
            if (rank_of(idx) < rank_of(best)) best = idx;
        const int neg_parity = parity[static_cast<std::size_t>(best)];
        for (int idx : component)
            signs[static_cast<std::size_t>(idx)] =
                parity[static_cast<std::size_t>(idx)] == neg_parity ? -1 : +1;
    }
    return signs;
}

void extend_level(Diagram& d) {
    const Demands demands = collect_demands(d);
    const auto classes = merge_demands(demands);
    const auto signs = assign_signs(demands);
    const int new_level = d.top_level() + 1;
    for (const auto& members : classes) {
        const int v = add_vertex(d, new_level);
        for (int idx : members) {
            const DemandKey& k = demands.keys[static_cast<std::size_t>(idx)];
            add_edge(d, v, k.target, k.label, signs[static_cast<std::size_t>(idx)]);
        }
    }
    check_top_composite_zero(d);
}

Diagram build_diagram(const RingSpec& spec, int initial_label, int levels) {
    if (levels < 1) throw InvalidInputError("need at least one level above degree 0");
    Diagram d = init_diagram(spec, initial_label);
    for (int l = 1; l < levels; ++l) extend_level(d);
    return d;
}

std::string diagram_to_json(const Diagram& d) {
    nlohmann::json j;
    j["spec"] = nlohmann::json::parse(ring_spec_to_json(d.spec));
    j["initial"] = d.initial_label;
    j["levels"] = d.level_counts();
    j["vertices"] = nlohmann::json::array();
    for (std::size_t id = 0; id < d.vertex_level.size(); ++id)
        j["vertices"].push_back({{"id", id}, {"level", d.vertex_level[id]}});
    j["edges"] = nlohmann::json::array();
    for (const Edge& e : d.edges)
        j["edges"].push_back(
            {{"from", e.from}, {"to", e.to}, {"label", e.label}, {"sign", e.sign}});
    return j.dump(2) + "\n";
}

Diagram diagram_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("bad diagram JSON: ") + e.what());
    }
    for (const char* k : {"spec", "initial", "levels", "vertices", "edges"})
        if (!j.contains(k)) throw InvalidInputError(std::string("diagram JSON misses '") + k + "'");
    Diagram d;
    d.spec = ring_spec_from_json(j["spec"].dump());
    d.initial_label = j["initial"].get<int>();
    std::vector<std::pair<int, int>> verts;  // (id, level)
    for (const auto& v : j["vertices"]) verts.emplace_back(v["id"].get<int>(), v["level"].get<int>());
    std::sort(verts.begin(), verts.end());
    for (std::size_t i = 0; i < verts.size(); ++i) {
        if (verts[i].first != static_cast<int>(i))
            throw InvalidInputError("diagram vertex ids must be 0..N-1 with no gaps");
        if (i == 0 ? verts[i].second != 0 : verts[i].second < verts[i - 1].second)
            throw InvalidInputError("diagram vertex ids must be level-major starting at level 0");
        add_vertex(d, verts[i].second);
    }
    for (const auto& e : j["edges"]) {
        const int from = e["from"].get<int>(), to = e["to"].get<int>();
        const int label = e["label"].get<int>(), sign = e["sign"].get<int>();
        if (from < 0 || to < 0 || from >= static_cast<int>(verts.size()) ||
            to >= static_cast<int>(verts.size()))
            throw InvalidInputError("diagram edge endpoint out of range");
        if (d.vertex_level[static_cast<std::size_t>(from)] !=
            d.vertex_level[static_cast<std::size_t>(to)] + 1)
            throw InvalidInputError("diagram edges must drop exactly one level");
        if (label < 1 || label > d.spec.num_vars || (sign != 1 && sign != -1))
            throw InvalidInputError("diagram edge has bad label or sign");
        add_edge(d, from, to, label, sign);
    }
    const auto counts = d.level_counts();
    std::vector<int> declared = j["levels"].get<std::vector<int>>();
    if (declared != counts) throw InvalidInputError("diagram level counts disagree with vertices");
    return d;
}

std::string diagram_to_dot(const Diagram& d) {
    std::ostringstream os;
    os << "digraph diagram {\n  rankdir=BT;\n  node [shape=circle, label=\"\", width=0.12];\n";
    for (std::size_t lv = 0; lv < d.levels.size(); ++lv) {
        os << "  { rank=same;";
        for (int id : d.levels[lv]) os << " v" << id << ";";
        os << " }  // level " << lv << "\n";
    }
    for (const Edge& e : d.edges) {
        os << "  v" << e.from << " -> v" << e.to << " [label=\"" << (e.sign < 0 ? "-" : "") << "x"
           << e.label << "\"];\n";
    }
    os << "}\n";
    return os.str();
}

}  // namespace quadres
