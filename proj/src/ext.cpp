#include "quadres/ext.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "quadres/errors.hpp"

namespace quadres {

std::vector<VVOccurrence> find_vv_patterns(const Diagram& d) {
    std::vector<VVOccurrence> out;
    const int top = d.top_level();
    // b0 needs its incoming edges fully known, so its level stays below the top
    for (int b_level = 1; b_level <= top - 1; ++b_level) {
        for (int c0 : d.levels[static_cast<std::size_t>(b_level - 1)]) {
            const auto& incoming = d.in_edges[static_cast<std::size_t>(c0)];
            for (int ei : incoming) {
                const Edge& e0 = d.edges[static_cast<std::size_t>(ei)];
                const int b0 = e0.from;
                if (d.out_edges[static_cast<std::size_t>(b0)].size() != 1) continue;
                // every label arriving at b0 must annihilate x_s
                bool annihilated = true;
                std::vector<int> in_labels;
                for (int fi : d.in_edges[static_cast<std::size_t>(b0)]) {
                    const int l = d.edges[static_cast<std::size_t>(fi)].label;
                    in_labels.push_back(l);
                    if (!d.spec.kills(l, e0.label)) annihilated = false;
                }
                if (!annihilated) continue;
                std::sort(in_labels.begin(), in_labels.end());
                for (int fj : incoming) {
                    const Edge& e1 = d.edges[static_cast<std::size_t>(fj)];
                    const int b1 = e1.from;
                    if (b1 == b0 || e1.label == e0.label) continue;
                    if (d.out_edges[static_cast<std::size_t>(b1)].size() != 1) continue;
                    out.push_back({c0, b0, b1, e0.label, e1.label, b_level, in_labels});
                }
            }
        }
    }
    return out;
}

int cohomology_dim(const FreeComplex& dual, int i, int u, const FieldChoice& field,
                   const BasisTable& table) {
    if (dual.orientation != Orientation::Dual)
        throw InvalidInputError("cohomology_dim expects a dualized complex");
    return homology_dim(dual, i, u, field, table);
}

std::string ExtEvidence::to_json() const {
    nlohmann::json j;
    j["nonzero_ext_positions"] = nonzero_positions;
    j["vv_occurrences"] = nlohmann::json::array();
    for (const auto& o : occurrences)
        j["vv_occurrences"].push_back({{"position", o.position},
                                       {"c0", o.c0},
                                       {"b0", o.b0},
                                       {"b1", o.b1},
                                       {"s", o.s},
                                       {"t", o.t}});
    return j.dump(2) + "\n";
}

ExtEvidence injective_dimension_evidence(const RingSpec& spec, int initial, int levels,
                                         const FieldChoice& field, int max_degree) {
    ExtEvidence ev;
    ev.spec = spec;
    ev.initial = initial;
    ev.L = levels;
    ev.T = max_degree >= 0 ? max_degree : levels + 4;
    ev.field = field;

    const Diagram d = build_diagram(spec, initial, levels);
    const FreeComplex dual = dualize(from_diagram(d));
    ev.occurrences = find_vv_patterns(d);

    BasisTable table(spec);
    table.ensure(ev.T + 1);

    std::map<std::pair<int, int>, int> dim_memo;  // (position, u) -> cohomology dim
    auto coh = [&](int i, int u) {
        const auto key = std::make_pair(i, u);
        auto it = dim_memo.find(key);
        if (it != dim_memo.end()) return it->second;
        const int val = cohomology_dim(dual, i, u, field, table);
        dim_memo.emplace(key, val);
        return val;
    };

    // scan every internal degree whose monomial degree at position i is <= T
    for (int i = 1; i <= levels - 1; ++i) {
        for (int m = 0; m <= ev.T; ++m) {
            const int u = m - i;
            const int h = coh(i, u);
            if (h > 0) {
                ev.nonzero_positions.push_back(i);
                ev.nonzero_samples.emplace_back(i, u);
                break;
            }
        }
    }

    for (const auto& occ : ev.occurrences) {
        const int u = vv_witness_degree(occ.position);
        if (coh(occ.position, u) < 1)
            throw InternalConsistencyError(
                "vv occurrence at position " + std::to_string(occ.position) + " (c0=v" +
                std::to_string(occ.c0) + ", b0=v" + std::to_string(occ.b0) + ", b1=v" +
                std::to_string(occ.b1) + ", s=x" + std::to_string(occ.s) + ", t=x" +
                std::to_string(occ.t) + ") has no cohomology in internal degree " +
                std::to_string(u));
    }
    return ev;
}

}  // namespace quadres
