#include "quadres/complex.hpp"

#include <algorithm>
#include <map>

#include <json.hpp>

#include "quadres/errors.hpp"

namespace quadres {

namespace {

void canonicalize(std::vector<MatrixEntry>& entries) {
    std::sort(entries.begin(), entries.end(), [](const MatrixEntry& a, const MatrixEntry& b) {
        return std::tie(a.col, a.row, a.label) < std::tie(b.col, b.row, b.label);
    });
}

}  // namespace

FreeComplex from_diagram(const Diagram& d) {
    FreeComplex c;
    c.spec = d.spec;
    c.orientation = Orientation::Primal;
    c.initial_label = d.initial_label;
    c.ranks = d.level_counts();
    c.differentials.resize(static_cast<std::size_t>(c.length()) + 1);
    for (const Edge& e : d.edges) {
        const int n = d.vertex_level[static_cast<std::size_t>(e.from)];
        c.differentials[static_cast<std::size_t>(n)].push_back(
            {d.index_in_level(e.to), d.index_in_level(e.from), e.sign, e.label});
    }
    for (std::size_t n = 1; n < c.differentials.size(); ++n)
        canonicalize(c.differentials[n]);
    return c;
}

namespace {

DDWitness check_pair(const FreeComplex& c, int n) {
    // outer ∘ inner where the shared level provides outer columns / inner rows
    // (primal: outer = matrix n-1, inner = matrix n; dual: outer = matrix n,
    // inner = matrix n-1).
    const auto& outer = c.orientation == Orientation::Primal
                            ? c.differentials[static_cast<std::size_t>(n - 1)]
                            : c.differentials[static_cast<std::size_t>(n)];
    const auto& inner = c.orientation == Orientation::Primal
                            ? c.differentials[static_cast<std::size_t>(n)]
                            : c.differentials[static_cast<std::size_t>(n - 1)];

    std::map<int, std::vector<const MatrixEntry*>> outer_by_col;
    for (const auto& e : outer) outer_by_col[e.col].push_back(&e);

    std::map<std::pair<int, int>, std::map<std::pair<int, int>, long>> acc;
    for (const auto& in : inner) {
        auto it = outer_by_col.find(in.row);
        if (it == outer_by_col.end()) continue;
        for (const MatrixEntry* out : it->second) {
            if (c.spec.kills(out->label, in.label)) continue;
            const auto mono = std::minmax(out->label, in.label);
            acc[{out->row, in.col}][{mono.first, mono.second}] += out->sign * in.sign;
        }
    }
    for (const auto& [cell, terms] : acc) {
        std::string surviving;
        for (const auto& [mono, coeff] : terms) {
            if (coeff == 0) continue;
            if (!surviving.empty()) surviving += " + ";
            surviving += std::to_string(coeff) + "*x" + std::to_string(mono.first) + "*x" +
                         std::to_string(mono.second);
        }
        if (!surviving.empty())
            return {false, n, cell.first, cell.second, surviving};
    }
    return {true, n, 0, 0, ""};
}

}  // namespace

DDWitness verify_dd_zero(const FreeComplex& c, int n) {
    if (n < 2 || n > c.length())
        throw InvalidInputError("verify_dd_zero needs 2 <= n <= " + std::to_string(c.length()));
    return check_pair(c, n);
}

DDWitness verify_dd_zero_all(const FreeComplex& c) {
    for (int n = 2; n <= c.length(); ++n) {
        DDWitness w = check_pair(c, n);
        if (!w.zero) return w;
    }
    return {true, 0, 0, 0, ""};
}

FreeComplex dualize(const FreeComplex& c) {
    FreeComplex d = c;
    d.orientation = c.orientation == Orientation::Primal ? Orientation::Dual : Orientation::Primal;
    for (std::size_t n = 1; n < d.differentials.size(); ++n) {
        for (auto& e : d.differentials[n]) std::swap(e.row, e.col);
        canonicalize(d.differentials[n]);
    }
    return d;
}

std::string complex_to_json(const FreeComplex& c) {
    nlohmann::json j;
    j["orientation"] = c.orientation == Orientation::Primal ? "primal" : "dual";
    j["ranks"] = c.ranks;
    j["differentials"] = nlohmann::json::array();
    for (int n = 1; n <= c.length(); ++n) {
        nlohmann::json m = nlohmann::json::array();
        for (const auto& e : c.differentials[static_cast<std::size_t>(n)])
            m.push_back({{"row", e.row}, {"col", e.col}, {"sign", e.sign}, {"label", e.label}});
        j["differentials"].push_back(std::move(m));
    }
    return j.dump(2) + "\n";
}

FreeComplex complex_from_json(const std::string& text, const RingSpec& spec) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw InvalidInputError(std::string("bad complex JSON: ") + e.what());
    }
    for (const char* k : {"orientation", "ranks", "differentials"})
        if (!j.contains(k)) throw InvalidInputError(std::string("complex JSON misses '") + k + "'");
    FreeComplex c;
    c.spec = spec;
    const std::string orient = j["orientation"].get<std::string>();
    if (orient == "primal")
        c.orientation = Orientation::Primal;
    else if (orient == "dual")
        c.orientation = Orientation::Dual;
    else
        throw InvalidInputError("complex orientation must be 'primal' or 'dual'");
    c.ranks = j["ranks"].get<std::vector<int>>();
    if (c.ranks.empty()) throw InvalidInputError("complex needs at least one level");
    if (j["differentials"].size() != c.ranks.size() - 1)
        throw InvalidInputError("complex needs exactly one differential per level above 0");
    c.differentials.resize(c.ranks.size());
    for (int n = 1; n <= c.length(); ++n) {
        for (const auto& e : j["differentials"][static_cast<std::size_t>(n - 1)]) {
            MatrixEntry me{e["row"].get<int>(), e["col"].get<int>(), e["sign"].get<int>(),
                           e["label"].get<int>()};
            if (me.row < 0 || me.row >= c.matrix_rows(n) || me.col < 0 ||
                me.col >= c.matrix_cols(n))
                throw InvalidInputError("complex entry out of range in differential " +
                                        std::to_string(n));
            if (me.label < 1 || me.label > spec.num_vars || (me.sign != 1 && me.sign != -1))
                throw InvalidInputError("complex entry has bad label or sign");
            c.differentials[static_cast<std::size_t>(n)].push_back(me);
        }
    }
    return c;
}

}  // namespace quadres
