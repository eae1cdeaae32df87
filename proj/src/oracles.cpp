#include "quadres/oracles.hpp"

#include <algorithm>

#include "quadres/errors.hpp"
#include "quadres/homology.hpp"

namespace quadres {

OracleKind OracleKind::o_family(int n) {
    if (n < 2) throw InvalidInputError("the O family needs at least 2 variables");
    return {Tag::OFamily, n};
}

std::string OracleKind::to_string() const {
    switch (tag) {
        case Tag::Fibonacci: return "fibonacci";
        case Tag::Binary: return "binary";
        case Tag::OFamily: return "o(" + std::to_string(n) + ")";
    }
    return "?";
}

RingSpec oracle_ring(const OracleKind& kind) {
    switch (kind.tag) {
        case OracleKind::Tag::Fibonacci:
            return normalize_spec({{1, 2}, {1, 3}}, 3);
        case OracleKind::Tag::Binary:
            return normalize_spec({{1, 1}, {1, 2}, {2, 2}}, 2);
        case OracleKind::Tag::OFamily: {
            std::vector<std::pair<int, int>> gens{{1, 1}};
            for (int i = 1; i <= kind.n; ++i)
                for (int j = i + 1; j <= kind.n; ++j) gens.emplace_back(i, j);
            return normalize_spec(std::move(gens), kind.n);
        }
    }
    throw InvalidInputError("unknown oracle kind");
}

namespace {

using Matrix = std::vector<MatrixEntry>;

Matrix block_diag(std::initializer_list<std::pair<const Matrix*, std::pair<int, int>>> blocks) {
    Matrix out;
    int row_off = 0, col_off = 0;
    for (const auto& [m, shape] : blocks) {
        for (const auto& e : *m)
            out.push_back({e.row + row_off, e.col + col_off, e.sign, e.label});
        row_off += shape.first;
        col_off += shape.second;
    }
    return out;
}

FreeComplex fibonacci_complex(int levels) {
    FreeComplex c;
    c.spec = oracle_ring(OracleKind::fibonacci());
    c.initial_label = 1;
    std::vector<int> ranks{1, 1, 2, 3};
    std::vector<Matrix> mats(4);
    mats[1] = {{0, 0, +1, 1}};
    mats[2] = {{0, 0, +1, 2}, {0, 1, +1, 3}};
    mats[3] = {{0, 0, +1, 1}, {0, 1, +1, 3}, {1, 1, -1, 2}, {1, 2, +1, 1}};
    for (int n = 4; n <= levels; ++n) {
        const auto shape = [&](int k) {
            return std::make_pair(ranks[static_cast<std::size_t>(k - 1)],
                                  ranks[static_cast<std::size_t>(k)]);
        };
        mats.push_back(block_diag({{&mats[static_cast<std::size_t>(n - 2)], shape(n - 2)},
                                   {&mats[static_cast<std::size_t>(n - 3)], shape(n - 3)},
                                   {&mats[static_cast<std::size_t>(n - 2)], shape(n - 2)}}));
        ranks.push_back(ranks[static_cast<std::size_t>(n - 1)] +
                        ranks[static_cast<std::size_t>(n - 2)]);
    }
    ranks.resize(static_cast<std::size_t>(levels) + 1);
    mats.resize(static_cast<std::size_t>(levels) + 1);
    c.ranks = std::move(ranks);
    c.differentials = std::move(mats);
    return c;
}

FreeComplex binary_complex(int levels) {
    FreeComplex c;
    c.spec = oracle_ring(OracleKind::binary());
    c.initial_label = 1;
    std::vector<int> ranks{1, 1, 2};
    std::vector<Matrix> mats(3);
    mats[1] = {{0, 0, +1, 1}};
    mats[2] = {{0, 0, +1, 1}, {0, 1, +1, 2}};
    for (int n = 3; n <= levels; ++n) {
        const auto shape = std::make_pair(ranks[static_cast<std::size_t>(n - 2)],
                                          ranks[static_cast<std::size_t>(n - 1)]);
        mats.push_back(block_diag({{&mats[static_cast<std::size_t>(n - 1)], shape},
                                   {&mats[static_cast<std::size_t>(n - 1)], shape}}));
        ranks.push_back(2 * ranks[static_cast<std::size_t>(n - 1)]);
    }
    ranks.resize(static_cast<std::size_t>(levels) + 1);
    mats.resize(static_cast<std::size_t>(levels) + 1);
    c.ranks = std::move(ranks);
    c.differentials = std::move(mats);
    return c;
}

FreeComplex o_family_complex(int n_vars, int levels) {
    FreeComplex c;
    c.spec = oracle_ring(OracleKind::o_family(n_vars));
    c.initial_label = 1;
    c.ranks = {1, 1};
    c.differentials.resize(2);
    c.differentials[1] = {{0, 0, +1, 1}};
    // generator g at each level carries the variable it maps down by; a
    // label-1 generator spawns one child per variable, any other label i
    // spawns every variable except x_i (the kernel of x_i leaves x_i out)
    std::vector<int> labels{1};
    for (int lv = 2; lv <= levels; ++lv) {
        std::vector<int> next_labels;
        Matrix m;
        for (std::size_t g = 0; g < labels.size(); ++g) {
            for (int j = 1; j <= n_vars; ++j) {
                if (labels[g] != 1 && j == labels[g]) continue;
                m.push_back({static_cast<int>(g), static_cast<int>(next_labels.size()), +1, j});
                next_labels.push_back(j);
            }
        }
        c.ranks.push_back(static_cast<int>(next_labels.size()));
        c.differentials.push_back(std::move(m));
        labels = std::move(next_labels);
    }
    return c;
}

}  // namespace

FreeComplex oracle_complex(const OracleKind& kind, int levels) {
    if (levels < 1) throw InvalidInputError("oracle complex needs at least one level");
    switch (kind.tag) {
        case OracleKind::Tag::Fibonacci: return fibonacci_complex(levels);
        case OracleKind::Tag::Binary: return binary_complex(levels);
        case OracleKind::Tag::OFamily: return o_family_complex(kind.n, levels);
    }
    throw InvalidInputError("unknown oracle kind");
}

std::optional<OracleKind> detect_oracle(const RingSpec& spec) {
    if (spec == oracle_ring(OracleKind::fibonacci())) return OracleKind::fibonacci();
    if (spec == oracle_ring(OracleKind::binary())) return OracleKind::binary();
    if (spec.num_vars >= 2 && spec == oracle_ring(OracleKind::o_family(spec.num_vars)))
        return OracleKind::o_family(spec.num_vars);
    return std::nullopt;
}

CompareVerdict compare_complexes(const FreeComplex& a, const FreeComplex& b, int T,
                                 const FieldChoice& field) {
    if (!(a.spec == b.spec)) return {false, "different rings"};
    if (a.ranks != b.ranks) {
        std::size_t lv = 0;
        while (lv < std::min(a.ranks.size(), b.ranks.size()) && a.ranks[lv] == b.ranks[lv]) ++lv;
        return {false, "rank sequences differ at level " + std::to_string(lv)};
    }
    const ExactnessReport ra = exactness_report(a, T, field);
    const ExactnessReport rb = exactness_report(b, T, field);
    for (std::size_t i = 0; i < ra.rows.size(); ++i) {
        if (ra.rows[i].homology_dim != rb.rows[i].homology_dim)
            return {false, "graded homology differs at (n=" + std::to_string(ra.rows[i].n) +
                               ", t=" + std::to_string(ra.rows[i].t) + "): " +
                               std::to_string(ra.rows[i].homology_dim) + " vs " +
                               std::to_string(rb.rows[i].homology_dim)};
    }
    return {true, ""};
}

}  // namespace quadres
