#include "quadres/homology.hpp"

#include <algorithm>
#include <sstream>

#include <json.hpp>

#include "quadres/diagram.hpp"
#include "quadres/errors.hpp"
#include "quadres/parallel.hpp"

namespace quadres {

const std::vector<Monomial> BasisTable::empty_{};

void BasisTable::ensure(int degree) {
    while (static_cast<int>(by_degree_.size()) <= degree) {
        const int d = static_cast<int>(by_degree_.size());
        by_degree_.push_back(enumerate_basis(spec_, d));
        std::map<Monomial, int> idx;
        for (std::size_t i = 0; i < by_degree_.back().size(); ++i)
            idx.emplace(by_degree_.back()[i], static_cast<int>(i));
        index_.push_back(std::move(idx));
    }
}

const std::vector<Monomial>& BasisTable::basis(int degree) const {
    if (degree < 0) return empty_;
    if (degree >= static_cast<int>(by_degree_.size()))
        throw InternalConsistencyError("basis table not filled up to degree " +
                                       std::to_string(degree));
    return by_degree_[static_cast<std::size_t>(degree)];
}

int BasisTable::index_of(int degree, const Monomial& m) const {
    if (degree < 0 || degree >= static_cast<int>(index_.size())) return -1;
    const auto& idx = index_[static_cast<std::size_t>(degree)];
    auto it = idx.find(m);
    return it == idx.end() ? -1 : it->second;
}

GradedPiece graded_piece(const FreeComplex& c, int n, int t, const BasisTable& table) {
    if (n < 1 || n > c.length())
        throw InvalidInputError("graded piece needs 1 <= n <= " + std::to_string(c.length()));
    GradedPiece piece;
    piece.matrix_index = n;
    piece.degree = t;

    const int dom_level = c.matrix_domain_level(n);
    const int cod_level = c.matrix_codomain_level(n);
    const int dom_mon_deg = t - c.gen_degree(dom_level);
    const int cod_mon_deg = t - c.gen_degree(cod_level);

    const auto& dom_basis = table.basis(dom_mon_deg);
    const auto& cod_basis = table.basis(cod_mon_deg);
    const int dom_gens = c.ranks[static_cast<std::size_t>(dom_level)];
    const int cod_gens = c.ranks[static_cast<std::size_t>(cod_level)];

    for (int g = 0; g < dom_gens; ++g)
        for (const Monomial& m : dom_basis) piece.domain_basis.emplace_back(g, m);
    for (int g = 0; g < cod_gens; ++g)
        for (const Monomial& m : cod_basis) piece.codomain_basis.emplace_back(g, m);

    piece.matrix.rows = static_cast<int>(piece.codomain_basis.size());
    piece.matrix.cols = static_cast<int>(piece.domain_basis.size());
    if (dom_mon_deg < 0 || piece.matrix.cols == 0) return piece;

    const int dom_block = static_cast<int>(dom_basis.size());
    const int cod_block = static_cast<int>(cod_basis.size());
    // entry columns are the domain side in both orientations
    for (const auto& e : c.differentials[static_cast<std::size_t>(n)]) {
        const int dom_gen = e.col;
        const int cod_gen = e.row;
        for (int mi = 0; mi < dom_block; ++mi) {
            const Monomial& m = dom_basis[static_cast<std::size_t>(mi)];
            const Monomial image = m.times_var(e.label);
            const int target = table.index_of(cod_mon_deg, image);
            if (target < 0) continue;  // product lands in the ideal
            piece.matrix.entries.push_back(
                {cod_gen * cod_block + target, dom_gen * dom_block + mi, e.sign});
        }
    }
    return piece;
}

long graded_dim(const FreeComplex& c, int level, int t, const BasisTable& table) {
    const int mon_deg = t - c.gen_degree(level);
    if (mon_deg < 0) return 0;
    return static_cast<long>(c.ranks[static_cast<std::size_t>(level)]) * table.dim(mon_deg);
}

namespace {

int matrix_rank_at(const FreeComplex& c, int n, int t, const FieldChoice& field,
                   const BasisTable& table) {
    if (n < 1 || n > c.length()) return 0;
    return rank(graded_piece(c, n, t, table).matrix, field);
}

/// Matrix indices adjacent to a position: the map out of level p and into it.
std::pair<int, int> adjacent_matrices(const FreeComplex& c, int position) {
    if (c.orientation == Orientation::Primal) return {position, position + 1};
    return {position + 1, position};
}

}  // namespace

int homology_dim(const FreeComplex& c, int position, int t, const FieldChoice& field,
                 const BasisTable& table) {
    if (position < 0 || position > c.length())
        throw InvalidInputError("position out of range 0.." + std::to_string(c.length()));
    const auto [out_idx, in_idx] = adjacent_matrices(c, position);
    const long dim = graded_dim(c, position, t, table);
    const int rank_out = matrix_rank_at(c, out_idx, t, field, table);
    const int rank_in = matrix_rank_at(c, in_idx, t, field, table);
    return static_cast<int>(dim) - rank_out - rank_in;
}

ExactnessReport exactness_report(const FreeComplex& c, int T, const FieldChoice& field) {
    const int L = c.length();
    if (L < 1) throw InvalidInputError("complex has no differentials");
    ExactnessReport rep;
    rep.L = L;
    rep.T = T;
    rep.field = field;
    rep.truncation_note = "position " + std::to_string(L) +
                          " not assessable: the build is truncated before differential " +
                          std::to_string(L + 1);

    BasisTable table(c.spec);
    int max_mon = 0;
    for (int n = 1; n <= L; ++n)
        for (int lv : {c.matrix_domain_level(n), c.matrix_codomain_level(n)})
            max_mon = std::max(max_mon, T - c.gen_degree(lv));
    table.ensure(std::max(max_mon, T) + 1);

    // rank grid over every graded piece of every differential
    std::vector<std::vector<int>> rank_grid(static_cast<std::size_t>(L) + 2,
                                            std::vector<int>(static_cast<std::size_t>(T) + 1, 0));
    std::vector<std::pair<int, int>> jobs;
    for (int n = 1; n <= L; ++n)
        for (int t = 0; t <= T; ++t) jobs.emplace_back(n, t);
    parallel_for(jobs.size(), [&](std::size_t i) {
        const auto [n, t] = jobs[i];
        rank_grid[static_cast<std::size_t>(n)][static_cast<std::size_t>(t)] =
            matrix_rank_at(c, n, t, field, table);
    });

    rep.consistent = true;
    for (int p = 0; p <= L - 1; ++p) {
        for (int t = 0; t <= T; ++t) {
            const auto [out_idx, in_idx] = adjacent_matrices(c, p);
            const long dim = graded_dim(c, p, t, table);
            const long r_out =
                out_idx >= 1 && out_idx <= L
                    ? rank_grid[static_cast<std::size_t>(out_idx)][static_cast<std::size_t>(t)]
                    : 0;
            const long r_in =
                in_idx >= 1 && in_idx <= L
                    ? rank_grid[static_cast<std::size_t>(in_idx)][static_cast<std::size_t>(t)]
                    : 0;
            const long h = dim - r_out - r_in;
            rep.rows.push_back({p, t, dim, r_out, r_in, h});
            if (p >= 1 && h != 0) rep.consistent = false;
        }
    }
    return rep;
}

std::string ExactnessReport::to_tsv() const {
    std::ostringstream os;
    os << "n\tt\tdim_domain\trank_dn\trank_dn1\thomology_dim\n";
    for (const auto& r : rows)
        os << r.n << '\t' << r.t << '\t' << r.dim_domain << '\t' << r.rank_dn << '\t' << r.rank_dn1
           << '\t' << r.homology_dim << '\n';
    return os.str();
}

std::string ExactnessReport::to_json() const {
    nlohmann::json j;
    j["L"] = L;
    j["T"] = T;
    j["field"] = field.to_string();
    j["consistent"] = consistent;
    j["truncation_note"] = truncation_note;
    j["rows"] = nlohmann::json::array();
    for (const auto& r : rows)
        j["rows"].push_back({{"n", r.n},
                             {"t", r.t},
                             {"dim_domain", r.dim_domain},
                             {"rank_dn", r.rank_dn},
                             {"rank_dn1", r.rank_dn1},
                             {"homology_dim", r.homology_dim}});
    return j.dump(2) + "\n";
}

bool h0_check(const FreeComplex& c, int T, const FieldChoice& field) {
    if (c.orientation != Orientation::Primal)
        throw InvalidInputError("h0_check applies to primal complexes");
    BasisTable table(c.spec);
    table.ensure(T + 1);
    for (int t = 0; t <= T; ++t) {
        const int h0 = homology_dim(c, 0, t, field, table);
        int expected = 0;
        for (const Monomial& m : table.basis(t))
            if (m.exponent(c.initial_label) == 0) ++expected;
        if (h0 != expected) return false;
    }
    return true;
}

void hunt_case(const RingSpec& spec, int initial, int levels, int max_degree,
               const FieldChoice& field, std::vector<HuntAnomaly>& out) {
    FreeComplex c;
    try {
        c = from_diagram(build_diagram(spec, initial, levels));
    } catch (const SignConflictError& e) {
        out.push_back({spec, initial, "sign_conflict", 0, 0, 0, e.cycle});
        return;
    } catch (const InternalConsistencyError& e) {
        out.push_back({spec, initial, "internal", 0, 0, 0, e.what()});
        return;
    }
    const ExactnessReport rep = exactness_report(c, max_degree, field);
    for (const auto& row : rep.rows)
        if (row.n >= 1 && row.homology_dim != 0)
            out.push_back({spec, initial, "nonzero_homology", row.n, row.t, row.homology_dim, ""});
}

HuntResult conjecture_hunt(int max_vars, int levels, int max_degree, const FieldChoice& field) {
    if (max_vars < 1 || max_vars > 4)
        throw InvalidInputError("hunt supports 1..4 variables (got " + std::to_string(max_vars) +
                                ")");
    struct Job {
        RingSpec spec;
        std::vector<int> initials;
    };
    std::vector<Job> jobs;
    for (int n = 1; n <= max_vars; ++n) {
        std::vector<std::pair<int, int>> pairs;
        for (int i = 1; i <= n; ++i)
            for (int j = i; j <= n; ++j) pairs.emplace_back(i, j);
        const std::size_t m = pairs.size();
        for (std::size_t mask = 1; mask < (1u << m); ++mask) {
            std::vector<std::pair<int, int>> gens;
            for (std::size_t b = 0; b < m; ++b)
                if (mask & (1u << b)) gens.push_back(pairs[b]);
            Job job;
            job.spec = normalize_spec(std::move(gens), n);
            std::vector<bool> used(static_cast<std::size_t>(n) + 1, false);
            for (const auto& [i, j] : job.spec.generators) used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
            for (int i = 1; i <= n; ++i)
                if (used[static_cast<std::size_t>(i)]) job.initials.push_back(i);
            jobs.push_back(std::move(job));
        }
    }

    std::vector<std::vector<HuntAnomaly>> per_job(jobs.size());
    parallel_for(jobs.size(), [&](std::size_t i) {
        for (int initial : jobs[i].initials)
            hunt_case(jobs[i].spec, initial, levels, max_degree, field, per_job[i]);
    });

    HuntResult result;
    for (std::size_t i = 0; i < jobs.size(); ++i) {
        result.cases += static_cast<long>(jobs[i].initials.size());
        for (auto& a : per_job[i]) result.anomalies.push_back(std::move(a));
    }
    return result;
}

}  // namespace quadres
