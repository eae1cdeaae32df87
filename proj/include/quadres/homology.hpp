#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "quadres/complex.hpp"
#include "quadres/linalg.hpp"
#include "quadres/ring.hpp"

namespace quadres {

/// Monomial bases of R by degree, with index lookup. Fill with ensure() up
/// front; afterwards reads are const and safe to share across threads.
class BasisTable {
public:
    explicit BasisTable(RingSpec spec) : spec_(std::move(spec)) {}
    void ensure(int degree);
    const std::vector<Monomial>& basis(int degree) const;  // empty for degree < 0
    int index_of(int degree, const Monomial& m) const;     // -1 if not admissible
    int dim(int degree) const { return static_cast<int>(basis(degree).size()); }
    const RingSpec& spec() const { return spec_; }

private:
    RingSpec spec_;
    std::vector<std::vector<Monomial>> by_degree_;
    std::vector<std::map<Monomial, int>> index_;
    static const std::vector<Monomial> empty_;
};

/// The k-linear piece of matrix n in internal degree t. Domain basis pairs are
/// (generator index, monomial), generator-major, monomials in basis order.
struct GradedPiece {
    int matrix_index = 0;
    int degree = 0;
    std::vector<std::pair<int, Monomial>> domain_basis;
    std::vector<std::pair<int, Monomial>> codomain_basis;
    SparseIntMatrix matrix;  // entries in {-1, +1}
};

GradedPiece graded_piece(const FreeComplex& c, int n, int t, const BasisTable& table);

/// Dimension of the degree-t piece of the free module at the given level.
long graded_dim(const FreeComplex& c, int level, int t, const BasisTable& table);

/// Homology dimension at a position p of the complex in internal degree t:
/// dim of the level-p piece minus the ranks of the two adjacent graded maps.
/// Missing boundary matrices (p = 0, or p = L where no d_{L+1} exists) count
/// as rank 0; position L therefore reports plain cycles, which is why reports
/// mark it not assessable.
int homology_dim(const FreeComplex& c, int position, int t, const FieldChoice& field,
                 const BasisTable& table);

struct ExactnessRow {
    int n = 0;
    int t = 0;
    long dim_domain = 0;
    long rank_dn = 0;
    long rank_dn1 = 0;
    long homology_dim = 0;
};

struct ExactnessReport {
    int L = 0;
    int T = 0;
    FieldChoice field;
    std::vector<ExactnessRow> rows;  // n = 0..L-1 outer, t = 0..T inner
    bool consistent = false;         // H_n(t) == 0 for all 1 <= n <= L-1, t <= T
    std::string truncation_note;

    std::string to_tsv() const;
    std::string to_json() const;
};

ExactnessReport exactness_report(const FreeComplex& c, int T, const FieldChoice& field);

/// H_0(t) must match the admissible-monomial count of R/(x_init) for t <= T.
bool h0_check(const FreeComplex& c, int T, const FieldChoice& field);

struct HuntAnomaly {
    RingSpec spec;
    int initial = 0;
    std::string kind;   // "nonzero_homology" | "sign_conflict" | "internal"
    int n = 0;
    int t = 0;
    long value = 0;
    std::string detail;
};

struct HuntResult {
    long cases = 0;  // (spec, initial) pairs examined
    std::vector<HuntAnomaly> anomalies;
};

/// Exactness result for one (spec, initial) case; anomalies appended to out.
void hunt_case(const RingSpec& spec, int initial, int levels, int max_degree,
               const FieldChoice& field, std::vector<HuntAnomaly>& out);

/// Iterate every ring spec with 1..max_vars variables and every nonempty
/// generator subset, every valid initial label; report any nonzero H_n(t)
/// with 1 <= n <= L-1, t <= max_degree. max_vars is capped at 4.
HuntResult conjecture_hunt(int max_vars, int levels, int max_degree, const FieldChoice& field);

}  // namespace quadres
