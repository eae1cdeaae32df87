#include "quadres/linalg.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include <gmpxx.h>

namespace quadres {

SparseIntMatrix SparseIntMatrix::from_dense(const std::vector<std::vector<int>>& dense) {
    SparseIntMatrix m;
    m.rows = static_cast<int>(dense.size());
    m.cols = m.rows == 0 ? 0 : static_cast<int>(dense[0].size());
    for (int r = 0; r < m.rows; ++r)
        for (int c = 0; c < m.cols; ++c)
            if (dense[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] != 0)
                m.entries.push_back({r, c, dense[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)]});
    return m;
}

namespace {

// Columns as sorted (row, coefficient) lists; the pivot of a column is its
// first nonzero row. A column owning pivot row r eliminates that row from
// every later column reaching it.

template <typename Coef>
using Column = std::vector<std::pair<int, Coef>>;

template <typename Coef, typename Embed>
std::vector<Column<Coef>> gather_columns(const SparseIntMatrix& m, Embed embed) {
    std::vector<std::map<int, Coef>> acc(static_cast<std::size_t>(m.cols));
    for (const auto& e : m.entries) {
        Coef v = embed(e.coef);
        auto& col = acc[static_cast<std::size_t>(e.col)];
        auto it = col.find(e.row);
        if (it == col.end())
            col.emplace(e.row, v);
        else
            it->second = it->second + v;
    }
    std::vector<Column<Coef>> cols(static_cast<std::size_t>(m.cols));
    for (int c = 0; c < m.cols; ++c)
        for (auto& [r, v] : acc[static_cast<std::size_t>(c)])
            if (!(v == Coef(0))) cols[static_cast<std::size_t>(c)].emplace_back(r, v);
    return cols;
}

struct FpOps {
    std::uint64_t p;
    std::uint64_t neg(std::uint64_t a) const { return a == 0 ? 0 : p - a; }
    std::uint64_t mul(std::uint64_t a, std::uint64_t b) const { return a * b % p; }
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const { return (a + b) % p; }
    std::uint64_t inv(std::uint64_t a) const {
        std::uint64_t acc = 1, e = p - 2;
        while (e) {
            if (e & 1) acc = mul(acc, a);
            a = mul(a, a);
            e >>= 1;
        }
        return acc;
    }
};

int rank_mod_p(const SparseIntMatrix& m, std::uint32_t p) {
    const FpOps F{p};
    auto cols = gather_columns<std::uint64_t>(m, [&](int c) -> std::uint64_t {
        long r = c % static_cast<long>(p);
        if (r < 0) r += p;
        return static_cast<std::uint64_t>(r);
    });
    for (auto& col : cols) {
        for (auto& [r, v] : col) v %= p;
        std::erase_if(col, [](const auto& e) { return e.second == 0; });
    }

    std::unordered_map<int, Column<std::uint64_t>> pivots;  // pivot row -> reduced column
    int rank_count = 0;
    Column<std::uint64_t> merged;
    for (auto& col : cols) {
        while (!col.empty()) {
            const int prow = col.front().first;
            auto it = pivots.find(prow);
            if (it == pivots.end()) {
                pivots.emplace(prow, std::move(col));
                ++rank_count;
                break;
            }
            // col -= (col[prow] / piv[prow]) * piv
            const auto& piv = it->second;
            const std::uint64_t factor = F.mul(col.front().second, F.inv(piv.front().second));
            merged.clear();
            auto a = col.begin();
            auto b = piv.begin();
            while (a != col.end() || b != piv.end()) {
                if (b == piv.end() || (a != col.end() && a->first < b->first)) {
                    merged.push_back(*a++);
                } else if (a == col.end() || b->first < a->first) {
                    merged.emplace_back(b->first, F.mul(F.neg(factor), b->second));
                    ++b;
                } else {
                    const std::uint64_t v = F.add(a->second, F.mul(F.neg(factor), b->second));
                    if (v != 0) merged.emplace_back(a->first, v);
                    ++a;
                    ++b;
                }
            }
            col.swap(merged);
        }
    }
    return rank_count;
}

void strip_content(Column<mpz_class>& col) {
    if (col.empty()) return;
    mpz_class g = 0;
    for (const auto& [r, v] : col) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), v.get_mpz_t());
        if (g == 1) return;
    }
    for (auto& [r, v] : col) v /= g;
}

int rank_rational(const SparseIntMatrix& m) {
    auto cols = gather_columns<mpz_class>(m, [](int c) { return mpz_class(c); });

    std::unordered_map<int, Column<mpz_class>> pivots;
    int rank_count = 0;
    Column<mpz_class> merged;
    for (auto& col : cols) {
        while (!col.empty()) {
            const int prow = col.front().first;
            auto it = pivots.find(prow);
            if (it == pivots.end()) {
                strip_content(col);
                pivots.emplace(prow, std::move(col));
                ++rank_count;
                break;
            }
            // fraction-free update: col <- piv_lead * col - col_lead * piv
            const auto& piv = it->second;
            const mpz_class piv_lead = piv.front().second;
            const mpz_class col_lead = col.front().second;
            merged.clear();
            auto a = col.begin();
            auto b = piv.begin();
            while (a != col.end() || b != piv.end()) {
                if (b == piv.end() || (a != col.end() && a->first < b->first)) {
                    merged.emplace_back(a->first, piv_lead * a->second);
                    ++a;
                } else if (a == col.end() || b->first < a->first) {
                    merged.emplace_back(b->first, -col_lead * b->second);
                    ++b;
                } else {
                    mpz_class v = piv_lead * a->second - col_lead * b->second;
                    if (v != 0) merged.emplace_back(a->first, std::move(v));
                    ++a;
                    ++b;
                }
            }
            col.swap(merged);
            strip_content(col);
        }
    }
    return rank_count;
}

}  // namespace

int rank(const SparseIntMatrix& m, const FieldChoice& field) {
    if (m.rows == 0 || m.cols == 0) return 0;
    return field.kind == FieldKind::Prime ? rank_mod_p(m, field.p) : rank_rational(m);
}

}  // namespace quadres
