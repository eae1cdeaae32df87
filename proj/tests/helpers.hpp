#pragma once

#include <random>
#include <vector>

#include <gmpxx.h>

#include "quadres/oracles.hpp"
#include "quadres/ring.hpp"

namespace helpers {

inline quadres::RingSpec fib_ring() { return quadres::oracle_ring(quadres::OracleKind::fibonacci()); }
inline quadres::RingSpec bin_ring() { return quadres::oracle_ring(quadres::OracleKind::binary()); }
inline quadres::RingSpec o_ring(int n) {
    return quadres::oracle_ring(quadres::OracleKind::o_family(n));
}

inline std::vector<quadres::RingSpec> fixture_rings() {
    return {fib_ring(), bin_ring(), o_ring(2), o_ring(3), o_ring(4)};
}

/// Every exponent vector of the given total degree, by a plain odometer,
/// an independent path from the library's recursive generator.
inline std::vector<std::vector<int>> all_exponent_vectors(int num_vars, int degree) {
    std::vector<std::vector<int>> out;
    std::vector<int> v(static_cast<std::size_t>(num_vars), 0);
    v[0] = degree;
    for (;;) {
        out.push_back(v);
        // next composition in descending-lex order
        int k = num_vars - 2;
        while (k >= 0 && v[static_cast<std::size_t>(k)] == 0) --k;
        if (k < 0) break;
        v[static_cast<std::size_t>(k)] -= 1;
        int tail = 1;
        for (int i = k + 1; i < num_vars; ++i) {
            tail += v[static_cast<std::size_t>(i)];
            v[static_cast<std::size_t>(i)] = 0;
        }
        v[static_cast<std::size_t>(k + 1)] = tail;
    }
    return out;
}

/// Direct divisibility filter, not sharing code with is_admissible.
inline bool divisible_by_some_generator(const quadres::RingSpec& spec, const std::vector<int>& e) {
    for (const auto& [i, j] : spec.generators) {
        const int ei = e[static_cast<std::size_t>(i - 1)];
        const int ej = e[static_cast<std::size_t>(j - 1)];
        if (i == j ? ei >= 2 : (ei >= 1 && ej >= 1)) return true;
    }
    return false;
}

inline int brute_force_basis_count(const quadres::RingSpec& spec, int degree) {
    int count = 0;
    for (const auto& e : all_exponent_vectors(spec.num_vars, degree))
        if (!divisible_by_some_generator(spec, e)) ++count;
    return count;
}

/// Admissible monomials of the given degree avoiding variable `skip`: the
/// model of R/(x_skip) used to pin H_0 expectations.
inline int quotient_monomial_count(const quadres::RingSpec& spec, int skip, int degree) {
    int count = 0;
    for (const auto& e : all_exponent_vectors(spec.num_vars, degree))
        if (e[static_cast<std::size_t>(skip - 1)] == 0 && !divisible_by_some_generator(spec, e))
            ++count;
    return count;
}

/// Dense row-echelon rank over Q, the reference for the sparse routines.
inline int dense_rank_oracle(std::vector<std::vector<mpq_class>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[pivot], m[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            const mpq_class f = m[r][c] / m[rank][c];
            for (std::size_t k = c; k < cols; ++k) m[r][k] -= f * m[rank][k];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

inline int dense_rank_oracle_mod_p(std::vector<std::vector<mpq_class>> m, unsigned p) {
    // reduce every (integral) entry mod p, then echelon over F_p via rationals-free longs
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::vector<std::vector<long>> a(rows, std::vector<long>(cols, 0));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            mpz_class num = m[r][c].get_num(), den = m[r][c].get_den();
            if (den != 1) throw std::runtime_error("mod-p oracle expects integer entries");
            a[r][c] = static_cast<long>(mpz_class(num % static_cast<long>(p)).get_si());
            if (a[r][c] < 0) a[r][c] += static_cast<long>(p);
        }
    auto inv = [&](long x) {
        long acc = 1, base = x, e = static_cast<long>(p) - 2;
        while (e) {
            if (e & 1) acc = acc * base % static_cast<long>(p);
            base = base * base % static_cast<long>(p);
            e >>= 1;
        }
        return acc;
    };
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[pivot], a[rank]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || a[r][c] == 0) continue;
            const long f = a[r][c] * inv(a[rank][c]) % static_cast<long>(p);
            for (std::size_t k = c; k < cols; ++k) {
                a[r][k] = (a[r][k] - f * a[rank][k]) % static_cast<long>(p);
                if (a[r][k] < 0) a[r][k] += static_cast<long>(p);
            }
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

/// Uniformly random spec: 1..max_vars variables, nonempty generator subset.
inline quadres::RingSpec random_spec(std::mt19937& rng, int max_vars) {
    std::uniform_int_distribution<int> nd(1, max_vars);
    const int n = nd(rng);
    std::vector<std::pair<int, int>> pairs;
    for (int i = 1; i <= n; ++i)
        for (int j = i; j <= n; ++j) pairs.emplace_back(i, j);
    std::vector<std::pair<int, int>> chosen;
    while (chosen.empty()) {
        chosen.clear();
        for (const auto& p : pairs)
            if (std::uniform_int_distribution<int>(0, 1)(rng)) chosen.push_back(p);
    }
    return quadres::normalize_spec(chosen, n);
}

inline std::vector<int> valid_initials(const quadres::RingSpec& spec) {
    std::vector<bool> used(static_cast<std::size_t>(spec.num_vars) + 1, false);
    for (const auto& [i, j] : spec.generators)
        used[static_cast<std::size_t>(i)] = used[static_cast<std::size_t>(j)] = true;
    std::vector<int> out;
    for (int i = 1; i <= spec.num_vars; ++i)
        if (used[static_cast<std::size_t>(i)]) out.push_back(i);
    return out;
}

}  // namespace helpers
