#pragma once

// Reduced simplicial homology of Gamma_p(n) from boundary matrices.

#include "dixon/complex.hpp"
#include "dixon/shelling.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dixon {

/// Boundary map ∂_k from k-faces (columns) to (k-1)-faces (rows), both in
/// canonical enumeration order. Entries are ±1.
struct SparseBoundaryMatrix {
    using Entry = std::pair<std::uint32_t, int>;

    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<std::vector<Entry>> columns;

    std::size_t nonzeros() const
    {
        std::size_t nnz = 0;
        for (const auto& c : columns)
            nnz += c.size();
        return nnz;
    }
};

inline constexpr std::uint64_t default_matrix_budget = 4'000'000'000ULL;

/// Omitting vertex m (1-based) carries the sign (-1)^m. ∂_0 maps every vertex
/// onto the empty face.
inline SparseBoundaryMatrix boundary_matrix(const ComplexParams& params, int k,
                                            std::uint64_t budget = default_matrix_budget)
{
    if (k < 0 || k > params.n - 1)
        throw DomainError("boundary dimension " + std::to_string(k) + " outside [0, n-1]");
    const FVector f = f_vector_formula(params);
    if (f.at(k - 1) * f.at(k) > budget)
        throw ResourceError("boundary matrix of dimension " + std::to_string(k) + " exceeds budget " +
                            std::to_string(budget));

    std::unordered_map<Face, std::uint32_t, FaceHash> row_index;
    std::uint32_t next = 0;
    for_each_face(params, k - 1, [&](const Face& g) { row_index.emplace(g, next++); });

    SparseBoundaryMatrix m;
    m.rows = row_index.size();
    for_each_face(params, k, [&](const Face& g) {
        std::vector<SparseBoundaryMatrix::Entry> column;
        column.reserve(g.size());
        for (std::size_t l = 0; l < g.size(); ++l)
            column.emplace_back(row_index.at(g.without(l)), sign_power(static_cast<std::int64_t>(l) + 1));
        std::sort(column.begin(), column.end());
        m.columns.push_back(std::move(column));
    });
    m.cols = m.columns.size();
    return m;
}

/// True when ∂_k ∂_{k+1} is the zero matrix.
inline bool composite_is_zero(const SparseBoundaryMatrix& lower, const SparseBoundaryMatrix& upper)
{
    if (upper.rows != lower.cols)
        return false;
    std::unordered_map<std::uint32_t, long long> acc;
    for (const auto& col : upper.columns) {
        acc.clear();
        for (auto [mid, a] : col)
            for (auto [row, b] : lower.columns[mid])
                acc[row] += static_cast<long long>(a) * b;
        for (const auto& [row, value] : acc)
            if (value != 0)
                return false;
    }
    return true;
}

namespace detail {

struct Overflow {};

inline long long checked_mul(long long a, long long b)
{
    long long out;
    if (__builtin_mul_overflow(a, b, &out))
        throw Overflow{};
    return out;
}

inline long long checked_sub(long long a, long long b)
{
    long long out;
    if (__builtin_sub_overflow(a, b, &out))
        throw Overflow{};
    return out;
}

template <class Int>
Int mul(const Int& a, const Int& b)
{
    if constexpr (std::is_same_v<Int, long long>)
        return checked_mul(a, b);
    else
        return a * b;
}

template <class Int>
Int sub(const Int& a, const Int& b)
{
    if constexpr (std::is_same_v<Int, long long>)
        return checked_sub(a, b);
    else
        return a - b;
}

template <class Int>
Int abs_value(const Int& a)
{
    return a < 0 ? Int(-a) : a;
}

template <class Int>
Int gcd_value(Int a, Int b)
{
    a = abs_value(a);
    b = abs_value(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

/// Fraction-free column reduction: each column is reduced against earlier
/// pivot columns keyed by their lowest row, via col <- b*col - a*pivot, then
/// divided by the gcd of its entries. The number of pivots is the rank over Q.
template <class Int>
std::size_t rank_fraction_free(const SparseBoundaryMatrix& m)
{
    using Column = std::vector<std::pair<std::uint32_t, Int>>;
    std::vector<Column> pivots;
    std::unordered_map<std::uint32_t, std::size_t> pivot_of_row;
    Column work, merged;
    for (const auto& source : m.columns) {
        work.clear();
        for (auto [row, value] : source)
            work.emplace_back(row, Int(value));
        while (!work.empty()) {
            const auto low = work.back().first;
            auto it = pivot_of_row.find(low);
            if (it == pivot_of_row.end())
                break;
            const Column& pivot = pivots[it->second];
            const Int a = work.back().second;
            const Int b = pivot.back().second;
            merged.clear();
            std::size_t x = 0, y = 0;
            while (x < work.size() || y < pivot.size()) {
                if (y == pivot.size() || (x < work.size() && work[x].first < pivot[y].first)) {
                    merged.emplace_back(work[x].first, mul(b, work[x].second));
                    ++x;
                } else if (x == work.size() || pivot[y].first < work[x].first) {
                    merged.emplace_back(pivot[y].first, sub(Int(0), mul(a, pivot[y].second)));
                    ++y;
                } else {
                    Int v = sub(mul(b, work[x].second), mul(a, pivot[y].second));
                    if (v != 0)
                        merged.emplace_back(work[x].first, std::move(v));
                    ++x;
                    ++y;
                }
            }
            Int g = 0;
            for (const auto& e : merged)
                g = gcd_value(g, e.second);
            if (g > 1)
                for (auto& e : merged)
                    e.second /= g;
            std::swap(work, merged);
        }
        if (!work.empty()) {
            pivot_of_row.emplace(work.back().first, pivots.size());
            pivots.push_back(work);
        }
    }
    return pivots.size();
}

} // namespace detail

/// Exact rank over the rationals. Runs in 64-bit arithmetic and falls back to
/// arbitrary precision if an intermediate value overflows.
inline std::size_t rank(const SparseBoundaryMatrix& m)
{
    try {
        return detail::rank_fraction_free<long long>(m);
    } catch (const detail::Overflow&) {
        return detail::rank_fraction_free<Integer>(m);
    }
}

/// Same matrix with rows and columns relabelled by a seeded permutation.
inline SparseBoundaryMatrix shuffled(const SparseBoundaryMatrix& m, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::vector<std::uint32_t> row_perm(m.rows);
    std::iota(row_perm.begin(), row_perm.end(), 0u);
    std::shuffle(row_perm.begin(), row_perm.end(), rng);
    std::vector<std::size_t> col_perm(m.cols);
    std::iota(col_perm.begin(), col_perm.end(), std::size_t{0});
    std::shuffle(col_perm.begin(), col_perm.end(), rng);

    SparseBoundaryMatrix out;
    out.rows = m.rows;
    out.cols = m.cols;
    out.columns.resize(m.cols);
    for (std::size_t c = 0; c < m.cols; ++c) {
        auto& col = out.columns[col_perm[c]];
        for (auto [row, value] : m.columns[c])
            col.emplace_back(row_perm[row], value);
        std::sort(col.begin(), col.end());
    }
    return out;
}

/// β_k = f_k - rank ∂_k - rank ∂_{k+1}, reduced, from dimension -1 to n-1.
inline BettiVector betti_numbers(const ComplexParams& params, std::uint64_t budget = default_matrix_budget)
{
    const FVector f = f_vector_formula(params);
    std::vector<std::size_t> ranks(static_cast<std::size_t>(params.n) + 2, 0);
    // ranks[k + 1] = rank ∂_k; ∂_{-1} and ∂_n are zero.
    for (int k = 0; k <= params.n - 1; ++k)
        ranks[static_cast<std::size_t>(k) + 1] = rank(boundary_matrix(params, k, budget));
    BettiVector b;
    for (int dim = -1; dim <= params.n - 1; ++dim) {
        const auto idx = static_cast<std::size_t>(dim + 1);
        b.betti.push_back(f.at(dim) - ranks[idx] - ranks[idx + 1]);
    }
    return b;
}

inline bool verify_euler_poincare(const ComplexParams& params, std::uint64_t budget = default_matrix_budget)
{
    return reduced_euler_characteristic(f_vector_formula(params)) ==
           betti_numbers(params, budget).alternating_sum();
}

// ---------------------------------------------------------------------------
// Torsion check

/// Nonzero invariant factors of an integer matrix, by repeated min-pivot
/// reduction. Dense; intended for small matrices only.
inline std::vector<Integer> invariant_factors(std::vector<std::vector<Integer>> a)
{
    std::vector<Integer> factors;
    const std::size_t rows = a.size();
    const std::size_t cols = rows ? a[0].size() : 0;
    std::size_t t = 0;
    while (t < rows && t < cols) {
        // smallest nonzero magnitude in the trailing block
        std::size_t pr = rows, pc = cols;
        for (std::size_t i = t; i < rows; ++i)
            for (std::size_t j = t; j < cols; ++j)
                if (a[i][j] != 0 && (pr == rows || abs(a[i][j]) < abs(a[pr][pc]))) {
                    pr = i;
                    pc = j;
                }
        if (pr == rows)
            break;
        std::swap(a[t], a[pr]);
        for (auto& row : a)
            std::swap(row[t], row[pc]);
        bool clean = false;
        while (!clean) {
            clean = true;
            for (std::size_t i = t + 1; i < rows; ++i) {
                if (a[i][t] == 0)
                    continue;
                Integer q = a[i][t] / a[t][t];
                for (std::size_t j = t; j < cols; ++j)
                    a[i][j] -= q * a[t][j];
                if (a[i][t] != 0) {
                    std::swap(a[t], a[i]);
                    clean = false;
                }
            }
            for (std::size_t j = t + 1; j < cols; ++j) {
                if (a[t][j] == 0)
                    continue;
                Integer q = a[t][j] / a[t][t];
                for (std::size_t i = t; i < rows; ++i)
                    a[i][j] -= q * a[i][t];
                if (a[t][j] != 0) {
                    for (auto& row : a)
                        std::swap(row[t], row[j]);
                    clean = false;
                }
            }
            if (clean) {
                // pivot must divide the rest of the block
                for (std::size_t i = t + 1; i < rows && clean; ++i)
                    for (std::size_t j = t + 1; j < cols && clean; ++j)
                        if (a[i][j] % a[t][t] != 0) {
                            for (std::size_t jj = t; jj < cols; ++jj)
                                a[t][jj] += a[i][jj];
                            clean = false;
                        }
            }
        }
        factors.push_back(abs(a[t][t]));
        ++t;
    }
    return factors;
}

/// Integral homology is torsion-free iff every boundary matrix has only unit
/// invariant factors.
inline bool torsion_free(const ComplexParams& params)
{
    for (int k = 0; k <= params.n - 1; ++k) {
        const auto m = boundary_matrix(params, k);
        std::vector<std::vector<Integer>> dense(m.rows, std::vector<Integer>(m.cols, 0));
        for (std::size_t c = 0; c < m.cols; ++c)
            for (auto [row, value] : m.columns[c])
                dense[row][c] = value;
        for (const auto& d : invariant_factors(std::move(dense)))
            if (d != 1)
                return false;
    }
    return true;
}

/// Coordinate triplets, 1-based: a `%% rows cols nonzeros` header, then one
/// `row col value` line per entry in column-major order.
inline void write_triplets(std::ostream& out, const SparseBoundaryMatrix& m)
{
    out << "%% " << m.rows << ' ' << m.cols << ' ' << m.nonzeros() << '\n';
    for (std::size_t c = 0; c < m.cols; ++c)
        for (auto [row, value] : m.columns[c])
            out << row + 1 << ' ' << c + 1 << ' ' << value << '\n';
}

} // namespace dixon
