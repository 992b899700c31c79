#pragma once

// Generating functions for shift-vector columns of homology facets, and the
// MacMahon Master Theorem coefficient equality.

#include "dixon/series.hpp"

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace dixon {

namespace detail {

inline MSeries var(int T, int which) { return MSeries::variable(3, T, which); }
inline MSeries one(int T) { return MSeries::constant(3, T, 1); }

/// 1 / (1 - x_which)
inline MSeries geometric(int T, int which) { return (one(T) - var(T, which)).invert_unit(); }

} // namespace detail

/// x y^2 z^2 / ((1-y)(1-z)): first entry 1, the other two at least 2.
inline MSeries series_f(int T)
{
    const std::array<int, 3> e{1, 2, 2};
    return MSeries::monomial(3, T, e) * detail::geometric(T, 1) * detail::geometric(T, 2);
}

/// x y z^2 / (1-z): first two entries 1, the last at least 2.
inline MSeries series_h(int T)
{
    const std::array<int, 3> e{1, 1, 2};
    return MSeries::monomial(3, T, e) * detail::geometric(T, 2);
}

/// f(x,y,z)+f(y,x,z)+f(z,y,x)+h(x,y,z)+h(x,z,y)+h(z,y,x).
inline MSeries series_P_from_cases(int T)
{
    const MSeries f = series_f(T);
    const MSeries h = series_h(T);
    const std::array<int, 3> id{0, 1, 2}, swap_xy{1, 0, 2}, swap_xz{2, 1, 0}, swap_yz{0, 2, 1};
    return f.permuted(id) + f.permuted(swap_xy) + f.permuted(swap_xz) + h.permuted(id) + h.permuted(swap_yz) +
           h.permuted(swap_xz);
}

/// xyz((1-xyz)/((1-x)(1-y)(1-z)) - 1).
inline MSeries series_P_closed(int T)
{
    const std::array<int, 3> e{1, 1, 1};
    const MSeries xyz = MSeries::monomial(3, T, e);
    const MSeries inv = detail::geometric(T, 0) * detail::geometric(T, 1) * detail::geometric(T, 2);
    return xyz * ((detail::one(T) - xyz) * inv - detail::one(T));
}

/// Both constructions of P; throws if they ever differ.
inline MSeries series_P(int T)
{
    if (T < 2)
        throw PreconditionError("series P needs truncation at least 2");
    MSeries closed = series_P_closed(T);
    if (closed != series_P_from_cases(T))
        throw std::logic_error("the two constructions of P disagree at truncation " + std::to_string(T));
    return closed;
}

/// P^r: r independent shift-vector columns.
inline MSeries series_g_r(int r, int T)
{
    if (r < 1)
        throw PreconditionError("g_r needs r >= 1");
    if (T < 2 * r)
        throw PreconditionError("g_r needs truncation at least 2r");
    return series_P(T).pow(static_cast<unsigned>(r));
}

/// xyz / ((1-x)(1-y)(1-z) + xyz).
inline MSeries series_XY_closed(int T)
{
    const std::array<int, 3> e{1, 1, 1};
    const MSeries xyz = MSeries::monomial(3, T, e);
    const MSeries denom = (detail::one(T) - detail::var(T, 0)) * (detail::one(T) - detail::var(T, 1)) *
                              (detail::one(T) - detail::var(T, 2)) +
                          xyz;
    return xyz * denom.invert_unit();
}

/// (P + xyz) Σ_{r>=1} (-P)^{r-1}. P has degree at least 1 in every
/// variable, so powers beyond T vanish in the box.
inline MSeries series_XY_alternating(int T)
{
    const std::array<int, 3> e{1, 1, 1};
    const MSeries xyz = MSeries::monomial(3, T, e);
    const MSeries P = series_P_closed(T);
    const MSeries minus_P = -P;
    MSeries sum = detail::one(T);
    MSeries term = detail::one(T);
    for (int r = 2; r <= T + 1; ++r) {
        term *= minus_P;
        sum += term;
    }
    return (P + xyz) * sum;
}

inline MSeries series_XY(int T)
{
    if (T < 1)
        throw PreconditionError("series XY needs truncation at least 1");
    MSeries closed = series_XY_closed(T);
    if (closed != series_XY_alternating(T))
        throw std::logic_error("the two constructions of XY disagree at truncation " + std::to_string(T));
    return closed;
}

// ---------------------------------------------------------------------------
// Master Theorem

struct IntMatrix {
    std::vector<std::vector<Integer>> rows;

    IntMatrix(std::initializer_list<std::initializer_list<int>> init)
    {
        for (const auto& r : init)
            rows.emplace_back(r.begin(), r.end());
        check_square();
    }
    explicit IntMatrix(std::vector<std::vector<Integer>> values) : rows(std::move(values)) { check_square(); }

    std::size_t size() const { return rows.size(); }

    static IntMatrix identity(std::size_t m)
    {
        std::vector<std::vector<Integer>> v(m, std::vector<Integer>(m, 0));
        for (std::size_t i = 0; i < m; ++i)
            v[i][i] = 1;
        return IntMatrix(std::move(v));
    }

private:
    void check_square() const
    {
        for (const auto& r : rows)
            if (r.size() != rows.size())
                throw DomainError("matrix must be square");
    }
};

/// The two matrices whose master-theorem coefficients give the diagonal
/// of (x-y)^n (y-z)^n (z-x)^n.
inline IntMatrix dixon_matrix_A() { return {{1, -1, 0}, {0, 1, -1}, {-1, 0, 1}}; }
inline IntMatrix dixon_matrix_B() { return {{0, 1, -1}, {-1, 0, 1}, {1, -1, 0}}; }

namespace detail {

inline MSeries cofactor_det(const std::vector<std::vector<MSeries>>& m)
{
    const std::size_t size = m.size();
    if (size == 1)
        return m[0][0];
    MSeries det(m[0][0].num_vars(), m[0][0].truncation());
    for (std::size_t c = 0; c < size; ++c) {
        std::vector<std::vector<MSeries>> minor;
        for (std::size_t r = 1; r < size; ++r) {
            std::vector<MSeries> row;
            for (std::size_t cc = 0; cc < size; ++cc)
                if (cc != c)
                    row.push_back(m[r][cc]);
            minor.push_back(std::move(row));
        }
        MSeries term = m[0][c] * cofactor_det(minor);
        if (c % 2 == 0)
            det += term;
        else
            det -= term;
    }
    return det;
}

} // namespace detail

/// det(I - XA) with X = diag(x_1..x_m), by cofactor expansion.
inline MSeries det_I_minus_XA(const IntMatrix& a, int T)
{
    const int m = static_cast<int>(a.size());
    std::vector<std::vector<MSeries>> entries;
    for (int i = 0; i < m; ++i) {
        std::vector<MSeries> row;
        const MSeries xi = MSeries::variable(m, T, i);
        for (int j = 0; j < m; ++j) {
            MSeries e = (i == j) ? MSeries::constant(m, T, 1) : MSeries(m, T);
            e -= a.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * xi;
            row.push_back(std::move(e));
        }
        entries.push_back(std::move(row));
    }
    return detail::cofactor_det(entries);
}

/// Π_i (a_i1 x_1 + ... + a_im x_m)^{k_i}.
inline MSeries linear_form_product(const IntMatrix& a, std::span<const int> k, int T)
{
    const int m = static_cast<int>(a.size());
    MSeries product = MSeries::constant(m, T, 1);
    for (int i = 0; i < m; ++i) {
        MSeries form(m, T);
        for (int j = 0; j < m; ++j)
            form += a.rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] * MSeries::variable(m, T, j);
        product *= form.pow(static_cast<unsigned>(k[static_cast<std::size_t>(i)]));
    }
    return product;
}

struct MasterTheoremResult {
    Integer product_coefficient;
    Integer inverse_det_coefficient;

    bool holds() const { return product_coefficient == inverse_det_coefficient; }
};

inline MasterTheoremResult master_theorem(const IntMatrix& a, std::span<const int> k, int T)
{
    if (k.size() != a.size())
        throw DomainError("exponent vector length does not match the matrix size");
    for (int e : k)
        if (e > T || e < 0)
            throw PreconditionError("truncation must cover every exponent");
    MasterTheoremResult result;
    result.product_coefficient = linear_form_product(a, k, T).coefficient(k);
    result.inverse_det_coefficient = det_I_minus_XA(a, T).invert_unit().coefficient(k);
    return result;
}

inline bool master_theorem_check(const IntMatrix& a, std::span<const int> k, int T)
{
    return master_theorem(a, k, T).holds();
}

/// [x^n y^n z^n] (x-y)^n (y-z)^n (x-z)^n by direct expansion.
inline Integer dixon_diagonal_product(int n)
{
    const int T = n;
    const MSeries x = MSeries::variable(3, T, 0);
    const MSeries y = MSeries::variable(3, T, 1);
    const MSeries z = MSeries::variable(3, T, 2);
    const auto N = static_cast<unsigned>(n);
    const MSeries product = (x - y).pow(N) * (y - z).pow(N) * (x - z).pow(N);
    return product.coefficient({n, n, n});
}

} // namespace dixon
