#pragma once

// Lines up the diagonal of the XY generating function with signed homology
// facet counts of Delta(n), and follows the pinned offset through the master
// theorem to the closed form.

#include "dixon/genfun.hpp"
#include "dixon/identities.hpp"
#include "dixon/shelling.hpp"

#include <optional>
#include <vector>

namespace dixon {

/// Offset between the XY diagonal and the complex index, fixed by the
/// shift vectors summing to n+1.
inline constexpr int pinned_alignment_offset = 1;

struct AlignmentRow {
    int n = 0;
    Integer signed_count;          // Σ over homology facets of (-1)^(vertices)
    Integer vertex_signed_count;   // Σ over homology facets of (-1)^(vertices-1)
    std::vector<Integer> xy_diagonal; // XY at (n+δ)^3 for each candidate δ
};

struct AlignmentReport {
    int n_min = 2;
    int n_max = 2;
    std::vector<int> candidates;
    std::vector<AlignmentRow> rows;
    /// Offsets matching the shift-length signed counts for every n.
    std::vector<int> matching;
    /// Offsets matching the vertex-count signed counts for every n.
    std::vector<int> vertex_sign_matching;

    std::optional<int> delta() const
    {
        if (matching.size() != 1)
            return std::nullopt;
        return matching.front();
    }
};

inline AlignmentReport alignment_oracle(int n_max, int n_min = 2, std::vector<int> candidates = {-1, 0, 1, 2, 3})
{
    AlignmentReport report;
    report.n_min = n_min;
    report.n_max = n_max;
    report.candidates = candidates;
    int max_candidate = 0;
    for (int d : candidates)
        max_candidate = std::max(max_candidate, d);
    const MSeries xy = series_XY_closed(std::max(1, n_max + max_candidate));

    std::vector<bool> ok(candidates.size(), true), vertex_ok(candidates.size(), true);
    for (int n = n_min; n <= n_max; ++n) {
        AlignmentRow row;
        row.n = n;
        row.signed_count = alternating_homology_count(make_complex(3, n));
        row.vertex_signed_count = -row.signed_count;
        for (std::size_t c = 0; c < candidates.size(); ++c) {
            const int e = n + candidates[c];
            const Integer coeff = e >= 0 ? xy.coefficient({e, e, e}) : Integer(0);
            row.xy_diagonal.push_back(coeff);
            ok[c] = ok[c] && coeff == row.signed_count;
            vertex_ok[c] = vertex_ok[c] && coeff == row.vertex_signed_count;
        }
        report.rows.push_back(std::move(row));
    }
    for (std::size_t c = 0; c < candidates.size(); ++c) {
        if (ok[c])
            report.matching.push_back(candidates[c]);
        if (vertex_ok[c])
            report.vertex_sign_matching.push_back(candidates[c]);
    }
    return report;
}

/// Each link of the chain from the sum side to the closed form, for one n.
struct DixonChain {
    int n = 0;
    Integer lhs;                 // Σ (-1)^s C(n,s)^3
    Integer minus_euler;         // -χ̃(Δ(n)) from the face numbers
    Integer xy_coefficient;      // XY at (n+δ)^3
    Integer inverse_det_A;       // [x^n y^n z^n] 1/det(I - XA)
    Integer product_A;           // [x^n y^n z^n] Π (row_i(A)·x)^n
    Integer inverse_det_B;       // [x^n y^n z^n] 1/det(I - XB)
    Integer rhs;                 // closed form

    bool holds() const
    {
        return lhs == minus_euler && minus_euler == xy_coefficient && xy_coefficient == inverse_det_A &&
               inverse_det_A == product_A && product_A == inverse_det_B && inverse_det_B == rhs;
    }
};

inline DixonChain dixon_chain(int n, int delta = pinned_alignment_offset)
{
    DixonChain chain;
    chain.n = n;
    chain.lhs = dixon_lhs(n);
    chain.minus_euler = -reduced_euler_characteristic(f_vector_formula(make_complex(3, n)));
    const int e = n + delta;
    chain.xy_coefficient = e >= 0 ? series_XY_closed(std::max(e, 1)).coefficient({e, e, e}) : Integer(0);
    const std::array<int, 3> k{n, n, n};
    const int T = std::max(n, 1);
    chain.inverse_det_A = det_I_minus_XA(dixon_matrix_A(), T).invert_unit().coefficient(k);
    chain.product_A = linear_form_product(dixon_matrix_A(), k, T).coefficient(k);
    chain.inverse_det_B = det_I_minus_XA(dixon_matrix_B(), T).invert_unit().coefficient(k);
    chain.rhs = dixon_rhs(n);
    return chain;
}

} // namespace dixon
