#pragma once

#include "dixon/complex.hpp"

#include <algorithm>
#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace dixon {

/// The three facet conditions: last vertex reaches n (P1), first vertex
/// touches 1 (P2), and every consecutive step is tight somewhere (P3).
struct FacetCertificate {
    Face face;
    bool p1 = false;
    bool p2 = false;
    bool p3 = false;

    bool is_facet() const { return p1 && p2 && p3; }
};

inline FacetCertificate facet_certificate(const ComplexParams& params, const Face& face)
{
    if (face.empty())
        throw DomainError("facet certificate is undefined for the empty face");
    if (!is_face(params, face))
        throw DomainError("not a face of the complex");
    FacetCertificate cert{face};
    const std::size_t r = face.size();
    auto last = face.coords(r - 1);
    auto first = face.coords(0);
    cert.p1 = *std::max_element(last.begin(), last.end()) == params.n;
    cert.p2 = *std::min_element(first.begin(), first.end()) == 1;
    cert.p3 = true;
    for (std::size_t l = 0; l + 1 < r && cert.p3; ++l) {
        int gap = params.n;
        for (std::size_t a = 0; a < static_cast<std::size_t>(face.arity()); ++a)
            gap = std::min(gap, face.coord(l + 1, a) - face.coord(l, a));
        cert.p3 = gap == 1;
    }
    return cert;
}

inline bool is_facet(const ComplexParams& params, const Face& face)
{
    return !face.empty() && facet_certificate(params, face).is_facet();
}

/// Facet order: higher dimension first, then lexicographic sigma-word.
inline std::strong_ordering order_compare(const Face& lhs, const Face& rhs)
{
    if (lhs.size() != rhs.size())
        return rhs.size() <=> lhs.size();
    return lhs.flat() <=> rhs.flat();
}

struct OrderLess {
    bool operator()(const Face& lhs, const Face& rhs) const { return order_compare(lhs, rhs) < 0; }
};

/// Depth-first over chains that start at a vertex touching 1, step tightly
/// and stop at the first vertex touching n.
template <class Visitor>
void for_each_facet(const ComplexParams& params, Visitor&& visit)
{
    const int p = params.p;
    const int n = params.n;
    std::vector<int> flat;
    std::vector<int> v(static_cast<std::size_t>(p));

    std::function<void()> extend = [&]() {
        // copied: the recursive insert below may reallocate `flat`
        const std::vector<int> prev(flat.end() - p, flat.end());
        if (*std::max_element(prev.begin(), prev.end()) == n) {
            visit(Face(p, flat));
            return;
        }
        for (int a = 0; a < p; ++a)
            v[static_cast<std::size_t>(a)] = prev[static_cast<std::size_t>(a)] + 1;
        while (true) {
            int gap = n;
            for (int a = 0; a < p; ++a)
                gap = std::min(gap, v[static_cast<std::size_t>(a)] - prev[static_cast<std::size_t>(a)]);
            if (gap == 1) {
                const std::vector<int> saved = v;
                flat.insert(flat.end(), v.begin(), v.end());
                extend();
                flat.resize(flat.size() - static_cast<std::size_t>(p));
                v = saved;
            }
            int a = p - 1;
            while (a >= 0 && v[static_cast<std::size_t>(a)] == n) {
                v[static_cast<std::size_t>(a)] = prev[static_cast<std::size_t>(a)] + 1;
                --a;
            }
            if (a < 0)
                return;
            ++v[static_cast<std::size_t>(a)];
        }
    };

    std::vector<int> first(static_cast<std::size_t>(p), 1);
    while (true) {
        if (*std::min_element(first.begin(), first.end()) == 1) {
            flat = first;
            extend();
        }
        int a = p - 1;
        while (a >= 0 && first[static_cast<std::size_t>(a)] == n) {
            first[static_cast<std::size_t>(a)] = 1;
            --a;
        }
        if (a < 0)
            break;
        ++first[static_cast<std::size_t>(a)];
    }
}

inline constexpr std::uint64_t default_facet_budget = 20'000'000;

/// All facets, sorted by the facet order.
inline std::vector<Face> enumerate_facets(const ComplexParams& params,
                                          std::uint64_t budget = default_facet_budget)
{
    std::vector<Face> facets;
    for_each_facet(params, [&](const Face& f) {
        if (facets.size() >= budget)
            throw ResourceError("facet enumeration budget " + std::to_string(budget) + " exceeded");
        facets.push_back(f);
    });
    std::sort(facets.begin(), facets.end(), OrderLess{});
    return facets;
}

// ---------------------------------------------------------------------------
// Twists

/// Per-vertex coordinate positions that admit an up-twist (A) or a
/// down-twist (B). Positions, not values.
struct TwistSets {
    std::vector<std::vector<int>> a_sets;
    std::vector<std::vector<int>> b_sets;
};

inline TwistSets twist_sets(const ComplexParams& params, const Face& face)
{
    if (face.empty())
        throw DomainError("twist sets are undefined for the empty face");
    const std::size_t r = face.size();
    const std::size_t p = static_cast<std::size_t>(face.arity());
    TwistSets sets;
    sets.a_sets.resize(r);
    sets.b_sets.resize(r);
    for (std::size_t l = 0; l < r; ++l) {
        for (std::size_t a = 0; a < p; ++a) {
            const int value = face.coord(l, a);
            const bool up = (l + 1 < r) ? face.coord(l + 1, a) - value > 1 : value < params.n;
            const bool down = (l > 0) ? value - face.coord(l - 1, a) > 1 : value > 1;
            if (up)
                sets.a_sets[l].push_back(static_cast<int>(a));
            if (down)
                sets.b_sets[l].push_back(static_cast<int>(a));
        }
    }
    return sets;
}

/// Positions in B_l for a single vertex; cheaper than the full TwistSets.
inline std::vector<int> down_positions(const Face& face, std::size_t l)
{
    std::vector<int> out;
    for (std::size_t a = 0; a < static_cast<std::size_t>(face.arity()); ++a) {
        const int value = face.coord(l, a);
        if ((l > 0) ? value - face.coord(l - 1, a) > 1 : value > 1)
            out.push_back(static_cast<int>(a));
    }
    return out;
}

enum class TwistDirection { up, down };

/// Moves one coordinate of vertex `l` by one step. Requires `position` to be
/// in A_l (up) or B_l (down); the result is a face of the same complex.
inline Face apply_twist(const ComplexParams& params, const Face& face, std::size_t l, int position,
                        TwistDirection direction)
{
    if (l >= face.size() || position < 0 || position >= face.arity())
        throw PreconditionError("twist index out of range");
    const auto sets = twist_sets(params, face);
    const auto& allowed = direction == TwistDirection::up ? sets.a_sets[l] : sets.b_sets[l];
    if (std::find(allowed.begin(), allowed.end(), position) == allowed.end())
        throw PreconditionError("coordinate position " + std::to_string(position) +
                                " is not in the required twist set of vertex " + std::to_string(l));
    std::vector<int> flat = face.flat();
    flat[l * static_cast<std::size_t>(face.arity()) + static_cast<std::size_t>(position)] +=
        direction == TwistDirection::up ? 1 : -1;
    return Face(face.arity(), std::move(flat));
}

/// A twist is safe when the condition it could break survives: P2 for an up-twist of the
/// first vertex, P1 for a down-twist of the last, P3 at the touched junction otherwise.
inline bool is_safe_twist(const ComplexParams& params, const Face& facet, std::size_t l, int position,
                          TwistDirection direction)
{
    if (!is_facet(params, facet))
        throw PreconditionError("safe twists are defined for facets only");
    const Face twisted = apply_twist(params, facet, l, position, direction);
    const std::size_t r = facet.size();
    auto junction_tight = [&](std::size_t lower) {
        int gap = params.n;
        for (std::size_t a = 0; a < static_cast<std::size_t>(twisted.arity()); ++a)
            gap = std::min(gap, twisted.coord(lower + 1, a) - twisted.coord(lower, a));
        return gap == 1;
    };
    const auto cert = facet_certificate(params, twisted);
    if (direction == TwistDirection::up)
        return l == 0 ? cert.p2 : junction_tight(l - 1);
    return l + 1 == r ? cert.p1 : junction_tight(l);
}

// ---------------------------------------------------------------------------
// Shift vectors

/// One composition of n+1 per coordinate position: first value, consecutive
/// differences, then n+1 minus the last value.
struct ShiftVectors {
    std::vector<std::vector<int>> per_position;

    friend bool operator==(const ShiftVectors&, const ShiftVectors&) = default;
};

inline ShiftVectors shift_vectors(const ComplexParams& params, const Face& facet)
{
    if (!is_facet(params, facet))
        throw PreconditionError("shift vectors are defined for facets only");
    const std::size_t r = facet.size();
    ShiftVectors out;
    out.per_position.resize(static_cast<std::size_t>(facet.arity()));
    for (std::size_t a = 0; a < out.per_position.size(); ++a) {
        auto& lambda = out.per_position[a];
        int prev = 0;
        for (std::size_t l = 0; l < r; ++l) {
            lambda.push_back(facet.coord(l, a) - prev);
            prev = facet.coord(l, a);
        }
        lambda.push_back(params.n + 1 - prev);
    }
    return out;
}

/// Prefix sums of the shift vectors, dropping the closing entry.
inline Face face_from_shift_vectors(const ShiftVectors& shifts)
{
    const int p = static_cast<int>(shifts.per_position.size());
    if (p == 0 || shifts.per_position[0].empty())
        throw DomainError("shift vectors must be nonempty");
    const std::size_t r = shifts.per_position[0].size() - 1;
    std::vector<int> flat(r * static_cast<std::size_t>(p));
    for (std::size_t a = 0; a < static_cast<std::size_t>(p); ++a) {
        if (shifts.per_position[a].size() != r + 1)
            throw DomainError("shift vectors have unequal lengths");
        int sum = 0;
        for (std::size_t l = 0; l < r; ++l) {
            sum += shifts.per_position[a][l];
            flat[l * static_cast<std::size_t>(p) + a] = sum;
        }
    }
    return Face(p, std::move(flat));
}

} // namespace dixon
