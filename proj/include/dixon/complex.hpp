#pragma once

// The complexes Gamma_p(n): vertices are p-tuples over [n], faces are chains
// that increase strictly in every coordinate. Delta(n) is Gamma_3(n).

#include "dixon/integer.hpp"

#include <algorithm>
#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

namespace dixon {

struct ComplexParams {
    int p = 3;
    int n = 1;

    friend bool operator==(const ComplexParams&, const ComplexParams&) = default;
};

inline ComplexParams make_complex(int p, int n)
{
    if (p < 1)
        throw DomainError("tuple arity p must be at least 1, got " + std::to_string(p));
    if (n < 1)
        throw DomainError("index bound n must be at least 1, got " + std::to_string(n));
    return ComplexParams{p, n};
}

struct Vertex {
    std::vector<int> coords;

    Vertex() = default;
    Vertex(std::initializer_list<int> values) : coords(values) {}
    explicit Vertex(std::vector<int> values) : coords(std::move(values)) {}
    explicit Vertex(std::span<const int> values) : coords(values.begin(), values.end()) {}

    std::size_t arity() const { return coords.size(); }
    int operator[](std::size_t a) const { return coords[a]; }

    friend bool operator==(const Vertex&, const Vertex&) = default;
    friend auto operator<=>(const Vertex&, const Vertex&) = default;
};

/// A face stored in normal form: vertices sorted by first coordinate, kept as
/// one flat coordinate array (which is exactly its sigma-word).
class Face {
public:
    Face() = default;
    explicit Face(int arity) : arity_(arity) {}
    Face(int arity, std::vector<int> flat) : arity_(arity), flat_(std::move(flat)) {}
    Face(int arity, std::initializer_list<Vertex> vertices) : arity_(arity)
    {
        std::vector<Vertex> sorted(vertices);
        std::sort(sorted.begin(), sorted.end());
        for (const auto& v : sorted)
            flat_.insert(flat_.end(), v.coords.begin(), v.coords.end());
    }

    int arity() const { return arity_; }
    std::size_t size() const { return arity_ == 0 ? 0 : flat_.size() / static_cast<std::size_t>(arity_); }
    bool empty() const { return flat_.empty(); }
    int dimension() const { return static_cast<int>(size()) - 1; }

    std::span<const int> coords(std::size_t l) const
    {
        return {flat_.data() + l * static_cast<std::size_t>(arity_), static_cast<std::size_t>(arity_)};
    }
    int coord(std::size_t l, std::size_t a) const { return flat_[l * static_cast<std::size_t>(arity_) + a]; }
    Vertex vertex(std::size_t l) const { return Vertex(coords(l)); }
    std::vector<Vertex> vertices() const
    {
        std::vector<Vertex> out;
        out.reserve(size());
        for (std::size_t l = 0; l < size(); ++l)
            out.push_back(vertex(l));
        return out;
    }

    const std::vector<int>& flat() const { return flat_; }

    /// Position of a vertex in this face, or size() when absent.
    std::size_t find(std::span<const int> v) const
    {
        std::size_t lo = 0, hi = size();
        while (lo < hi) {
            std::size_t mid = (lo + hi) / 2;
            if (coord(mid, 0) < v[0])
                lo = mid + 1;
            else
                hi = mid;
        }
        if (lo < size() && std::equal(v.begin(), v.end(), coords(lo).begin()))
            return lo;
        return size();
    }
    bool contains(std::span<const int> v) const { return find(v) != size(); }
    bool contains(const Vertex& v) const { return contains(std::span<const int>(v.coords)); }

    /// True when every vertex of this face is a vertex of `other`.
    bool subset_of(const Face& other) const
    {
        for (std::size_t l = 0; l < size(); ++l)
            if (!other.contains(coords(l)))
                return false;
        return true;
    }

    Face without(std::size_t l) const
    {
        std::vector<int> flat;
        flat.reserve(flat_.size() - static_cast<std::size_t>(arity_));
        auto first = flat_.begin() + static_cast<std::ptrdiff_t>(l * static_cast<std::size_t>(arity_));
        flat.insert(flat.end(), flat_.begin(), first);
        flat.insert(flat.end(), first + arity_, flat_.end());
        return Face(arity_, std::move(flat));
    }

    /// Inserts a vertex at the position given by its first coordinate.
    Face with(const Vertex& v) const
    {
        std::size_t at = 0;
        while (at < size() && coord(at, 0) < v[0])
            ++at;
        std::vector<int> flat(flat_);
        flat.insert(flat.begin() + static_cast<std::ptrdiff_t>(at * static_cast<std::size_t>(arity_)),
                    v.coords.begin(), v.coords.end());
        return Face(arity_, std::move(flat));
    }

    Face replaced(std::size_t l, const Vertex& v) const { return without(l).with(v); }

    friend bool operator==(const Face&, const Face&) = default;

private:
    int arity_ = 0;
    std::vector<int> flat_;
};

struct FaceHash {
    std::size_t operator()(const Face& f) const noexcept
    {
        std::size_t h = static_cast<std::size_t>(f.arity()) * 0x9e3779b97f4a7c15ULL;
        for (int c : f.flat())
            h = (h ^ static_cast<std::size_t>(c)) * 0x100000001b3ULL;
        return h;
    }
};

namespace detail {

inline void check_vertex(const ComplexParams& params, std::span<const int> v)
{
    if (static_cast<int>(v.size()) != params.p)
        throw DomainError("vertex arity " + std::to_string(v.size()) + " does not match p = " +
                          std::to_string(params.p));
    for (int c : v)
        if (c < 1 || c > params.n)
            throw DomainError("coordinate " + std::to_string(c) + " outside [1, " +
                              std::to_string(params.n) + "]");
}

/// Strict increase in every coordinate from `lower` to `upper`.
inline bool strictly_below(std::span<const int> lower, std::span<const int> upper)
{
    for (std::size_t a = 0; a < lower.size(); ++a)
        if (lower[a] >= upper[a])
            return false;
    return true;
}

} // namespace detail

inline bool is_face(const ComplexParams& params, std::vector<Vertex> candidate)
{
    for (const auto& v : candidate)
        detail::check_vertex(params, v.coords);
    std::sort(candidate.begin(), candidate.end());
    for (std::size_t l = 0; l + 1 < candidate.size(); ++l)
        if (!detail::strictly_below(candidate[l].coords, candidate[l + 1].coords))
            return false;
    return true;
}

/// Checks that a stored face is in normal form and belongs to Gamma_p(n).
inline bool is_face(const ComplexParams& params, const Face& face)
{
    if (face.arity() != params.p)
        return false;
    for (std::size_t l = 0; l < face.size(); ++l) {
        for (int c : face.coords(l))
            if (c < 1 || c > params.n)
                return false;
        if (l > 0 && !detail::strictly_below(face.coords(l - 1), face.coords(l)))
            return false;
    }
    return true;
}

/// Visits every face of dimension `dim` exactly once, in lexicographic order
/// of the sigma-word. Dimensions outside [-1, n-1] visit nothing.
template <class Visitor>
void for_each_face(const ComplexParams& params, int dim, Visitor&& visit)
{
    if (dim < -1 || dim > params.n - 1)
        return;
    const int r = dim + 1;
    const int p = params.p;
    std::vector<int> flat(static_cast<std::size_t>(r * p));
    if (r == 0) {
        visit(Face(p));
        return;
    }

    // Vertex l takes coordinates in [prev + 1, n - (r - 1 - l)].
    std::function<void(int)> place = [&](int l) {
        if (l == r) {
            visit(Face(p, flat));
            return;
        }
        const int upper = params.n - (r - 1 - l);
        int* v = flat.data() + l * p;
        const int* prev = l > 0 ? flat.data() + (l - 1) * p : nullptr;
        auto lower = [&](int a) { return prev ? prev[a] + 1 : 1; };
        for (int a = 0; a < p; ++a) {
            v[a] = lower(a);
            if (v[a] > upper)
                return;
        }
        while (true) {
            place(l + 1);
            int a = p - 1;
            while (a >= 0 && v[a] == upper) {
                v[a] = lower(a);
                --a;
            }
            if (a < 0)
                return;
            ++v[a];
        }
    };
    place(0);
}

inline std::vector<Face> enumerate_faces(const ComplexParams& params, int dim)
{
    std::vector<Face> out;
    for_each_face(params, dim, [&](const Face& f) { out.push_back(f); });
    return out;
}

/// Reduced face counts, indexed from dimension -1.
struct FVector {
    std::vector<Integer> counts;

    int max_dimension() const { return static_cast<int>(counts.size()) - 2; }
    const Integer& at(int dim) const { return counts.at(static_cast<std::size_t>(dim + 1)); }

    friend bool operator==(const FVector&, const FVector&) = default;
};

inline FVector f_vector_formula(const ComplexParams& params)
{
    FVector f;
    for (int s = 0; s <= params.n; ++s)
        f.counts.push_back(power(binomial(params.n, s), static_cast<unsigned>(params.p)));
    return f;
}

inline constexpr std::uint64_t default_face_budget = 100'000'000;

inline FVector f_vector_enumerated(const ComplexParams& params,
                                   std::uint64_t budget = default_face_budget)
{
    const FVector formula = f_vector_formula(params);
    Integer total = 0;
    for (int dim = -1; dim <= params.n - 1; ++dim) {
        total += formula.at(dim);
        if (total > budget)
            throw ResourceError("face enumeration budget " + std::to_string(budget) +
                                " exceeded at dimension " + std::to_string(dim));
    }
    FVector f;
    for (int dim = -1; dim <= params.n - 1; ++dim) {
        std::uint64_t count = 0;
        for_each_face(params, dim, [&](const Face&) { ++count; });
        f.counts.emplace_back(count);
    }
    return f;
}

inline Integer reduced_euler_characteristic(const FVector& f)
{
    Integer chi = 0;
    for (int dim = -1; dim <= f.max_dimension(); ++dim)
        chi += sign_power(dim) * f.at(dim);
    return chi;
}

} // namespace dixon
