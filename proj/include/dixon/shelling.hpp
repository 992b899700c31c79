#pragma once

// Facet order, the pairwise shelling test, and homology facets.

#include "dixon/facets.hpp"

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <thread>
#include <unordered_map>
#include <utility>
#include <vector>

namespace dixon {

struct SigmaWord {
    std::vector<int> seq;

    friend bool operator==(const SigmaWord&, const SigmaWord&) = default;
    friend auto operator<=>(const SigmaWord&, const SigmaWord&) = default;
};

inline SigmaWord sigma_word(const Face& face) { return SigmaWord{face.flat()}; }

inline Face face_from_sigma_word(int arity, const SigmaWord& word)
{
    if (arity < 1 || word.seq.size() % static_cast<std::size_t>(arity) != 0)
        throw DomainError("sigma-word length is not a multiple of the arity");
    return Face(arity, word.seq);
}

// ---------------------------------------------------------------------------
// Block partition

/// Shared vertices split into maximal runs of F_i, private vertices of F_i
/// and F_k split into maximal runs of their own facet.
struct BlockPartition {
    std::vector<std::vector<Vertex>> c_blocks;
    std::vector<std::vector<Vertex>> i_blocks;
    std::vector<std::vector<Vertex>> k_blocks;

    bool balanced() const { return i_blocks.size() == k_blocks.size(); }
};

namespace detail {

/// Maximal runs of consecutive vertices of `face` whose membership in `other`
/// equals `shared`.
inline std::vector<std::vector<Vertex>> runs(const Face& face, const Face& other, bool shared)
{
    std::vector<std::vector<Vertex>> blocks;
    bool open = false;
    for (std::size_t l = 0; l < face.size(); ++l) {
        if (other.contains(face.coords(l)) == shared) {
            if (!open)
                blocks.emplace_back();
            blocks.back().push_back(face.vertex(l));
            open = true;
        } else {
            open = false;
        }
    }
    return blocks;
}

} // namespace detail

inline BlockPartition block_partition(const Face& fi, const Face& fk)
{
    BlockPartition part;
    part.c_blocks = detail::runs(fi, fk, true);
    part.i_blocks = detail::runs(fi, fk, false);
    part.k_blocks = detail::runs(fk, fi, false);
    return part;
}

/// Same as above, and enforces equal private block counts when both inputs
/// are facets.
inline BlockPartition block_partition(const ComplexParams& params, const Face& fi, const Face& fk)
{
    BlockPartition part = block_partition(fi, fk);
    if (!part.balanced() && is_facet(params, fi) && is_facet(params, fk))
        throw std::logic_error("private block counts differ for two facets (" +
                               std::to_string(part.i_blocks.size()) + " vs " +
                               std::to_string(part.k_blocks.size()) + ")");
    return part;
}

// ---------------------------------------------------------------------------
// Indexed facet list

/// A facet list together with lookups for positions and for the earliest facet
/// containing a given face.
class FacetIndex {
public:
    FacetIndex(const ComplexParams& params, std::vector<Face> order) : params_(params), order_(std::move(order))
    {
        position_.reserve(order_.size());
        for (std::size_t j = 0; j < order_.size(); ++j) {
            if (!position_.emplace(order_[j], j).second)
                throw DomainError("facet list contains a duplicate at position " + std::to_string(j));
        }
        for (std::size_t j = 0; j < order_.size(); ++j)
            index_subfaces(j);
    }

    const ComplexParams& params() const { return params_; }
    std::size_t size() const { return order_.size(); }
    const Face& operator[](std::size_t j) const { return order_[j]; }
    const std::vector<Face>& facets() const { return order_; }

    std::optional<std::size_t> position(const Face& face) const
    {
        auto it = position_.find(face);
        if (it == position_.end())
            return std::nullopt;
        return it->second;
    }

    /// Smallest index of a listed facet containing `face`.
    std::optional<std::size_t> first_container(const Face& face) const
    {
        auto it = first_container_.find(face);
        if (it == first_container_.end())
            return std::nullopt;
        return it->second;
    }

private:
    void index_subfaces(std::size_t j)
    {
        const Face& f = order_[j];
        const std::size_t r = f.size();
        const std::size_t p = static_cast<std::size_t>(f.arity());
        const std::uint64_t subsets = std::uint64_t{1} << r;
        std::vector<int> flat;
        for (std::uint64_t mask = 0; mask < subsets; ++mask) {
            flat.clear();
            for (std::size_t l = 0; l < r; ++l)
                if (mask & (std::uint64_t{1} << l))
                    flat.insert(flat.end(), f.flat().begin() + static_cast<std::ptrdiff_t>(l * p),
                                f.flat().begin() + static_cast<std::ptrdiff_t>((l + 1) * p));
            first_container_.try_emplace(Face(f.arity(), flat), j);
        }
    }

    ComplexParams params_;
    std::vector<Face> order_;
    std::unordered_map<Face, std::size_t, FaceHash> position_;
    std::unordered_map<Face, std::size_t, FaceHash> first_container_;
};

// ---------------------------------------------------------------------------
// Witnesses

/// F_j and the dropped vertex v with F_i ∩ F_k ⊆ F_j ∩ F_k = F_k \ {v}.
struct Witness {
    std::size_t j = 0;
    Vertex v;

    friend bool operator==(const Witness&, const Witness&) = default;
};

enum class WitnessMode { constructive, exhaustive, both };

namespace detail {

inline bool is_witness(const FacetIndex& index, std::size_t i, std::size_t k, std::size_t j,
                       std::size_t dropped)
{
    if (j >= k)
        return false;
    const Face& fi = index[i];
    const Face& fk = index[k];
    const Face& fj = index[j];
    if (fi.contains(fk.coords(dropped)) || fj.contains(fk.coords(dropped)))
        return false;
    for (std::size_t l = 0; l < fk.size(); ++l)
        if (l != dropped && !fj.contains(fk.coords(l)))
            return false;
    return true;
}

/// The facet the constructive rule builds for vertex `l` of F_k: a down-twist
/// of its left-most B-position, or a dimension-raising replacement.
inline std::optional<Face> constructed_facet(const ComplexParams& params, const Face& fk, std::size_t l)
{
    const auto positions = down_positions(fk, l);
    if (positions.empty())
        return std::nullopt;
    const std::size_t a = static_cast<std::size_t>(positions.front());
    const std::size_t r = fk.size();
    const std::size_t p = static_cast<std::size_t>(fk.arity());

    Vertex w = fk.vertex(l);
    w.coords[a] -= 1;
    const Face base = fk.without(l);

    if (l + 1 < r) {
        int others = params.n + 1;
        for (std::size_t b = 0; b < p; ++b)
            if (b != a)
                others = std::min(others, fk.coord(l + 1, b) - fk.coord(l, b));
        if (others == 1)
            return base.with(w);
        Vertex raised = fk.vertex(l);
        for (std::size_t b = 0; b < p; ++b)
            if (b != a)
                raised.coords[b] += 1;
        return base.with(w).with(raised);
    }

    bool touches_n = false;
    for (std::size_t b = 0; b < p; ++b)
        if (b != a && fk.coord(l, b) == params.n)
            touches_n = true;
    if (touches_n)
        return base.with(w);
    Vertex top(std::vector<int>(p, params.n));
    return base.with(w).with(top);
}

} // namespace detail

/// Per-facet cache of the two witness routes for F_k: for every vertex l, the
/// earliest facet containing F_k \ {v_l} and the facet the constructive rule builds.
struct WitnessTable {
    std::vector<std::optional<std::size_t>> earliest;
    std::vector<std::optional<std::size_t>> constructed;
    std::vector<bool> down_nonempty;
};

inline WitnessTable witness_table(const FacetIndex& index, std::size_t k)
{
    const Face& fk = index[k];
    const std::size_t r = fk.size();
    WitnessTable table;
    table.earliest.resize(r);
    table.constructed.resize(r);
    table.down_nonempty.resize(r);
    for (std::size_t l = 0; l < r; ++l) {
        const Face rest = fk.without(l);
        auto first = index.first_container(rest);
        if (first && *first < k)
            table.earliest[l] = first;
        table.down_nonempty[l] = !down_positions(fk, l).empty();
        if (auto built = detail::constructed_facet(index.params(), fk, l))
            table.constructed[l] = index.position(*built);
    }
    return table;
}

/// Search over every earlier facet: returns the smallest j over all vertices
/// of F_k \ F_i.
inline std::optional<Witness> exhaustive_witness(const FacetIndex& index, const WitnessTable& table,
                                                 std::size_t i, std::size_t k)
{
    const Face& fi = index[i];
    const Face& fk = index[k];
    std::optional<Witness> best;
    for (std::size_t l = 0; l < fk.size(); ++l) {
        if (fi.contains(fk.coords(l)) || !table.earliest[l])
            continue;
        if (!best || *table.earliest[l] < best->j)
            best = Witness{*table.earliest[l], fk.vertex(l)};
    }
    return best;
}

/// Constructive rule: pick the minimal private vertex l < r of F_k with
/// B_l nonempty (else l = r) and build F_j from it.
inline std::optional<Witness> constructive_witness(const FacetIndex& index, const WitnessTable& table,
                                                   std::size_t i, std::size_t k)
{
    const Face& fi = index[i];
    const Face& fk = index[k];
    const std::size_t r = fk.size();
    std::optional<std::size_t> chosen;
    for (std::size_t l = 0; l < r; ++l) {
        if (!fi.contains(fk.coords(l)) && table.down_nonempty[l]) {
            chosen = l;
            break;
        }
    }
    if (!chosen || !table.constructed[*chosen])
        return std::nullopt;
    const std::size_t j = *table.constructed[*chosen];
    if (!detail::is_witness(index, i, k, j, *chosen))
        return std::nullopt;
    return Witness{j, fk.vertex(*chosen)};
}

/// Witness for the pair i < k of an indexed facet list.
inline std::optional<Witness> shelling_witness(const FacetIndex& index, std::size_t i, std::size_t k,
                                               WitnessMode mode = WitnessMode::constructive)
{
    if (i >= k || k >= index.size())
        throw PreconditionError("shelling witness requires i < k within the facet list");
    const auto table = witness_table(index, k);
    if (mode == WitnessMode::exhaustive)
        return exhaustive_witness(index, table, i, k);
    if (auto w = constructive_witness(index, table, i, k))
        return w;
    return exhaustive_witness(index, table, i, k);
}

// ---------------------------------------------------------------------------
// Verification

struct PairWitness {
    std::size_t i = 0;
    std::size_t k = 0;
    Witness witness;
};

struct ShellingReport {
    static constexpr std::size_t max_recorded_witnesses = 100;

    std::size_t facet_count = 0;
    std::uint64_t total_pairs = 0;
    WitnessMode mode = WitnessMode::constructive;
    /// First witnesses in (k, i) order.
    std::vector<PairWitness> witnesses;
    std::vector<std::pair<std::size_t, std::size_t>> violations;
    /// Pairs where the constructive rule did not produce a witness and the
    /// exhaustive search was used instead.
    std::uint64_t constructive_fallbacks = 0;
    std::vector<std::pair<std::size_t, std::size_t>> fallback_pairs;
    /// Pairs where the two routes disagree on existence (mode both).
    std::uint64_t mode_disagreements = 0;

    bool is_shelling() const { return violations.empty(); }
};

namespace detail {

struct PartialReport {
    std::vector<PairWitness> witnesses;
    std::vector<std::pair<std::size_t, std::size_t>> violations;
    std::vector<std::pair<std::size_t, std::size_t>> fallback_pairs;
    std::uint64_t fallbacks = 0;
    std::uint64_t disagreements = 0;
};

inline void verify_range(const FacetIndex& index, WitnessMode mode, std::size_t k_begin, std::size_t k_end,
                         std::size_t stride, PartialReport& out, std::vector<std::size_t>& ks)
{
    for (std::size_t k = k_begin; k < k_end; k += stride) {
        ks.push_back(k);
        const auto table = witness_table(index, k);
        for (std::size_t i = 0; i < k; ++i) {
            std::optional<Witness> found;
            if (mode == WitnessMode::exhaustive) {
                found = exhaustive_witness(index, table, i, k);
            } else {
                auto built = constructive_witness(index, table, i, k);
                auto searched = exhaustive_witness(index, table, i, k);
                if (!built && searched) {
                    ++out.fallbacks;
                    if (out.fallback_pairs.size() < ShellingReport::max_recorded_witnesses)
                        out.fallback_pairs.emplace_back(i, k);
                }
                if (mode == WitnessMode::both && built.has_value() != searched.has_value())
                    ++out.disagreements;
                found = built ? built : searched;
            }
            if (found) {
                if (out.witnesses.size() < ShellingReport::max_recorded_witnesses)
                    out.witnesses.push_back(PairWitness{i, k, *found});
            } else {
                out.violations.emplace_back(i, k);
            }
        }
    }
}

} // namespace detail

/// Checks that `order` lists every facet once and tests every pair i < k.
/// The report does not depend on `threads`.
inline ShellingReport verify_shelling(const ComplexParams& params, const std::vector<Face>& order,
                                      WitnessMode mode = WitnessMode::constructive, unsigned threads = 1)
{
    for (std::size_t j = 0; j < order.size(); ++j)
        if (!is_facet(params, order[j]))
            throw DomainError("entry " + std::to_string(j) + " of the order is not a facet");
    const FacetIndex index(params, order);
    std::size_t expected = 0;
    for_each_facet(params, [&](const Face&) { ++expected; });
    if (expected != order.size())
        throw DomainError("order lists " + std::to_string(order.size()) + " facets, complex has " +
                          std::to_string(expected));

    ShellingReport report;
    report.facet_count = order.size();
    report.mode = mode;
    const std::uint64_t t = order.size();
    report.total_pairs = t == 0 ? 0 : t * (t - 1) / 2;

    threads = std::max(1u, threads);
    std::vector<detail::PartialReport> parts(threads);
    std::vector<std::vector<std::size_t>> ks(threads);
    if (threads == 1) {
        detail::verify_range(index, mode, 0, order.size(), 1, parts[0], ks[0]);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; ++w)
            pool.emplace_back([&, w] {
                detail::verify_range(index, mode, w, order.size(), threads, parts[w], ks[w]);
            });
        for (auto& th : pool)
            th.join();
    }

    // Merge in ascending k so the report is independent of the thread count.
    std::vector<PairWitness> witnesses;
    for (auto& part : parts) {
        report.constructive_fallbacks += part.fallbacks;
        report.mode_disagreements += part.disagreements;
        witnesses.insert(witnesses.end(), part.witnesses.begin(), part.witnesses.end());
        report.violations.insert(report.violations.end(), part.violations.begin(), part.violations.end());
        report.fallback_pairs.insert(report.fallback_pairs.end(), part.fallback_pairs.begin(),
                                     part.fallback_pairs.end());
    }
    auto by_k = [](const auto& x, const auto& y) {
        return std::pair(x.second, x.first) < std::pair(y.second, y.first);
    };
    std::sort(witnesses.begin(), witnesses.end(),
              [](const PairWitness& x, const PairWitness& y) { return std::pair(x.k, x.i) < std::pair(y.k, y.i); });
    if (witnesses.size() > ShellingReport::max_recorded_witnesses)
        witnesses.resize(ShellingReport::max_recorded_witnesses);
    report.witnesses = std::move(witnesses);
    std::sort(report.violations.begin(), report.violations.end(), by_k);
    std::sort(report.fallback_pairs.begin(), report.fallback_pairs.end(), by_k);
    if (report.fallback_pairs.size() > ShellingReport::max_recorded_witnesses)
        report.fallback_pairs.resize(ShellingReport::max_recorded_witnesses);
    return report;
}

// ---------------------------------------------------------------------------
// Homology facets

/// Every vertex admits a down-twist.
inline bool homology_facet_by_criterion(const ComplexParams& params, const Face& facet)
{
    if (!is_facet(params, facet))
        throw PreconditionError("homology criterion applies to facets only");
    for (std::size_t l = 0; l < facet.size(); ++l)
        if (down_positions(facet, l).empty())
            return false;
    return true;
}

/// Facets whose whole boundary lies in earlier facets. A 0-dimensional facet
/// qualifies iff it is not first.
inline std::vector<bool> homology_facets_direct(const FacetIndex& index, const ShellingReport& report)
{
    if (!report.is_shelling() || report.facet_count != index.size())
        throw PreconditionError("homology facets need an order verified as a shelling");
    std::vector<bool> out(index.size(), false);
    for (std::size_t k = 1; k < index.size(); ++k) {
        const Face& fk = index[k];
        bool attached = true;
        for (std::size_t l = 0; l < fk.size() && attached; ++l) {
            auto first = index.first_container(fk.without(l));
            attached = first && *first < k;
        }
        out[k] = attached;
    }
    return out;
}

/// Reduced Betti numbers, indexed from dimension -1.
struct BettiVector {
    std::vector<Integer> betti;

    const Integer& at(int dim) const { return betti.at(static_cast<std::size_t>(dim + 1)); }
    Integer alternating_sum() const
    {
        Integer sum = 0;
        for (std::size_t s = 0; s < betti.size(); ++s)
            sum += sign_power(static_cast<std::int64_t>(s) - 1) * betti[s];
        return sum;
    }

    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

/// Counts homology facets per dimension under the facet order; throws when the
/// order fails to shell the complex.
inline BettiVector betti_from_shelling(const ComplexParams& params, unsigned threads = 1)
{
    const auto order = enumerate_facets(params);
    const auto report = verify_shelling(params, order, WitnessMode::exhaustive, threads);
    if (!report.is_shelling())
        throw std::runtime_error("facet order is not a shelling of this complex");
    const FacetIndex index(params, order);
    const auto homology = homology_facets_direct(index, report);
    BettiVector b;
    b.betti.assign(static_cast<std::size_t>(params.n) + 1, 0);
    for (std::size_t k = 0; k < order.size(); ++k)
        if (homology[k])
            b.betti[order[k].size()] += 1;
    return b;
}

// ---------------------------------------------------------------------------
// X / Y families

/// Homology facets whose last vertex stays below n in some coordinate.
inline std::vector<Face> x_family(const ComplexParams& params)
{
    std::vector<Face> out;
    for (const auto& f : enumerate_facets(params)) {
        auto last = f.coords(f.size() - 1);
        const bool below = std::any_of(last.begin(), last.end(), [&](int c) { return c < params.n; });
        if (below && homology_facet_by_criterion(params, f))
            out.push_back(f);
    }
    return out;
}

/// X-family facets of the complex one size down, closed off with (n, ..., n).
inline std::vector<Face> y_family(const ComplexParams& params)
{
    std::vector<Face> out;
    if (params.n < 2)
        return out;
    const Vertex top(std::vector<int>(static_cast<std::size_t>(params.p), params.n));
    for (const auto& g : x_family(make_complex(params.p, params.n - 1)))
        out.push_back(g.with(top));
    std::sort(out.begin(), out.end(), OrderLess{});
    return out;
}

/// Homology facets signed by (-1)^(shift-vector length - 1), i.e. (-1)^r for
/// r vertices. This is the sign the generating function attaches to each facet.
inline Integer alternating_homology_count(const ComplexParams& params)
{
    Integer total = 0;
    for (const auto& f : enumerate_facets(params))
        if (homology_facet_by_criterion(params, f))
            total += sign_power(static_cast<std::int64_t>(f.size()));
    return total;
}

} // namespace dixon
