#include <catch_amalgamated.hpp>

#include "dixon/homology.hpp"
#include "dixon/identities.hpp"
#include "oracles.hpp"

#include <sstream>

using namespace dixon;

namespace {

std::vector<std::vector<long long>> dense(const SparseBoundaryMatrix& m)
{
    std::vector<std::vector<long long>> out(m.rows, std::vector<long long>(m.cols, 0));
    for (std::size_t c = 0; c < m.cols; ++c)
        for (auto [row, value] : m.columns[c])
            out[row][c] = value;
    return out;
}

} // namespace

TEST_CASE("boundary matrices of Delta(2)")
{
    const auto d2 = make_complex(3, 2);
    const auto edge = boundary_matrix(d2, 1);
    CHECK(edge.rows == 8);
    CHECK(edge.cols == 1);
    REQUIRE(edge.columns[0].size() == 2);
    CHECK(edge.columns[0][0].second == -edge.columns[0][1].second);
    // omitting (1,1,1), the first vertex, leaves the (2,2,2) row with sign -1
    CHECK(edge.columns[0][0] == SparseBoundaryMatrix::Entry{0, 1});
    CHECK(edge.columns[0][1] == SparseBoundaryMatrix::Entry{7, -1});

    const auto aug = boundary_matrix(d2, 0);
    CHECK(aug.rows == 1);
    CHECK(aug.cols == 8);
    for (const auto& col : aug.columns) {
        REQUIRE(col.size() == 1);
        CHECK(col[0] == SparseBoundaryMatrix::Entry{0, -1});
    }

    CHECK_THROWS_AS(boundary_matrix(d2, 2), DomainError);
    CHECK_THROWS_AS(boundary_matrix(d2, -1), DomainError);
    CHECK_THROWS_AS(boundary_matrix(make_complex(3, 4), 2, 1000), ResourceError);
}

TEST_CASE("columns have k+1 entries of alternating sign, and the boundary of a boundary vanishes")
{
    for (int p = 1; p <= 3; ++p) {
        for (int n = 1; n <= 5; ++n) {
            const auto params = make_complex(p, n);
            std::vector<SparseBoundaryMatrix> ms;
            for (int k = 0; k <= n - 1; ++k)
                ms.push_back(boundary_matrix(params, k));
            for (int k = 0; k <= n - 1; ++k) {
                const auto& m = ms[static_cast<std::size_t>(k)];
                CHECK(m.rows == static_cast<std::size_t>(f_vector_formula(params).at(k - 1)));
                CHECK(m.cols == static_cast<std::size_t>(f_vector_formula(params).at(k)));
                for (const auto& col : m.columns)
                    CHECK(col.size() == static_cast<std::size_t>(k) + 1);
            }
            for (int k = 0; k + 1 <= n - 1; ++k)
                CHECK(composite_is_zero(ms[static_cast<std::size_t>(k)], ms[static_cast<std::size_t>(k) + 1]));
        }
    }
}

TEST_CASE("sparse rank matches a dense elimination")
{
    for (int p = 1; p <= 3; ++p) {
        for (int n = 1; n <= (p == 3 ? 3 : 4); ++n) {
            const auto params = make_complex(p, n);
            for (int k = 0; k <= n - 1; ++k) {
                const auto m = boundary_matrix(params, k);
                INFO("p=" << p << " n=" << n << " k=" << k);
                CHECK(rank(m) == oracle::dense_rank(dense(m)));
            }
        }
    }
}

TEST_CASE("64-bit and arbitrary precision elimination agree")
{
    const auto params = make_complex(3, 4);
    for (int k = 0; k <= 3; ++k) {
        const auto m = boundary_matrix(params, k);
        CHECK(detail::rank_fraction_free<long long>(m) == detail::rank_fraction_free<Integer>(m));
    }
}

TEST_CASE("rank is invariant under relabelling rows and columns")
{
    for (int n = 2; n <= 4; ++n) {
        const auto params = make_complex(3, n);
        for (int k = 0; k <= n - 1; ++k) {
            const auto m = boundary_matrix(params, k);
            const auto r = rank(m);
            for (std::uint64_t seed : {1u, 7u, 2024u})
                CHECK(rank(shuffled(m, seed)) == r);
        }
    }
    const auto m = boundary_matrix(make_complex(3, 3), 1);
    const auto a = shuffled(m, 42);
    const auto b = shuffled(m, 42);
    CHECK(a.columns == b.columns);
}

TEST_CASE("Betti numbers from boundary matrices")
{
    CHECK(betti_numbers(make_complex(3, 2)).betti == std::vector<Integer>{0, 6, 0});
    CHECK(betti_numbers(make_complex(3, 1)).betti == std::vector<Integer>{0, 0});
    for (int n = 1; n <= 6; ++n) {
        const auto b = betti_numbers(make_complex(1, n));
        CHECK(std::all_of(b.betti.begin(), b.betti.end(), [](const Integer& x) { return x == 0; }));
    }
}

TEST_CASE("matrix and shelling Betti numbers agree")
{
    for (int n = 1; n <= 4; ++n) {
        INFO("p=3 n=" << n);
        CHECK(betti_numbers(make_complex(3, n)) == betti_from_shelling(make_complex(3, n)));
    }
    for (int n = 1; n <= 5; ++n) {
        INFO("p=2 n=" << n);
        CHECK(betti_numbers(make_complex(2, n)) == betti_from_shelling(make_complex(2, n)));
    }
}

TEST_CASE("Euler-Poincare relation")
{
    CHECK(verify_euler_poincare(make_complex(3, 2)));
    CHECK(verify_euler_poincare(make_complex(3, 3)));
    CHECK(betti_numbers(make_complex(3, 3)).alternating_sum() == 0);
    CHECK(betti_numbers(make_complex(2, 4)).alternating_sum() == -6);
    CHECK(betti_numbers(make_complex(2, 4)).alternating_sum() == -power_sum_lhs(4, 2));
    for (int p = 1; p <= 3; ++p)
        for (int n = 1; n <= (p == 3 ? 4 : 5); ++n)
            CHECK(verify_euler_poincare(make_complex(p, n)));
}

TEST_CASE("integral homology is torsion-free on small complexes")
{
    CHECK(invariant_factors({{2, 0}, {0, 3}}) == std::vector<Integer>{1, 6});
    CHECK(invariant_factors({{2, 4}, {6, 8}}) == std::vector<Integer>{2, 4});
    for (int n = 1; n <= 3; ++n)
        CHECK(torsion_free(make_complex(3, n)));
    CHECK(torsion_free(make_complex(2, 4)));
}

TEST_CASE("triplet export")
{
    std::ostringstream out;
    write_triplets(out, boundary_matrix(make_complex(3, 2), 1));
    CHECK(out.str() == "%% 8 1 2\n1 1 1\n8 1 -1\n");
}
