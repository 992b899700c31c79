#include <catch_amalgamated.hpp>

#include "dixon/alignment.hpp"
#include "dixon/genfun.hpp"
#include "oracles.hpp"

using namespace dixon;

namespace {

const std::array<int, 3> xyz_e{1, 1, 1};

MSeries closed_det_A(int T)
{
    const MSeries one = MSeries::constant(3, T, 1);
    return (one - MSeries::variable(3, T, 0)) * (one - MSeries::variable(3, T, 1)) *
               (one - MSeries::variable(3, T, 2)) +
           MSeries::monomial(3, T, xyz_e);
}

} // namespace

TEST_CASE("P coefficients")
{
    const MSeries P = series_P(6);
    CHECK(P.coefficient({2, 2, 2}) == 0);
    CHECK(P.coefficient({1, 2, 2}) == 1);
    CHECK(P.coefficient({1, 1, 1}) == 0);
    CHECK(P.coefficient({1, 1, 2}) == 1);
    CHECK_THROWS_AS(series_P(1), PreconditionError);
}

TEST_CASE("P: both constructions agree, and they count single columns")
{
    for (int T = 2; T <= 9; ++T)
        CHECK(series_P_closed(T) == series_P_from_cases(T));
    const MSeries P = series_P(7);
    for (int a = 0; a <= 7; ++a)
        for (int b = 0; b <= 7; ++b)
            for (int c = 0; c <= 7; ++c) {
                const bool single = std::min({a, b, c}) == 1 && std::max({a, b, c}) > 1;
                CHECK(P.coefficient({a, b, c}) == (single ? 1 : 0));
            }
}

TEST_CASE("g_r is P^r and counts column patterns")
{
    CHECK(series_g_r(1, 4) == series_P(4));
    CHECK_THROWS_AS(series_g_r(3, 5), PreconditionError);
    CHECK_THROWS_AS(series_g_r(0, 5), PreconditionError);
    const int T = 7;
    for (int r = 1; r <= 3; ++r) {
        const MSeries g = series_g_r(r, T);
        for (int a = 0; a <= T; ++a)
            for (int b = 0; b <= T; ++b)
                for (int c = 0; c <= T; ++c) {
                    INFO("r=" << r << " at " << a << ',' << b << ',' << c);
                    CHECK(g.coefficient({a, b, c}) == oracle::column_pattern_count(a, b, c, r));
                    if (std::min({a, b, c}) < r)
                        CHECK(g.coefficient({a, b, c}) == 0);
                }
    }
}

TEST_CASE("diagonal of g_r counts X-family facets with r-1 vertices")
{
    // An X-facet of Delta(m-1) with r-1 vertices has r shift-vector columns,
    // each summing to m across the facet.
    for (int r = 2; r <= 3; ++r) {
        const MSeries g = series_g_r(r, 7);
        for (int m = 2; m <= 7; ++m) {
            const auto x = x_family(make_complex(3, m - 1));
            const auto count = std::count_if(x.begin(), x.end(),
                                             [&](const Face& f) { return f.size() == static_cast<std::size_t>(r - 1); });
            INFO("r=" << r << " m=" << m);
            CHECK(g.coefficient({m, m, m}) == count);
        }
    }
}

TEST_CASE("XY coefficients")
{
    const MSeries xy = series_XY(6);
    CHECK(xy.coefficient({1, 1, 1}) == 1);
    CHECK(xy.coefficient({2, 2, 2}) == 0);
    // equals the Dixon sum at n = 2, i.e. minus the reduced Euler characteristic of Delta(2)
    CHECK(xy.coefficient({3, 3, 3}) == -6);
    CHECK(xy.coefficient({0, 0, 0}) == 0);
    CHECK_THROWS_AS(series_XY(0), PreconditionError);
}

TEST_CASE("XY: closed form equals the alternating P sum")
{
    for (int T = 1; T <= 8; ++T)
        CHECK(series_XY_closed(T) == series_XY_alternating(T));
}

TEST_CASE("determinants of I - XA")
{
    CHECK(det_I_minus_XA(dixon_matrix_A(), 4) == closed_det_A(4));
    const int T = 4;
    const MSeries x = MSeries::variable(3, T, 0), y = MSeries::variable(3, T, 1), z = MSeries::variable(3, T, 2);
    CHECK(det_I_minus_XA(dixon_matrix_B(), T) == MSeries::constant(3, T, 1) + x * y + x * z + y * z);
    CHECK_THROWS_AS(IntMatrix({{1, 2}, {3}}), DomainError);
}

TEST_CASE("master theorem")
{
    const auto id = IntMatrix::identity(2);
    const std::array<int, 2> k2{2, 2};
    CHECK(master_theorem_check(id, k2, 2));
    const IntMatrix small{{1, 2}, {3, -1}};
    for (int a = 0; a <= 4; ++a)
        for (int b = 0; b <= 4; ++b) {
            const std::array<int, 2> k{a, b};
            CHECK(master_theorem_check(small, k, 4));
        }
    for (int n = 0; n <= 5; ++n) {
        const std::array<int, 3> k{n, n, n};
        const auto a = master_theorem(dixon_matrix_A(), k, std::max(n, 1));
        const auto b = master_theorem(dixon_matrix_B(), k, std::max(n, 1));
        CHECK(a.holds());
        CHECK(b.holds());
        CHECK(a.product_coefficient == b.product_coefficient);
        if (n >= 1)
            CHECK(a.product_coefficient == dixon_lhs(n));
    }
    const std::array<int, 3> too_big{3, 3, 3};
    CHECK_THROWS_AS(master_theorem(dixon_matrix_A(), too_big, 2), PreconditionError);
    const std::array<int, 2> wrong_size{1, 1};
    CHECK_THROWS_AS(master_theorem(dixon_matrix_A(), wrong_size, 2), DomainError);
}

TEST_CASE("diagonal of the product of differences")
{
    for (int n = 1; n <= 6; ++n)
        CHECK(dixon_diagonal_product(n) == dixon_lhs(n));
}

TEST_CASE("alignment oracle pins the offset")
{
    const auto report = alignment_oracle(5);
    REQUIRE(report.delta());
    CHECK(*report.delta() == 1);
    CHECK(*report.delta() == pinned_alignment_offset);
    // counting by vertex parity instead gives no consistent offset
    CHECK(report.vertex_sign_matching.empty());
    for (const auto& row : report.rows)
        CHECK(row.signed_count == dixon_lhs(row.n));
}

TEST_CASE("the pinned offset reproduces the closed form end to end")
{
    for (int n = 1; n <= 6; ++n) {
        const auto chain = dixon_chain(n);
        INFO("n=" << n);
        CHECK(chain.holds());
        CHECK(chain.rhs == dixon_rhs(n));
    }
}
