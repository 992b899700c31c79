#include <catch_amalgamated.hpp>

#include "dixon/complex.hpp"
#include "dixon/identities.hpp"
#include "oracles.hpp"

#include <set>

using namespace dixon;

namespace {

FVector fv(std::initializer_list<int> values)
{
    FVector f;
    for (int v : values)
        f.counts.emplace_back(v);
    return f;
}

} // namespace

TEST_CASE("make_complex validates its arguments")
{
    CHECK(make_complex(3, 5) == ComplexParams{3, 5});
    CHECK(make_complex(1, 4) == ComplexParams{1, 4});
    CHECK_THROWS_AS(make_complex(3, 0), DomainError);
    CHECK_THROWS_AS(make_complex(0, 2), DomainError);
}

TEST_CASE("is_face checks strict coordinatewise increase")
{
    CHECK(is_face(make_complex(3, 5), {{1, 2, 1}, {3, 3, 3}, {4, 4, 5}}));
    CHECK(is_face(make_complex(3, 5), {{4, 4, 5}, {1, 2, 1}, {3, 3, 3}})); // any input order
    CHECK_FALSE(is_face(make_complex(3, 2), {{1, 1, 1}, {2, 2, 1}}));
    CHECK(is_face(make_complex(3, 2), std::vector<Vertex>{}));
    CHECK_THROWS_AS(is_face(make_complex(3, 2), {{1, 1}}), DomainError);
    CHECK_THROWS_AS(is_face(make_complex(3, 2), {{1, 1, 3}}), DomainError);
}

TEST_CASE("enumerate_faces on small complexes")
{
    const auto edges = enumerate_faces(make_complex(3, 2), 1);
    REQUIRE(edges.size() == 1);
    CHECK(edges[0] == Face(3, {{1, 1, 1}, {2, 2, 2}}));

    CHECK(enumerate_faces(make_complex(3, 2), 0).size() == 8);

    const auto top = enumerate_faces(make_complex(1, 3), 2);
    REQUIRE(top.size() == 1);
    CHECK(top[0] == Face(1, {{1}, {2}, {3}}));

    CHECK(enumerate_faces(make_complex(3, 2), 2).empty());
    CHECK(enumerate_faces(make_complex(3, 2), -2).empty());
    const auto empty = enumerate_faces(make_complex(3, 2), -1);
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].empty());
}

TEST_CASE("enumeration matches brute force: same faces, lexicographic, duplicate-free")
{
    for (int p = 1; p <= 3; ++p) {
        for (int n = 1; n <= 4; ++n) {
            const auto params = make_complex(p, n);
            std::set<std::vector<int>> expected;
            for (const auto& chain : oracle::all_faces(p, n)) {
                std::vector<int> flat;
                for (const auto& v : chain)
                    flat.insert(flat.end(), v.begin(), v.end());
                expected.insert(flat);
            }
            std::set<std::vector<int>> seen;
            for (int dim = -1; dim < n; ++dim) {
                const auto faces = enumerate_faces(params, dim);
                for (std::size_t i = 0; i < faces.size(); ++i) {
                    CHECK(is_face(params, faces[i]));
                    CHECK(faces[i].dimension() == dim);
                    if (i > 0)
                        CHECK(faces[i - 1].flat() < faces[i].flat());
                    CHECK(seen.insert(faces[i].flat()).second);
                }
            }
            CHECK(seen == expected);
        }
    }
}

TEST_CASE("f-vector by formula")
{
    CHECK(f_vector_formula(make_complex(3, 2)) == fv({1, 8, 1}));
    CHECK(f_vector_formula(make_complex(3, 3)) == fv({1, 27, 27, 1}));
    CHECK(f_vector_formula(make_complex(2, 2)) == fv({1, 4, 1}));
    // C(12,6)^3 and beyond need more than 64 bits once p grows
    CHECK(f_vector_formula(make_complex(5, 40)).at(19) == power(binomial(40, 20), 5));
}

TEST_CASE("f-vector by enumeration agrees with the formula")
{
    CHECK(f_vector_enumerated(make_complex(3, 2)) == fv({1, 8, 1}));
    CHECK(f_vector_enumerated(make_complex(3, 4)) == fv({1, 64, 216, 64, 1}));
    CHECK(f_vector_enumerated(make_complex(1, 4)) == fv({1, 4, 6, 4, 1}));
    for (int p = 1; p <= 3; ++p)
        for (int n = 1; n <= 5; ++n)
            CHECK(f_vector_enumerated(make_complex(p, n)) == f_vector_formula(make_complex(p, n)));
}

TEST_CASE("enumeration budget names the offending dimension")
{
    // Δ(4): 1 + 64 + 216 > 200 at dimension 1
    try {
        f_vector_enumerated(make_complex(3, 4), 200);
        FAIL("expected a resource error");
    } catch (const ResourceError& e) {
        CHECK(std::string(e.what()).find("dimension 1") != std::string::npos);
    }
}

TEST_CASE("reduced Euler characteristic")
{
    CHECK(reduced_euler_characteristic(fv({1, 8, 1})) == 6);
    CHECK(reduced_euler_characteristic(fv({1, 27, 27, 1})) == 0);
    for (int n = 1; n <= 12; ++n)
        CHECK(reduced_euler_characteristic(f_vector_formula(make_complex(1, n))) == 0);
}

TEST_CASE("face numbers are symmetric and tie the Euler characteristic to the alternating sum")
{
    for (int p = 1; p <= 4; ++p) {
        for (int n = 1; n <= 10; ++n) {
            const auto f = f_vector_formula(make_complex(p, n));
            for (int s = 0; s <= n; ++s)
                CHECK(f.at(s - 1) == f.at(n - s - 1));
            CHECK(reduced_euler_characteristic(f) == -power_sum_lhs(n, static_cast<unsigned>(p)));
        }
    }
}
