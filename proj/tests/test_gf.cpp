#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oddcover/gf.hpp"

using namespace oddcover;

TEST_CASE("context construction") {
    const GFContext f3(3, 1);
    CHECK(f3.q() == 3);
    CHECK(f3.irreducible() == std::vector<std::uint32_t>{0, 1}); // x

    const GFContext f9(3, 2);
    CHECK(f9.q() == 9);
    CHECK(f9.irreducible() == std::vector<std::uint32_t>{1, 0, 1}); // x^2 + 1

    CHECK_THROWS_AS(GFContext(4, 1), std::invalid_argument);
    CHECK_THROWS_AS(GFContext(2, 17), std::invalid_argument); // 2^17 > 2^16
}

TEST_CASE("chosen irreducibles have no roots in F_p") {
    for (auto [p, m] : {std::pair{2u, 4u}, {3u, 2u}, {5u, 2u}, {7u, 2u}, {3u, 3u}}) {
        const GFContext f(p, m);
        const auto& poly = f.irreducible();
        for (std::uint32_t r = 0; r < p; ++r) {
            std::uint32_t value = 0;
            for (std::size_t i = poly.size(); i-- > 0;) value = (value * r + poly[i]) % p;
            CHECK(value != 0);
        }
    }
}

TEST_CASE("arithmetic in F_9 under x^2 + 1") {
    const GFContext f9(3, 2);
    // Element 3 encodes x. x * x = -1 = 2.
    CHECK(f9.mul(3, 3) == 2);
    CHECK(f9.add(3, 3) == 6); // x + x = 2x
    CHECK(f9.mul(0, 5) == 0);
    CHECK(f9.mul(1, 7) == 7);
}

TEST_CASE("inner products") {
    const GFContext f3(3, 1);
    CHECK(inner(GFVec(f3, {1, 2}), GFVec(f3, {2, 2})) == 0); // 2 + 4 = 6 = 0 mod 3
    CHECK(inner(GFVec(f3, {0, 0}), GFVec(f3, {2, 1})) == 0);

    const GFContext f9(3, 2);
    CHECK(inner(GFVec(f9, {3, 1}), GFVec(f9, {3, 0})) == 2); // x*x = 2

    CHECK_THROWS_AS(inner(GFVec(f3, {1}), GFVec(f3, {1, 2})), std::invalid_argument);
    CHECK_THROWS_AS(inner(GFVec(f3, {1}), GFVec(f9, {1})), std::invalid_argument);
}

TEST_CASE("field axioms by exhaustion for q <= 81") {
    for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {3u, 2u}, {2u, 3u},
                        {5u, 1u}, {7u, 1u}, {3u, 4u}, {2u, 4u}}) {
        const GFContext f(p, m);
        const std::uint32_t q = f.q();
        REQUIRE(q <= 81);
        for (std::uint32_t a = 0; a < q; ++a) {
            CHECK(f.add(a, 0) == a);
            CHECK(f.mul(a, 1) == a);
            CHECK(f.add(a, f.neg(a)) == 0);
            if (a != 0) CHECK(f.mul(a, f.pow(a, q - 1)) == a); // a^q = a
            for (std::uint32_t b = 0; b < q; ++b) {
                CHECK(f.add(a, b) == f.add(b, a));
                CHECK(f.mul(a, b) == f.mul(b, a));
                for (std::uint32_t c = 0; c < q; ++c) {
                    CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
                    CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
                }
            }
        }
        // Unique multiplicative inverses: every nonzero a has exactly one b with ab = 1.
        for (std::uint32_t a = 1; a < q; ++a) {
            std::size_t inverses = 0;
            for (std::uint32_t b = 1; b < q; ++b) inverses += f.mul(a, b) == 1;
            CHECK(inverses == 1);
        }
    }
}

TEST_CASE("projective normals") {
    const GFContext f3(3, 1);
    SUBCASE("F_3, k=1") {
        const auto pts = projective_normals(f3, 1);
        REQUIRE(pts.size() == 1);
        CHECK(pts[0].coords == std::vector<GFContext::Elem>{1});
    }
    SUBCASE("F_3, k=2 lists the four directions in lexicographic order") {
        const auto pts = projective_normals(f3, 2);
        REQUIRE(pts.size() == 4);
        CHECK(pts[0].coords == std::vector<GFContext::Elem>{0, 1});
        CHECK(pts[1].coords == std::vector<GFContext::Elem>{1, 0});
        CHECK(pts[2].coords == std::vector<GFContext::Elem>{1, 1});
        CHECK(pts[3].coords == std::vector<GFContext::Elem>{1, 2});
    }
    SUBCASE("F_9, k=2 has (81-1)/8 = 10 directions") {
        const GFContext f9(3, 2);
        CHECK(projective_normals(f9, 2).size() == 10);
    }
}

TEST_CASE("projective normals cover every nonzero vector exactly once up to scale") {
    for (auto [p, m, k] : {std::tuple{2u, 1u, 3u}, {3u, 1u, 2u}, {3u, 2u, 2u}, {5u, 1u, 2u},
                           {7u, 1u, 3u}, {3u, 1u, 5u}}) {
        const GFContext f(p, m);
        const std::uint32_t q = f.q();
        const auto reps = projective_normals(f, k);

        std::size_t qk = 1;
        for (std::uint32_t i = 0; i < k; ++i) qk *= q;
        CHECK(reps.size() == (qk - 1) / (q - 1));

        // Exhaustive: each nonzero vector is a scalar multiple of exactly
        // one representative.
        for (std::size_t code = 1; code < qk; ++code) {
            std::vector<GFContext::Elem> vec(k);
            std::size_t rest = code;
            for (std::size_t i = k; i-- > 0;) {
                vec[i] = static_cast<GFContext::Elem>(rest % q);
                rest /= q;
            }
            std::size_t matches = 0;
            for (const auto& rep : reps) {
                for (std::uint32_t scale = 1; scale < q; ++scale) {
                    bool equal = true;
                    for (std::size_t i = 0; i < k; ++i)
                        equal &= f.mul(rep.coords[i], scale) == vec[i];
                    matches += equal;
                }
            }
            CHECK(matches == 1);
        }
    }
}
