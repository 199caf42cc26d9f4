#include <doctest.h>

#include <set>

#include "qpc/error.hpp"
#include "qpc/geometry.hpp"
#include "qpc/singularity.hpp"
#include "support/corpus.hpp"

using namespace qpc;
using namespace qpctest;

TEST_CASE("polygon construction is canonical and strict") {
    const Polygon p = make_polygon({{"1", "0"}, {"-1", "-1"}, {"0", "1"}});
    // CCW from the lexicographically smallest vertex, regardless of input order
    CHECK(p.vertices()[0] == pt("-1", "-1"));
    CHECK(p.vertices()[1] == pt("1", "0"));
    CHECK(p.vertices()[2] == pt("0", "1"));

    CHECK_THROWS_WITH_AS(
        (void)make_polygon({{"0", "0"}, {"1", "0"}, {"2", "0"}}), doctest::Contains("3 non-collinear"),
        Error);
    // repeated vertex
    CHECK_THROWS_AS((void)make_polygon({{"1", "0"}, {"1", "0"}, {"0", "1"}, {"-1", "-1"}}), Error);
    // collinear middle point is not a vertex
    CHECK_THROWS_AS(
        (void)make_polygon({{"1", "0"}, {"0", "1"}, {"-1", "-1"}, {"0", "-1/2"}}), Error);
    // hull_of absorbs the same point silently
    CHECK(Polygon::hull_of({pt("1", "0"), pt("0", "1"), pt("-1", "-1"), pt("0", "-1/2")}).size() ==
          3);
}

TEST_CASE("validate_fano examples") {
    CHECK_NOTHROW((void)make_fano({{1, 0}, {0, 1}, {-1, -1}}));

    CHECK_THROWS_WITH_AS((void)make_fano({{2, 0}, {0, 1}, {-1, -1}}), doctest::Contains("(2,0)"),
                         Error);
    try {
        (void)make_fano({{2, 0}, {0, 1}, {-1, -1}});
    } catch (const Error& e) {
        CHECK(e.code() == Errc::non_primitive_vertex);
    }

    try {
        (void)make_fano({{1, 0}, {0, 1}, {1, 1}});
        FAIL("expected OriginNotInterior");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::origin_not_interior);
    }

    try {
        (void)FanoPolygon::validate(make_polygon({{"1", "0"}, {"0", "1"}, {"-1", "-1/2"}}));
        FAIL("expected NonIntegralVertex");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::non_integral_vertex);
    }
}

TEST_CASE("dual examples") {
    CHECK(dual(p2_triangle()) == make_polygon({{"-1", "-1"}, {"2", "-1"}, {"-1", "2"}}));
    CHECK(dual(p114_triangle()) == make_polygon({{"-1", "-1"}, {"5", "-1"}, {"-1", "1/2"}}));
    CHECK(dual(make_fano({{1, 0}, {0, 1}, {-1, 0}, {0, -1}})) ==
          make_polygon({{"-1", "-1"}, {"1", "-1"}, {"1", "1"}, {"-1", "1"}}));
}

TEST_CASE("denominator examples") {
    CHECK(make_polygon({{"5", "-1"}, {"-1", "-1"}, {"-1", "1/2"}}).denominator() == 2);
    CHECK(make_polygon({{"-1", "-1"}, {"2", "-1"}, {"-1", "2"}}).denominator() == 1);
    CHECK(dual(p113_triangle()).denominator() == 3);
}

TEST_CASE("spanning fan reads edges cyclically") {
    const auto fan = p2_triangle().spanning_fan();
    REQUIRE(fan.size() == 3);
    // canonical vertex order is [(-1,-1), (1,0), (0,1)]
    CHECK(fan[0].g1 == Vec2{Int(-1), Int(-1)});
    CHECK(fan[0].g2 == Vec2{Int(1), Int(0)});
    CHECK(fan[2].g2 == Vec2{Int(-1), Int(-1)});

    const auto fanq = p114_triangle().spanning_fan();
    REQUIRE(fanq.size() == 3);
    bool found = false;
    for (const auto& c : fanq)
        found = found || (c.g1 == Vec2{Int(-1), Int(-4)} && c.g2 == Vec2{Int(1), Int(0)}) ||
                (c.g1 == Vec2{Int(1), Int(0)} && c.g2 == Vec2{Int(-1), Int(-4)});
    CHECK(found);  // the 1/4(1,1) cone, read cyclically

    CHECK(make_fano({{1, 0}, {0, 1}, {-1, 0}, {0, -1}}).spanning_fan().size() == 4);
}

TEST_CASE("apply_map examples") {
    const Polygon top_cell = make_polygon({{"2", "-1"}, {"-1", "2"}, {"-1", "1/2"}});
    CHECK(apply_map(UnimodularMap::identity(), top_cell) == top_cell);

    // the scissor move: e1 -> (3,-1), e2 -> (4,-1) maps the top cell of the
    // partitioned lattice triangle onto the rational flap of the skinny one
    const UnimodularMap u = make_unimodular(Int(3), Int(4), Int(-1), Int(-1));
    const Polygon image = apply_map(u, top_cell);
    CHECK(image == make_polygon({{"2", "-1"}, {"5", "-1"}, {"-1", "1/2"}}));
    const Polygon bottom_cell = make_polygon({{"-1", "-1"}, {"2", "-1"}, {"-1", "1/2"}});
    std::vector<Point2> all = image.vertices();
    for (const auto& v : bottom_cell.vertices()) all.push_back(v);
    CHECK(Polygon::hull_of(all) == make_polygon({{"5", "-1"}, {"-1", "-1"}, {"-1", "1/2"}}));

    const UnimodularMap swap = make_unimodular(Int(0), Int(1), Int(1), Int(0));
    CHECK(apply_map(swap, p2_triangle()) == p2_triangle());
}

TEST_CASE("unimodular map validation") {
    CHECK_THROWS_AS(make_unimodular(Int(2), Int(0), Int(0), Int(1)), Error);
    const auto u = make_unimodular(Int(3), Int(4), Int(-1), Int(-1));
    CHECK(u.inverse() * u == UnimodularMap::identity());
}

TEST_CASE("normal form: examples") {
    const auto p2 = p2_triangle();
    const UnimodularMap shear = make_unimodular(Int(1), Int(1), Int(0), Int(1));
    CHECK(normal_form(apply_map(shear, p2)) == normal_form(p2));
    CHECK(normal_form(normal_form(p2)) == normal_form(p2));
    // distinct orbits: normalised volumes differ (3 vs 6)
    CHECK_FALSE(normal_form(p2) == normal_form(p114_triangle()));
}

TEST_CASE("normal form is constant on GL2(Z)-orbits") {
    Rng rng(20260811);
    for (int i = 0; i < 500; ++i) {
        const FanoPolygon p = random_fano(rng, 7, 3, 5);
        const UnimodularMap u = random_unimodular(rng);
        CAPTURE(p.polygon().str());
        REQUIRE(normal_form(apply_map(u, p)) == normal_form(p));
    }
}

TEST_CASE("dual involution and cyclic correspondence") {
    Rng rng(424242);
    for (int i = 0; i < 120; ++i) {
        const FanoPolygon p = random_fano(rng, 8, 3, 5);
        const Polygon d = dual(p.polygon());
        CAPTURE(p.polygon().str());
        REQUIRE(dual(d) == p.polygon());
        REQUIRE(d.size() == p.size());  // one dual vertex per edge

        // each dual vertex pairs to -1 exactly on its edge's endpoints
        const auto& vs = p.vertices();
        const std::size_t n = vs.size();
        // find the rotation: dual vertices are canonically reordered
        for (std::size_t e = 0; e < n; ++e) {
            const Point2& a = vs[e];
            const Point2& b = vs[(e + 1) % n];
            bool matched = false;
            for (const auto& u : d.vertices())
                matched = matched || (u.x * a.x + u.y * a.y == -1 && u.x * b.x + u.y * b.y == -1);
            REQUIRE(matched);
        }
    }
}

TEST_CASE("dual vertices agree with the facet-enumeration oracle") {
    Rng rng(777);
    for (int i = 0; i < 60; ++i) {
        const FanoPolygon p = random_fano(rng, 9, 3, 6);
        REQUIRE(dual(p) == halfspace_dual_oracle(p.polygon()));
    }
}

TEST_CASE("denominator of dual equals lcm of edge local indices") {
    Rng rng(31337);
    for (int i = 0; i < 150; ++i) {
        const FanoPolygon p = random_fano(rng, 9, 3, 5);
        Int l(1);
        for (const auto& cone : p.spanning_fan()) {
            const Int li = index_width(classify_cone(cone)).local_index;
            mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), li.get_mpz_t());
        }
        REQUIRE(dual(p).denominator() == l);
    }
}
