#include <doctest.h>

#include "qpc/ehrhart.hpp"
#include "qpc/error.hpp"
#include "qpc/mutation.hpp"
#include "qpc/singularity.hpp"
#include "support/corpus.hpp"

using namespace qpc;
using namespace qpctest;

namespace {

MutationData example_data() {
    return MutationData::make(Vec2{Int(2), Int(-1)}, Vec2{Int(-1), Int(-2)}, Int(1));
}

}  // namespace

TEST_CASE("mutation data invariants") {
    CHECK_THROWS_AS(MutationData::make(Vec2{Int(2), Int(-2)}, Vec2{Int(1), Int(1)}, Int(1)),
                    Error);  // w not primitive
    CHECK_THROWS_AS(MutationData::make(Vec2{Int(2), Int(-1)}, Vec2{Int(-1), Int(-2)}, Int(0)),
                    Error);  // zero length
    CHECK_THROWS_AS(MutationData::make(Vec2{Int(2), Int(-1)}, Vec2{Int(1), Int(1)}, Int(1)),
                    Error);  // w(f) != 0
}

TEST_CASE("validate_factor examples") {
    const auto witness = validate_factor(p2_triangle(), example_data());
    REQUIRE(witness.rows.size() == 1);
    const auto& row = witness.rows.at(Int(-1));
    REQUIRE(row.has_value());
    CHECK(row->len == 0);  // a single point
    CHECK(row->base == Vec2{Int(0), Int(1)});

    try {
        (void)validate_factor(p2_triangle(),
                              MutationData::make(Vec2{Int(2), Int(-1)}, Vec2{Int(-1), Int(-2)},
                                                 Int(2)));
        FAIL("expected FactorTooLong");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::factor_too_long);
        CHECK(std::string(e.what()).find("-1") != std::string::npos);
    }

    // a long enough slice admits a witness
    const FanoPolygon square = make_fano({{1, 1}, {-1, 1}, {-1, -1}, {1, -1}});
    const auto w2 = validate_factor(
        square, MutationData::make(Vec2{Int(0), Int(-1)}, Vec2{Int(1), Int(0)}, Int(1)));
    REQUIRE(w2.rows.at(Int(-1)).has_value());
    CHECK(w2.rows.at(Int(-1))->len == 1);
}

TEST_CASE("mutate: rearranging the P2 triangle, and inverses") {
    const FanoPolygon q = mutate(p2_triangle(), example_data());
    CHECK(q == p114_triangle());

    // the inverse data restores the original polygon
    const FanoPolygon back = mutate(q, example_data().inverse());
    CHECK(normal_form(back) == normal_form(p2_triangle()));
    CHECK(back == p2_triangle());  // literally, with the maximal witness

    // point factor: the mutation is the identity
    const FanoPolygon same = mutate_with_factor_length(
        p2_triangle(), Vec2{Int(2), Int(-1)}, Vec2{Int(-1), Int(-2)}, Int(0));
    CHECK(same == p2_triangle());
}

TEST_CASE("dual_map examples") {
    const PiecewiseMap pm = dual_map(example_data());
    REQUIRE(pm.pieces.size() == 2);
    CHECK(pm.pieces[0].map == UnimodularMap::identity());
    CHECK(pm.pieces[1].map == make_unimodular(Int(3), Int(4), Int(-1), Int(-1)));

    // pieces agree on the wall u(f) = 0, e.g. u = (2,-1) and u = (-2,1)
    for (const auto& u : {Point2{Rat(2), Rat(-1)}, Point2{Rat(-2), Rat(1)}, Point2{Rat(0), Rat(0)}}) {
        CHECK(pm.pieces[0].map(u) == pm.pieces[1].map(u));
    }

    // m = 2 doubles the shear on the second chamber
    const PiecewiseMap pm2 =
        dual_map(MutationData::make(Vec2{Int(2), Int(-1)}, Vec2{Int(-1), Int(-2)}, Int(2)));
    const Point2 u{Rat(1), Rat(0)};  // u(f) = -1
    CHECK(pm2.pieces[1].map(u) == Point2{Rat(1) + 2 * Rat(2), Rat(0) + 2 * Rat(-1)});
}

TEST_CASE("apply_dual_map examples") {
    const PiecewiseMap pm = dual_map(example_data());
    const Polygon d2 = dual(p2_triangle());
    const Polygon image = apply_dual_map(pm, d2);
    CHECK(image == make_polygon({{"-1", "-1"}, {"5", "-1"}, {"-1", "1/2"}}));
    CHECK(image == dual(mutate(p2_triangle(), example_data())));

    // identity map leaves the polygon unchanged
    PiecewiseMap id;
    id.pieces.push_back({Vec2{Int(1), Int(0)}, UnimodularMap::identity()});
    id.pieces.push_back({Vec2{Int(-1), Int(0)}, UnimodularMap::identity()});
    CHECK(apply_dual_map(id, d2) == d2);

    // Ehrhart check: counts of image = counts of preimage for k <= 6
    for (long k = 0; k <= 6; ++k)
        CHECK(count_points(image, Int(k)) == count_points(d2, Int(k)));
}

TEST_CASE("mutation_neighbors examples") {
    const auto nb_p2 = mutation_neighbors(p2_triangle());
    REQUIRE(nb_p2.size() == 3);
    const FanoPolygon nf114 = normal_form(p114_triangle());
    for (const auto& [data, mutant] : nb_p2) CHECK(mutant == nf114);

    // the R-cone edge of P(1,1,3) admits no mutation (d = 0)
    const auto nb_113 = mutation_neighbors(p113_triangle());
    CHECK(nb_113.size() == 2);  // only the two smooth edges move

    const auto nb_q = mutation_neighbors(p114_triangle());
    bool found_p2 = false;
    for (const auto& [data, mutant] : nb_q)
        found_p2 = found_p2 || mutant == normal_form(p2_triangle());
    CHECK(found_p2);
}

TEST_CASE("mutation_graph examples") {
    CHECK(mutation_graph(p2_triangle(), 0).nodes.size() == 1);

    // depth 3 reaches both branches of the next tree level
    CHECK(mutation_graph(p2_triangle(), 3).nodes.size() == 5);

    const MutationGraph g = mutation_graph(p2_triangle(), 2);
    REQUIRE(g.nodes.size() == 3);
    // nodes are sorted normal forms; the deformation invariant (d, basket)
    // agrees on all of them (t_indices may differ: r is not preserved)
    const auto c0 = singularity_content(g.nodes[0]);
    for (const auto& node : g.nodes) {
        const auto ci = singularity_content(node);
        CHECK(ci.total_d == c0.total_d);
        CHECK(ci.basket == c0.basket);
    }
    for (std::size_t i = 0; i + 1 < g.nodes.size(); ++i) CHECK(g.nodes[i] < g.nodes[i + 1]);
    CHECK(!g.edges.empty());
    for (const auto& e : g.edges) {
        CHECK(e.source < g.nodes.size());
        CHECK(e.target < g.nodes.size());
    }
}

TEST_CASE("round trip, Fano-ness and content invariance on random mutations") {
    Rng rng(90210);
    int pairs = 0;
    while (pairs < 120) {
        const FanoPolygon p = random_fano(rng, 6, 3, 4);
        const auto nbs = mutation_neighbors(p);
        for (const auto& [data, mutant] : nbs) {
            // mutants are Fano: revalidate from scratch
            REQUIRE_NOTHROW(FanoPolygon::validate(mutant.polygon()));
            // invertibility (on the literal mutant, then compared in normal form)
            const FanoPolygon raw = mutate(p, data);
            REQUIRE(normal_form(mutate(raw, data.inverse())) == normal_form(p));
            // singularity content (d, basket) is a mutation invariant
            const auto cm = singularity_content(mutant);
            const auto cp = singularity_content(p);
            REQUIRE(cm.total_d == cp.total_d);
            REQUIRE(cm.basket == cp.basket);
            ++pairs;
        }
    }
}

TEST_CASE("Ehrhart data of the dual is preserved under mutation") {
    Rng rng(31415);
    int pairs = 0;
    while (pairs < 200) {
        const FanoPolygon p = random_fano_capped(rng, 6, 3, 4, 40);
        for (const auto& [data, mutant] : mutation_neighbors(p)) {
            if (dual(mutant).denominator() > 120) continue;  // keep the fit affordable
            REQUIRE(minimize_period(quasi_polynomial(dual(p))) ==
                    minimize_period(quasi_polynomial(dual(mutant))));
            ++pairs;
        }
    }
}

TEST_CASE("duality compatibility: the piecewise map transports the dual") {
    Rng rng(2020);
    int pairs = 0;
    while (pairs < 60) {
        const FanoPolygon p = random_fano(rng, 6, 3, 4);
        for (const auto& [data, mutant] : mutation_neighbors(p)) {
            const Polygon via_map = apply_dual_map(dual_map(data), dual(p));
            const Polygon direct = dual(mutate(p, data));
            REQUIRE(via_map == direct);
            ++pairs;
        }
    }
}

TEST_CASE("witness choice does not change the mutation class") {
    // the l = 2 edge of conv{(3,2),(-1,2),(-1,-2)} leaves the height -1 row
    // vertex-free, so R_{-1} is genuinely optional
    const FanoPolygon base = make_fano({{3, 2}, {-1, 2}, {-1, -2}});
    const MutationData data =
        MutationData::make(Vec2{Int(0), Int(-1)}, Vec2{Int(-1), Int(0)}, Int(1));
    const FactorWitness maximal = validate_factor(base, data);
    REQUIRE(maximal.rows.at(Int(-1)).has_value());
    REQUIRE(maximal.rows.at(Int(-1))->len >= 2);  // room to trim
    const FanoPolygon reference = mutate(base, data);
    CHECK(mutate_with_witness(base, data, maximal) == reference);

    FactorWitness dropped = maximal;
    dropped.rows.at(Int(-1)) = std::nullopt;
    CHECK(normal_form(mutate_with_witness(base, data, dropped)) == normal_form(reference));

    FactorWitness trimmed = maximal;
    trimmed.rows.at(Int(-1))->base = trimmed.rows.at(Int(-1))->base + trimmed.rows.at(Int(-1))->dir;
    trimmed.rows.at(Int(-1))->len = trimmed.rows.at(Int(-1))->len - 2;
    CHECK(normal_form(mutate_with_witness(base, data, trimmed)) == normal_form(reference));

    // a witness that misses a vertex-carrying height is rejected
    FactorWitness missing = maximal;
    missing.rows.at(Int(-2)) = std::nullopt;
    try {
        (void)mutate_with_witness(base, data, missing);
        FAIL("expected VertexNotCovered");
    } catch (const Error& e) {
        CHECK(e.code() == Errc::vertex_not_covered);
    }
}
