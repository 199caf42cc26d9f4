#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qpc/geometry.hpp"
#include "qpc/rational.hpp"

namespace qpc {

/// Mutation data (w, F): primitive covector w, primitive direction f with
/// w(f) = 0, and factor length m >= 1, so F = conv{0, m*f}.
struct MutationData {
    Vec2 w;
    Vec2 f;
    Int m;

    static MutationData make(const Vec2& w, const Vec2& f, const Int& m);
    MutationData inverse() const { return {-w, f, m}; }

    friend bool operator==(const MutationData& a, const MutationData& b) {
        return a.w == b.w && a.f == b.f && a.m == b.m;
    }
    friend bool operator<(const MutationData& a, const MutationData& b);
};

/// Lattice segment base + [0, len] * dir on a height line; len = 0 is a point.
struct LatticeSegment {
    Vec2 base;
    Vec2 dir;  // primitive
    Int len;   // >= 0
};

/// Chosen R_h per negative height (h_min <= h < 0); absent entry = empty.
struct FactorWitness {
    std::map<Int, std::optional<LatticeSegment>> rows;
};

/// Checks the slice-covering condition at every negative height and returns the
/// maximal-Minkowski-difference witness. FactorTooLong(h) when a slice
/// carrying vertices is too short; VertexNotCovered for a custom witness that
/// misses one.
FactorWitness validate_factor(const FanoPolygon& polygon, const MutationData& data);

/// Rearranged polygon: hull of all R_h (h < 0) and w_h(P) + hF (h >= 0),
/// returned with canonical vertex ordering. Always Fano.
FanoPolygon mutate(const FanoPolygon& polygon, const MutationData& data);
/// Same, but with a caller-supplied witness (validated first).
FanoPolygon mutate_with_witness(const FanoPolygon& polygon, const MutationData& data,
                                const FactorWitness& witness);
/// Slice engine with explicit factor length >= 0; length 0 is the point
/// factor, for which the mutation is the identity.
FanoPolygon mutate_with_factor_length(const FanoPolygon& polygon, const Vec2& w, const Vec2& f,
                                      const Int& m);

/// The induced piecewise-GL_2(Z) map on M_Q: identity on {u : u(f) >= 0},
/// u -> u - m*u(f)*w on {u : u(f) <= 0}; the pieces agree on the wall.
struct PiecewiseMap {
    struct Piece {
        Vec2 gate;          // chamber = {u : u(gate) >= 0}
        UnimodularMap map;  // acts linearly inside the chamber
    };
    std::vector<Piece> pieces;

    const UnimodularMap& piece_for(const Point2& u) const;
};

PiecewiseMap dual_map(const MutationData& data);

/// Image of a polygon: split along the chamber wall, map each piece, hull the
/// union. The image of a dual polygon under a valid mutation's map is convex;
/// NonConvexImage (checked via exact piece areas) signals a bug.
Polygon apply_dual_map(const PiecewiseMap& map, const Polygon& polygon);

/// All single mutations out of P per the edge procedure: for each edge with
/// singularity content d >= 1 and each factor length m in 1..d that validates,
/// the data (w = inner normal, f = primitive edge direction) and the mutant in
/// normal form.
std::vector<std::pair<MutationData, FanoPolygon>> mutation_neighbors(const FanoPolygon& polygon);

/// Breadth-first mutation graph up to `depth`, nodes deduplicated by normal
/// form and sorted; edges labelled by the discovered mutation data.
struct MutationGraph {
    struct Edge {
        std::size_t source, target;
        MutationData data;
    };
    std::vector<FanoPolygon> nodes;  // sorted normal forms
    std::vector<Edge> edges;         // sorted by (source, target, data)
};

MutationGraph mutation_graph(const FanoPolygon& start, long depth);

}  // namespace qpc
