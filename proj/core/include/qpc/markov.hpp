#pragma once

#include <vector>

#include "qpc/geometry.hpp"
#include "qpc/rational.hpp"

namespace qpc {

/// Markov triple a <= b <= c with a^2 + b^2 + c^2 = 3abc; members are
/// pairwise coprime and never divisible by 3 (validated).
struct MarkovTriple {
    Int a, b, c;

    static MarkovTriple make(const Int& a, const Int& b, const Int& c);
    friend bool operator==(const MarkovTriple& s, const MarkovTriple& t) {
        return s.a == t.a && s.b == t.b && s.c == t.c;
    }
    friend bool operator<(const MarkovTriple& s, const MarkovTriple& t);
    std::string str() const;
};

/// All triples with c <= max_c, generated from (1,1,1) by the exchange moves
/// (one coordinate replaced by 3*product of the others minus itself),
/// deduplicated as sorted triples, sorted output.
std::vector<MarkovTriple> markov_triples(const Int& max_c);

/// The Fano triangle of the plane with weights (a^2, b^2, c^2), built by
/// replaying the mutation chain from the triple (1,1,1) (triangle
/// conv{(1,0),(0,1),(-1,-1)}), one mutate call per tree edge; normal form.
/// NotReachable when the triple fails the Markov invariants.
FanoPolygon markov_triangle(const MarkovTriple& triple);

struct MarkovReport {
    MarkovTriple triple;
    std::vector<Int> indices;  // sorted local indices {a, b, c}
    Int r;                     // denominator of the dual = a*b*c
    Int pi;                    // measured quasi-period = 1
    FanoPolygon triangle;
};

/// Local indices computed both arithmetically (the modular-inverse formula,
/// with the never-taken 0 mod 3 branch raising an invariant violation) and
/// geometrically from the triangle's cones; both must agree and equal
/// {a, b, c}. r and pi are measured on the dual.
MarkovReport verify_markov(const MarkovTriple& triple);

}  // namespace qpc
