#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qpc/geometry.hpp"
#include "qpc/rational.hpp"

namespace qpc {

/// Cyclic quotient singularity of type 1/R(1,A), stored with the canonical
/// weight A = min(A, A^{-1} mod R) so that swapping cone generators yields an
/// equal value. gcd(R, A) = 1 always; smooth iff R = 1.
struct QuotientSingularity {
    Int order;   // R
    Int weight;  // A, canonical

    static QuotientSingularity make(const Int& order, const Int& weight);
    bool smooth() const { return order == 1; }
    std::string str() const;  // "1/R(1,A)"

    friend bool operator==(const QuotientSingularity& a, const QuotientSingularity& b) {
        return a.order == b.order && a.weight == b.weight;
    }
    friend bool operator<(const QuotientSingularity& a, const QuotientSingularity& b) {
        return a.order != b.order ? a.order < b.order : a.weight < b.weight;
    }
};

/// Local index l = R/gcd(R, A+1), width k = gcd(R, A+1), the division
/// k = d*l + remainder, and the residue (present iff remainder != 0).
struct SingularityData {
    QuotientSingularity type;
    Int local_index;  // l
    Int width;        // k
    Int d;
    Int remainder;  // rho, 0 <= rho < l
    std::optional<QuotientSingularity> residue;
};

/// Multiset of singularity types.
using Basket = std::map<QuotientSingularity, long>;

/// Singularity content of a Fano polygon: total T-cone count d, the basket of
/// nonempty residues, and the local index of every spanning-fan cone (sorted).
struct SingularityContent {
    Int total_d;
    Basket basket;
    std::vector<Int> t_indices;

    friend bool operator==(const SingularityContent& a, const SingularityContent& b) {
        return a.total_d == b.total_d && a.basket == b.basket && a.t_indices == b.t_indices;
    }
};

/// R = |det(g1, g2)|; reduce to the model cone((0,1), (R,-A)) by a unimodular
/// map and canonicalise. DegenerateCone when the generators are dependent.
QuotientSingularity classify_cone(const Cone2& cone);

struct IndexWidth {
    Int local_index, width;
};
IndexWidth index_width(const QuotientSingularity& s);

/// T iff the local index divides the width (qG-smoothable);
/// R iff width < local index (qG-rigid). Both false when k > l, l ∤ k.
bool is_T(const QuotientSingularity& s);
bool is_R(const QuotientSingularity& s);

/// Residue of the cone: 1/(rho*l)(1, rho*(A+1)/k - 1) when rho != 0, empty
/// otherwise. (A+1)/k is asserted integral (NonIntegralResidue).
SingularityData residue(const QuotientSingularity& s);

SingularityContent singularity_content(const FanoPolygon& polygon);

/// lcm of all cone local indices; equals denominator(dual(polygon)).
Int gorenstein_index(const FanoPolygon& polygon);

Int basket_size(const Basket& basket);
void basket_insert(Basket& basket, const QuotientSingularity& s, long count = 1);
/// Sorted "N x 1/R(1,A)" lines, e.g. {"2 x 1/4(1,3)", "1 x 1/8(1,3)"}.
std::vector<std::string> basket_strings(const Basket& basket);

}  // namespace qpc
