#pragma once

#include <utility>
#include <vector>

#include "qpc/ehrhart.hpp"
#include "qpc/geometry.hpp"
#include "qpc/singularity.hpp"

namespace qpc {

/// Polynomial part of the Ehrhart data of dual(P): value at k is
/// (K2/2)k^2 + (K2/2)k + 1 with K2 = 2*area(dual(P)) the anticanonical degree.
struct SmoothPart {
    Rat K2;
    Rat evaluate(const Int& k) const { return K2 / 2 * k * k + K2 / 2 * k + 1; }
};

/// K2 from the exact shoelace area of the dual, cross-checked against twice
/// the leading coefficient of the fitted quasi-polynomial
/// (LeadingCoefficientMismatch on disagreement).
SmoothPart smooth_part(const FanoPolygon& polygon);
SmoothPart smooth_part(const FanoPolygon& polygon, const QuasiPolynomial& qp_of_dual);

/// c(k) = L_dual(P)(k) - smooth(k): the periodic orbifold correction. Values
/// are computed for k in [0, 2r) and the second window must repeat the first
/// (NotPeriodic otherwise); one period is returned.
struct CorrectionFunction {
    Int period;
    std::vector<Rat> values;
};

CorrectionFunction correction(const FanoPolygon& polygon);

/// The R-singularity of equal local index and complementary width: gluing its
/// cone onto a realisation of s yields a width-l height-l T-cone. Involution.
QuotientSingularity complementary_type(const QuotientSingularity& s);

/// Greedy extraction of complementary pairs (in sorted order) until none
/// remains; the leftover is the reduced basket.
struct BasketSplit {
    Basket reduced;
    std::vector<std::pair<QuotientSingularity, QuotientSingularity>> invisible;
    bool pairing_complete;  // no complementary pair remains in `reduced`
};

BasketSplit split_basket(const Basket& basket);

/// Predicted vs measured quasi-period and denominator for dual(P).
/// pairing_complete additionally requires measured_pi == predicted_pi: a
/// mismatch signals a cancelling tuple beyond pairs, which the pair rule
/// cannot see; such reports are findings, not errors.
struct CollapseReport {
    Int measured_pi, measured_r;
    Int predicted_pi, predicted_r;
    Rat predicted_discrepancy;
    bool pairing_complete;
    bool consistent;
    SingularityContent content;
    BasketSplit split;
};

CollapseReport predict(const FanoPolygon& polygon);

}  // namespace qpc
