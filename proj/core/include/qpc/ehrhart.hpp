#pragma once

#include <array>
#include <vector>

#include "qpc/geometry.hpp"
#include "qpc/rational.hpp"

namespace qpc {

/// Degree-2 quasi-polynomial: one (c2, c1, c0) constituent per residue class
/// modulo `period`. evaluate(k) uses the constituent of k mod period.
/// All ops in this module are pure; counting distinct dilates is safe to run
/// concurrently.
struct QuasiPolynomial {
    Int period;
    std::vector<std::array<Rat, 3>> constituents;

    /// Validates: period >= 1, one constituent per class, c0(0) == 1 and a
    /// shared leading coefficient (both are theorems for counting data, so a
    /// violation is an implementation bug and throws InconsistentFit).
    static QuasiPolynomial create(Int period, std::vector<std::array<Rat, 3>> constituents);

    Rat evaluate(const Int& k) const;
    friend bool operator==(const QuasiPolynomial& a, const QuasiPolynomial& b) {
        return a.period == b.period && a.constituents == b.constituents;
    }
};

/// First n+1 values L_P(0..n); nonnegative integers with entry 0 equal to 1.
struct EhrhartSeries {
    std::vector<Int> values;
};

/// Exact |kP ∩ Z^2| by scanline: iterate integer rows over the bounding box
/// of kP and solve each row's x-interval from the edge inequalities.
/// Reuses precomputed (unimodularly reduced) edge data across many k.
class PointCounter {
public:
    explicit PointCounter(const Polygon& polygon);
    Int count(const Int& k) const;

private:
    std::vector<HalfPlane> planes_;  // of the reduced polygon
    Rat ymin_, ymax_;
    Int magnitude_;  // conservative per-row operand bound at k = 1
};

Int count_points(const Polygon& polygon, const Int& k);

/// Fit with period r = denominator(polygon): per residue class i, a quadratic
/// through the exact counts at k = i, i+r, i+2r; a fourth sample at i+3r is
/// always spent on validation (InconsistentFit on disagreement).
QuasiPolynomial quasi_polynomial(const Polygon& polygon);

/// Minimal period: smallest divisor s of qp.period with classes i and i+s
/// equal for all i.
Int quasi_period(const QuasiPolynomial& qp);
/// Same, but returns the re-indexed view with the minimal period.
QuasiPolynomial minimize_period(const QuasiPolynomial& qp);

/// L_P(0..n), each value verified against the quasi-polynomial evaluation.
EhrhartSeries ehrhart_series(const Polygon& polygon, long n);
EhrhartSeries ehrhart_series(const Polygon& polygon, long n, const QuasiPolynomial& qp);

}  // namespace qpc
