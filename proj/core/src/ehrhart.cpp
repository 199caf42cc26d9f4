#include "qpc/ehrhart.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <utility>

#include "qpc/error.hpp"

namespace qpc {

namespace {

Rat extent_sum(const std::vector<Point2>& vs) {
    Rat xmin = vs[0].x, xmax = vs[0].x, ymin = vs[0].y, ymax = vs[0].y;
    for (const auto& v : vs) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    return (xmax - xmin) + (ymax - ymin);
}

// Unimodular shears to balance the bounding box. Counting is GL_2(Z)-invariant,
// and a skinny polygon (e.g. the dual of a large Markov triangle) scans orders
// of magnitude faster after reduction.
Polygon reduce_extents(const Polygon& polygon) {
    std::vector<Point2> vs = polygon.vertices();
    Rat best = extent_sum(vs);
    for (int round = 0; round < 64; ++round) {
        bool improved = false;
        std::vector<std::pair<bool, Int>> cands;  // (shear x by t*y?, t)
        const std::size_t n = vs.size();
        for (std::size_t i = 0; i < n; ++i) {
            const Point2 d = vs[(i + 1) % n] - vs[i];
            if (d.y != 0) {
                const Rat t0 = -d.x / d.y;
                cands.emplace_back(true, rat_floor(t0));
                cands.emplace_back(true, rat_ceil(t0));
            }
            if (d.x != 0) {
                const Rat t0 = -d.y / d.x;
                cands.emplace_back(false, rat_floor(t0));
                cands.emplace_back(false, rat_ceil(t0));
            }
        }
        for (const auto& [shear_x, t] : cands) {
            if (t == 0) continue;
            std::vector<Point2> w = vs;
            for (auto& p : w) {
                if (shear_x)
                    p.x += Rat(t) * p.y;
                else
                    p.y += Rat(t) * p.x;
            }
            const Rat e = extent_sum(w);
            if (e < best) {
                best = e;
                vs = std::move(w);
                improved = true;
            }
        }
        if (!improved) break;
    }
    return Polygon::hull_of(vs);
}

struct RowBounds {
    bool empty = false;
    Int lo, hi;
    bool has_lo = false, has_hi = false;
};

long long ll_floor_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

long long ll_ceil_div(long long a, long long b) {
    long long q = a / b;
    if ((a % b != 0) && ((a < 0) == (b < 0))) ++q;
    return q;
}

}  // namespace

PointCounter::PointCounter(const Polygon& polygon) {
    const Polygon reduced = reduce_extents(polygon);
    planes_ = reduced.half_planes();
    ymin_ = reduced.vertices()[0].y;
    ymax_ = ymin_;
    for (const auto& v : reduced.vertices()) {
        ymin_ = std::min(ymin_, v.y);
        ymax_ = std::max(ymax_, v.y);
    }
    // conservative per-row operand bound at dilation k: magnitude_ * (k + 1)
    Rat extent(0);
    for (const auto& v : reduced.vertices()) {
        Rat ax = abs(v.x), ay = abs(v.y);
        if (ax > extent) extent = ax;
        if (ay > extent) extent = ay;
    }
    const Int e = rat_ceil(extent) + 1;
    Int coeff(1);
    for (const auto& h : planes_) {
        Int m = abs(h.a);
        if (abs(h.b) > m) m = abs(h.b);
        if (abs(h.c) > m) m = abs(h.c);
        if (m > coeff) coeff = m;
    }
    magnitude_ = coeff * (e + 1) * 2;
}

Int PointCounter::count(const Int& k) const {
    if (k < 0) fail(Errc::invariant_violation, "negative dilation");
    if (k == 0) return 1;  // 0P = {0}

    const Int ylo = rat_ceil(Rat(k) * ymin_);
    const Int yhi = rat_floor(Rat(k) * ymax_);
    if (yhi < ylo) return 0;

    // int64 fast path: the 2^31 guard keeps every per-row operand, every
    // product and the accumulated count inside 64 bits
    static const Int kInt64Guard = (Int(1) << 31);
    if (magnitude_ * (k + 1) < kInt64Guard) {
        struct Row {
            long long a, b, ck;
        };
        std::vector<Row> rows;
        rows.reserve(planes_.size());
        for (const auto& h : planes_)
            rows.push_back({h.a.get_si(), h.b.get_si(), Int(h.c * k).get_si()});
        const long long y0 = ylo.get_si(), y1 = yhi.get_si();
        unsigned long long total = 0;
        for (long long y = y0; y <= y1; ++y) {
            long long xlo = std::numeric_limits<long long>::min();
            long long xhi = std::numeric_limits<long long>::max();
            bool ok = true;
            for (const auto& r : rows) {
                const long long t = r.ck - r.b * y;
                if (r.a == 0) {
                    if (t < 0) {
                        ok = false;
                        break;
                    }
                } else if (r.a > 0) {
                    xhi = std::min(xhi, ll_floor_div(t, r.a));
                } else {
                    xlo = std::max(xlo, ll_ceil_div(t, r.a));
                }
            }
            if (ok && xhi >= xlo) total += static_cast<unsigned long long>(xhi - xlo + 1);
        }
        return Int(static_cast<unsigned long>(total));
    }

    // exact big-integer path
    Int total(0);
    for (Int y = ylo; y <= yhi; ++y) {
        RowBounds rb;
        for (const auto& h : planes_) {
            const Int t = h.c * k - h.b * y;
            if (h.a == 0) {
                if (t < 0) {
                    rb.empty = true;
                    break;
                }
            } else if (h.a > 0) {
                const Int v = floor_div(t, h.a);
                if (!rb.has_hi || v < rb.hi) rb.hi = v;
                rb.has_hi = true;
            } else {
                const Int v = ceil_div(t, h.a);
                if (!rb.has_lo || v > rb.lo) rb.lo = v;
                rb.has_lo = true;
            }
        }
        if (rb.empty) continue;
        if (!rb.has_lo || !rb.has_hi) fail(Errc::invariant_violation, "unbounded scan row");
        if (rb.hi >= rb.lo) total += rb.hi - rb.lo + 1;
    }
    return total;
}

Int count_points(const Polygon& polygon, const Int& k) { return PointCounter(polygon).count(k); }

QuasiPolynomial QuasiPolynomial::create(Int period, std::vector<std::array<Rat, 3>> constituents) {
    if (period < 1 || constituents.size() != period)
        fail(Errc::inconsistent_fit, "constituent count does not match period");
    if (constituents[0][2] != 1)
        fail(Errc::inconsistent_fit, "constant term of class 0 is not 1");
    for (const auto& c : constituents)
        if (c[0] != constituents[0][0])
            fail(Errc::inconsistent_fit, "leading coefficients differ across classes");
    return QuasiPolynomial{std::move(period), std::move(constituents)};
}

Rat QuasiPolynomial::evaluate(const Int& k) const {
    Int i;
    mpz_mod(i.get_mpz_t(), k.get_mpz_t(), period.get_mpz_t());
    const auto& c = constituents[i.get_ui()];
    return c[0] * k * k + c[1] * k + c[2];
}

QuasiPolynomial quasi_polynomial(const Polygon& polygon) {
    const Int r = polygon.denominator();
    if (!r.fits_slong_p() || r.get_si() > 5'000'000)
        fail(Errc::invariant_violation, "denominator too large to fit: " + r.get_str());
    const long rl = r.get_si();
    const PointCounter counter(polygon);

    std::vector<std::array<Rat, 3>> cons;
    cons.reserve(rl);
    for (long i = 0; i < rl; ++i) {
        const Int k0(i), k1(i + rl), k2(i + 2 * rl), kv(i + 3 * rl);
        const Rat y0(counter.count(k0)), y1(counter.count(k1)), y2(counter.count(k2));
        // exact Lagrange fit through three equally spaced samples
        const Rat d01(Int(k0 - k1)), d02(Int(k0 - k2)), d12(Int(k1 - k2));
        const Rat s12(Int(k1 + k2)), s02(Int(k0 + k2)), s01(Int(k0 + k1));
        const Rat p12(Int(k1 * k2)), p02(Int(k0 * k2)), p01(Int(k0 * k1));
        const Rat c2 = y0 / (d01 * d02) - y1 / (d01 * d12) + y2 / (d02 * d12);
        const Rat c1 =
            -(y0 * s12 / (d01 * d02) - y1 * s02 / (d01 * d12) + y2 * s01 / (d02 * d12));
        const Rat c0 = y0 * p12 / (d01 * d02) - y1 * p02 / (d01 * d12) + y2 * p01 / (d02 * d12);
        // the fourth sample is always spent on validation
        if (c2 * kv * kv + c1 * kv + c0 != Rat(counter.count(kv)))
            fail(Errc::inconsistent_fit,
                 "validation sample k=" + kv.get_str() + " disagrees with the fitted constituent");
        cons.push_back({c2, c1, c0});
    }
    return QuasiPolynomial::create(r, std::move(cons));
}

Int quasi_period(const QuasiPolynomial& qp) { return minimize_period(qp).period; }

QuasiPolynomial minimize_period(const QuasiPolynomial& qp) {
    const long r = qp.period.get_si();
    for (long s = 1; s <= r; ++s) {
        if (r % s != 0) continue;
        bool ok = true;
        for (long i = 0; i < r && ok; ++i)
            ok = qp.constituents[i] == qp.constituents[(i + s) % r];
        if (ok) {
            std::vector<std::array<Rat, 3>> cons(qp.constituents.begin(),
                                                 qp.constituents.begin() + s);
            return QuasiPolynomial::create(Int(s), std::move(cons));
        }
    }
    return qp;  // unreachable: s = r always matches
}

EhrhartSeries ehrhart_series(const Polygon& polygon, long n) {
    return ehrhart_series(polygon, n, quasi_polynomial(polygon));
}

EhrhartSeries ehrhart_series(const Polygon& polygon, long n, const QuasiPolynomial& qp) {
    if (n < 0) fail(Errc::invariant_violation, "series length must be nonnegative");
    const PointCounter counter(polygon);
    EhrhartSeries s;
    s.values.reserve(n + 1);
    for (long k = 0; k <= n; ++k) {
        Int v = counter.count(Int(k));
        if (Rat(v) != qp.evaluate(Int(k)))
            fail(Errc::inconsistent_fit, "series value at k=" + std::to_string(k) +
                                             " disagrees with the quasi-polynomial");
        s.values.push_back(std::move(v));
    }
    return s;
}

}  // namespace qpc
