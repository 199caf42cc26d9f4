#pragma once

// Shared helpers for the unit, property and acceptance suites: concise
// polygon construction, seeded random generators and the independent oracles
// the property tests check against.

#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "qpc/collapse.hpp"
#include "qpc/ehrhart.hpp"
#include "qpc/error.hpp"
#include "qpc/geometry.hpp"
#include "qpc/singularity.hpp"

namespace qpctest {

using namespace qpc;

using Rng = std::mt19937_64;

inline Point2 pt(const std::string& x, const std::string& y) {
    return Point2{parse_rat(x), parse_rat(y)};
}

inline Polygon make_polygon(const std::vector<std::pair<std::string, std::string>>& verts) {
    std::vector<Point2> pts;
    for (const auto& [x, y] : verts) pts.push_back(pt(x, y));
    return Polygon::create(std::move(pts));
}

inline FanoPolygon make_fano(const std::vector<std::pair<long, long>>& verts) {
    std::vector<Point2> pts;
    for (const auto& [x, y] : verts) pts.push_back(Point2{Rat(x), Rat(y)});
    return FanoPolygon::validate(Polygon::create(std::move(pts)));
}

inline FanoPolygon p2_triangle() { return make_fano({{1, 0}, {0, 1}, {-1, -1}}); }
inline FanoPolygon p114_triangle() { return make_fano({{1, 0}, {0, 1}, {-1, -4}}); }
inline FanoPolygon p113_triangle() { return make_fano({{1, 0}, {0, 1}, {-1, -3}}); }

inline UnimodularMap random_unimodular(Rng& rng) {
    static const UnimodularMap gens[] = {
        {Int(0), Int(-1), Int(1), Int(0)},  // rotation
        {Int(1), Int(1), Int(0), Int(1)},   // shear
        {Int(1), Int(-1), Int(0), Int(1)},
        {Int(1), Int(0), Int(0), Int(-1)},  // reflection
    };
    UnimodularMap u = UnimodularMap::identity();
    std::uniform_int_distribution<int> len(3, 9), pick(0, 3);
    const int n = len(rng);
    for (int i = 0; i < n; ++i) u = u * gens[pick(rng)];
    return u;
}

/// Random Fano polygon with the requested vertex count range and coordinate
/// bound; resamples until every invariant holds.
inline FanoPolygon random_fano(Rng& rng, long bound, int nmin, int nmax) {
    std::uniform_int_distribution<long> coord(-bound, bound);
    std::uniform_int_distribution<int> nverts(nmin, nmax);
    for (;;) {
        const int n = nverts(rng);
        std::vector<Point2> pts;
        while (static_cast<int>(pts.size()) < n) {
            Vec2 v{Int(coord(rng)), Int(coord(rng))};
            if (v.x == 0 && v.y == 0) continue;
            pts.push_back(to_point(make_primitive(v)));
        }
        try {
            const Polygon hull = Polygon::hull_of(pts);
            if (static_cast<int>(hull.size()) != n) continue;
            return FanoPolygon::validate(hull);
        } catch (const Error&) {
            continue;
        }
    }
}

/// random_fano with a cap on denominator(dual), to keep quasi-polynomial
/// fits inside the suite's time budget.
inline FanoPolygon random_fano_capped(Rng& rng, long bound, int nmin, int nmax, long max_r) {
    for (;;) {
        FanoPolygon p = random_fano(rng, bound, nmin, nmax);
        if (dual(p).denominator() <= max_r) return p;
    }
}

/// Random lattice polygon (vertices need not be primitive, origin anywhere).
inline Polygon random_lattice_polygon(Rng& rng, long bound, int npts) {
    std::uniform_int_distribution<long> coord(-bound, bound);
    for (;;) {
        std::vector<Point2> pts;
        for (int i = 0; i < npts; ++i)
            pts.push_back(Point2{Rat(coord(rng)), Rat(coord(rng))});
        try {
            return Polygon::hull_of(pts);
        } catch (const Error&) {
            continue;
        }
    }
}

// ---------------------------------------------------------------------------
// Independent oracles (deliberately different algorithms from the library).
// ---------------------------------------------------------------------------

/// O(bbox^2) membership-loop lattice point count of kP.
inline Int brute_count(const Polygon& polygon, long k) {
    if (k == 0) return 1;
    Rat xmin = polygon.vertices()[0].x, xmax = xmin;
    Rat ymin = polygon.vertices()[0].y, ymax = ymin;
    for (const auto& v : polygon.vertices()) {
        xmin = std::min(xmin, v.x);
        xmax = std::max(xmax, v.x);
        ymin = std::min(ymin, v.y);
        ymax = std::max(ymax, v.y);
    }
    Int total(0);
    const Int x0 = rat_ceil(Rat(k) * xmin), x1 = rat_floor(Rat(k) * xmax);
    const Int y0 = rat_ceil(Rat(k) * ymin), y1 = rat_floor(Rat(k) * ymax);
    for (Int x = x0; x <= x1; ++x)
        for (Int y = y0; y <= y1; ++y)
            if (polygon.contains(Point2{Rat(x) / k, Rat(y) / k})) ++total;
    return total;
}

/// Facet-enumeration dual oracle: intersect every pair of supporting lines
/// {u(v_i) = -1}, keep the points satisfying all constraints, hull them.
inline Polygon halfspace_dual_oracle(const Polygon& polygon) {
    const auto& vs = polygon.vertices();
    std::vector<Point2> candidates;
    for (std::size_t i = 0; i < vs.size(); ++i) {
        for (std::size_t j = i + 1; j < vs.size(); ++j) {
            const Rat det = cross(vs[i], vs[j]);
            if (det == 0) continue;
            // u . v_i = -1, u . v_j = -1
            const Point2 u{-(vs[j].y - vs[i].y) / det, (vs[j].x - vs[i].x) / det};
            bool feasible = true;
            for (const auto& v : vs)
                if (u.x * v.x + u.y * v.y < -1) {
                    feasible = false;
                    break;
                }
            if (feasible) candidates.push_back(u);
        }
    }
    return Polygon::hull_of(candidates);
}

/// Normal-form T-singularity oracle: brute-force search for d, n, c with
/// R = d n^2, gcd(n, c) = 1 and weight (d n c - 1) mod R.
inline bool t_singularity_oracle(const QuotientSingularity& s) {
    const Int& big_r = s.order;
    for (Int d(1); d <= big_r; ++d) {
        if (big_r % d != 0) continue;
        const Int nn = big_r / d;
        const Int n = sqrt(nn);
        if (n * n != nn) continue;
        for (Int c(1); c <= n; ++c) {
            Int g;
            mpz_gcd(g.get_mpz_t(), n.get_mpz_t(), c.get_mpz_t());
            if (g != 1) continue;
            Int a;
            mpz_mod(a.get_mpz_t(), Int(d * n * c - 1).get_mpz_t(), big_r.get_mpz_t());
            try {
                if (QuotientSingularity::make(big_r, a) == s) return true;
            } catch (const Error&) {
                // (d n c - 1) not coprime to R: not a valid representation
            }
        }
    }
    return false;
}

/// Boundary lattice point count of a lattice polygon: sum of edge gcds.
inline Int boundary_lattice_points(const Polygon& polygon) {
    Int total(0);
    const auto& vs = polygon.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        const Point2 d = vs[(i + 1) % vs.size()] - vs[i];
        Int g;
        mpz_gcd(g.get_mpz_t(), d.x.get_num().get_mpz_t(), d.y.get_num().get_mpz_t());
        total += g;
    }
    return total;
}

/// Every quotient singularity with order <= max_order, canonical weights only.
inline std::vector<QuotientSingularity> all_singularities(long max_order) {
    std::vector<QuotientSingularity> out;
    for (long r = 1; r <= max_order; ++r) {
        for (long a = 0; a < std::max(1L, r); ++a) {
            Int g;
            Int rr(r), aa(a);
            mpz_gcd(g.get_mpz_t(), rr.get_mpz_t(), aa.get_mpz_t());
            if (r > 1 && g != 1) continue;
            const auto s = QuotientSingularity::make(rr, aa);
            if (s.weight == aa) out.push_back(s);  // canonical representative once
        }
    }
    return out;
}

}  // namespace qpctest
