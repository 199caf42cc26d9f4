#include "qpc/geometry.hpp"

#include <algorithm>
#include <set>

#include "qpc/error.hpp"

namespace qpc {

bool is_primitive(const Vec2& v) {
    Int g;
    mpz_gcd(g.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
    return g == 1;
}

Vec2 make_primitive(const Vec2& v) {
    if (v.x == 0 && v.y == 0) fail(Errc::invariant_violation, "primitive part of zero vector");
    Int g;
    mpz_gcd(g.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
    return {v.x / g, v.y / g};
}

UnimodularMap UnimodularMap::inverse() const {
    const Int dd = det();
    // det = +-1, so division is exact
    return {d / dd, -b / dd, -c / dd, a / dd};
}

UnimodularMap make_unimodular(const Int& a, const Int& b, const Int& c, const Int& d) {
    UnimodularMap m{a, b, c, d};
    const Int dd = m.det();
    if (dd != 1 && dd != -1)
        fail(Errc::invariant_violation, "matrix determinant " + dd.get_str() + " is not a unit");
    return m;
}

namespace {

Rat orient(const Point2& o, const Point2& a, const Point2& b) {
    return cross(a - o, b - o);
}

// Monotone chain; strict turns only, so output vertices are genuine.
std::vector<Point2> convex_hull(std::vector<Point2> pts) {
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    if (pts.size() < 3) return pts;
    std::vector<Point2> lo, hi;
    for (const auto& p : pts) {
        while (lo.size() >= 2 && orient(lo[lo.size() - 2], lo.back(), p) <= 0) lo.pop_back();
        lo.push_back(p);
    }
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) {
        while (hi.size() >= 2 && orient(hi[hi.size() - 2], hi.back(), *it) <= 0) hi.pop_back();
        hi.push_back(*it);
    }
    lo.pop_back();
    hi.pop_back();
    lo.insert(lo.end(), hi.begin(), hi.end());
    return lo;  // CCW starting from the lex-min vertex
}

}  // namespace

Polygon Polygon::create(std::vector<Point2> vertices) {
    std::vector<Point2> hull = convex_hull(vertices);
    if (hull.size() < 3)
        fail(Errc::degenerate_polygon, "needs at least 3 non-collinear vertices");
    std::set<Point2> given(vertices.begin(), vertices.end());
    if (given.size() != vertices.size())
        fail(Errc::degenerate_polygon, "repeated vertex");
    if (given.size() != hull.size())
        fail(Errc::degenerate_polygon, "input contains a non-vertex point (collinear or interior)");
    return Polygon(std::move(hull));
}

Polygon Polygon::hull_of(const std::vector<Point2>& points) {
    std::vector<Point2> hull = convex_hull(points);
    if (hull.size() < 3) fail(Errc::degenerate_polygon, "hull is not full-dimensional");
    return Polygon(std::move(hull));
}

Rat Polygon::area2() const {
    Rat s(0);
    for (std::size_t i = 0; i < verts_.size(); ++i)
        s += cross(verts_[i], vertex(i + 1));
    return s;  // positive: vertices are CCW
}

Int Polygon::denominator() const {
    Int l(1);
    for (const auto& v : verts_) {
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.x.get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.y.get_den().get_mpz_t());
    }
    return l;
}

bool Polygon::is_lattice() const { return denominator() == 1; }

std::vector<HalfPlane> Polygon::half_planes() const {
    std::vector<HalfPlane> out;
    out.reserve(verts_.size());
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        const Point2& p = verts_[i];
        const Point2& q = vertex(i + 1);
        const Point2 d = q - p;
        // outward normal (d.y, -d.x) for CCW order
        Rat a = d.y, b = -d.x;
        Rat c = a * p.x + b * p.y;
        Int l(1);
        mpz_lcm(l.get_mpz_t(), a.get_den().get_mpz_t(), b.get_den().get_mpz_t());
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den().get_mpz_t());
        Int ia(a.get_num() * (l / a.get_den()));
        Int ib(b.get_num() * (l / b.get_den()));
        Int ic(c.get_num() * (l / c.get_den()));
        Int g;
        mpz_gcd(g.get_mpz_t(), ia.get_mpz_t(), ib.get_mpz_t());
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ic.get_mpz_t());
        if (g > 1) { ia /= g; ib /= g; ic /= g; }
        out.push_back({ia, ib, ic});
    }
    return out;
}

bool Polygon::contains(const Point2& p) const {
    for (const auto& h : half_planes())
        if (Rat(h.a) * p.x + Rat(h.b) * p.y > h.c) return false;
    return true;
}

bool Polygon::strictly_contains(const Point2& p) const {
    for (const auto& h : half_planes())
        if (Rat(h.a) * p.x + Rat(h.b) * p.y >= h.c) return false;
    return true;
}

bool operator<(const Polygon& p, const Polygon& q) {
    if (p.size() != q.size()) return p.size() < q.size();
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (p.verts_[i] == q.verts_[i]) continue;
        return p.verts_[i] < q.verts_[i];
    }
    return false;
}

std::string Polygon::str() const {
    std::string s = "[";
    for (std::size_t i = 0; i < verts_.size(); ++i) {
        if (i) s += ", ";
        s += verts_[i].str();
    }
    return s + "]";
}

FanoPolygon FanoPolygon::validate(const Polygon& polygon) {
    // Polygon invariants already give dimension 2; the error is kept for
    // callers that construct via hull_of on degenerate data.
    if (polygon.size() < 3) fail(Errc::not_full_dimensional, "fewer than 3 vertices");
    for (const auto& v : polygon.vertices())
        if (!v.is_lattice())
            fail(Errc::non_integral_vertex, "vertex " + v.str());
    for (const auto& v : polygon.vertices()) {
        Vec2 w{v.x.get_num(), v.y.get_num()};
        if (!is_primitive(w))
            fail(Errc::non_primitive_vertex, "vertex " + v.str());
    }
    if (!polygon.strictly_contains(Point2{}))
        fail(Errc::origin_not_interior, "origin not in the strict interior");
    return FanoPolygon(polygon);
}

std::vector<Vec2> FanoPolygon::lattice_vertices() const {
    std::vector<Vec2> out;
    out.reserve(size());
    for (const auto& v : vertices()) out.push_back({v.x.get_num(), v.y.get_num()});
    return out;
}

std::vector<Cone2> FanoPolygon::spanning_fan() const {
    std::vector<Cone2> out;
    const auto vs = lattice_vertices();
    for (std::size_t i = 0; i < vs.size(); ++i)
        out.push_back({vs[i], vs[(i + 1) % vs.size()]});
    return out;
}

Polygon dual(const Polygon& polygon) {
    if (!polygon.strictly_contains(Point2{}))
        fail(Errc::origin_not_interior, "dual requires the origin strictly interior");
    std::vector<Point2> duals;
    const auto& vs = polygon.vertices();
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = vs[i];
        const Point2& q = vs[(i + 1) % n];
        // u(p) = u(q) = -1
        const Rat det = cross(p, q);
        duals.push_back({-(q.y - p.y) / det, (q.x - p.x) / det});
    }
    return Polygon::create(std::move(duals));
}

Polygon dual(const FanoPolygon& polygon) { return dual(polygon.polygon()); }

Polygon apply_map(const UnimodularMap& map, const Polygon& polygon) {
    std::vector<Point2> pts;
    pts.reserve(polygon.size());
    for (const auto& v : polygon.vertices()) pts.push_back(map(v));
    return Polygon::create(std::move(pts));
}

FanoPolygon apply_map(const UnimodularMap& map, const FanoPolygon& polygon) {
    return FanoPolygon::validate(apply_map(map, polygon.polygon()));
}

}  // namespace qpc
