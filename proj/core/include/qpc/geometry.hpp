#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qpc/rational.hpp"

namespace qpc {

/// Integer lattice vector. Used for points of N, covectors of M, and cone
/// generators alike; pairings between the two lattices go through dot().
struct Vec2 {
    Int x{0}, y{0};

    friend Vec2 operator+(const Vec2& a, const Vec2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Vec2 operator-(const Vec2& a, const Vec2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Vec2 operator*(const Int& s, const Vec2& v) { return {s * v.x, s * v.y}; }
    Vec2 operator-() const { return {-x, -y}; }
    friend bool operator==(const Vec2& a, const Vec2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Vec2& a, const Vec2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
    std::string str() const { return "(" + x.get_str() + "," + y.get_str() + ")"; }
};

inline Int dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
inline Int cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
bool is_primitive(const Vec2& v);
Vec2 make_primitive(const Vec2& v);  // v != 0

/// Rational point of N_Q or M_Q.
struct Point2 {
    Rat x{0}, y{0};

    friend Point2 operator+(const Point2& a, const Point2& b) { return {a.x + b.x, a.y + b.y}; }
    friend Point2 operator-(const Point2& a, const Point2& b) { return {a.x - b.x, a.y - b.y}; }
    friend Point2 operator*(const Rat& s, const Point2& p) { return {s * p.x, s * p.y}; }
    friend bool operator==(const Point2& a, const Point2& b) { return a.x == b.x && a.y == b.y; }
    friend bool operator<(const Point2& a, const Point2& b) {
        return a.x != b.x ? a.x < b.x : a.y < b.y;
    }
    bool is_lattice() const { return is_integral(x) && is_integral(y); }
    std::string str() const { return "(" + rat_str(x) + "," + rat_str(y) + ")"; }
};

inline Point2 to_point(const Vec2& v) { return {Rat(v.x), Rat(v.y)}; }
inline Rat cross(const Point2& a, const Point2& b) { return a.x * b.y - a.y * b.x; }
inline Rat dot(const Point2& u, const Vec2& v) { return u.x * v.x + u.y * v.y; }

/// Element of GL_2(Z), acting on column vectors: (x, y) -> (a x + b y, c x + d y).
struct UnimodularMap {
    Int a{1}, b{0}, c{0}, d{1};

    static UnimodularMap identity() { return {}; }
    Int det() const { return a * d - b * c; }
    UnimodularMap inverse() const;

    Vec2 operator()(const Vec2& v) const { return {a * v.x + b * v.y, c * v.x + d * v.y}; }
    Point2 operator()(const Point2& p) const { return {a * p.x + b * p.y, c * p.x + d * p.y}; }
    friend UnimodularMap operator*(const UnimodularMap& m, const UnimodularMap& n) {
        return {m.a * n.a + m.b * n.c, m.a * n.b + m.b * n.d,
                m.c * n.a + m.d * n.c, m.c * n.b + m.d * n.d};
    }
    friend bool operator==(const UnimodularMap& m, const UnimodularMap& n) {
        return m.a == n.a && m.b == n.b && m.c == n.c && m.d == n.d;
    }
};

UnimodularMap make_unimodular(const Int& a, const Int& b, const Int& c, const Int& d);

/// Edge inequality a*x + b*y <= c with integer primitive (a, b, c).
struct HalfPlane {
    Int a, b, c;
};

/// Strictly convex rational polygon. Vertices are stored counter-clockwise
/// starting from the lexicographically smallest vertex, so equality is
/// structural.
class Polygon {
public:
    /// Validating constructor: `vertices` must be exactly the vertex set of
    /// their convex hull (no repeats, no collinear triples, full dimension).
    static Polygon create(std::vector<Point2> vertices);

    /// Convex hull of an arbitrary point set; interior and collinear points
    /// are absorbed. Requires a full-dimensional hull.
    static Polygon hull_of(const std::vector<Point2>& points);

    const std::vector<Point2>& vertices() const { return verts_; }
    std::size_t size() const { return verts_.size(); }
    const Point2& vertex(std::size_t i) const { return verts_[i % verts_.size()]; }

    /// Twice the (positive) area; for lattice polygons the normalised volume.
    Rat area2() const;
    /// lcm of all vertex coordinate denominators; 1 iff lattice polygon.
    Int denominator() const;
    bool is_lattice() const;
    bool contains(const Point2& p) const;        // closed polygon
    bool strictly_contains(const Point2& p) const;

    /// One inequality per edge, in vertex order, integer and primitive.
    std::vector<HalfPlane> half_planes() const;

    friend bool operator==(const Polygon& p, const Polygon& q) { return p.verts_ == q.verts_; }
    /// Total order for deterministic containers: (size, lex vertex list).
    friend bool operator<(const Polygon& p, const Polygon& q);

    std::string str() const;

private:
    explicit Polygon(std::vector<Point2> verts) : verts_(std::move(verts)) {}
    std::vector<Point2> verts_;
};

/// Planar cone spanned by two primitive integral generators, g1 before g2
/// counter-clockwise (cross(g1, g2) > 0).
struct Cone2 {
    Vec2 g1, g2;
};

/// Lattice polygon with primitive vertices and the origin strictly interior.
class FanoPolygon {
public:
    /// Checks the Fano conditions and reports the first violation:
    /// NotFullDimensional, OriginNotInterior, NonIntegralVertex or
    /// NonPrimitiveVertex (naming the offending vertex).
    static FanoPolygon validate(const Polygon& polygon);

    const Polygon& polygon() const { return poly_; }
    const std::vector<Point2>& vertices() const { return poly_.vertices(); }
    std::size_t size() const { return poly_.size(); }
    std::vector<Vec2> lattice_vertices() const;

    /// One cone per edge, generators the edge endpoints, cyclic order kept.
    std::vector<Cone2> spanning_fan() const;

    friend bool operator==(const FanoPolygon& p, const FanoPolygon& q) {
        return p.poly_ == q.poly_;
    }
    friend bool operator<(const FanoPolygon& p, const FanoPolygon& q) {
        return p.poly_ < q.poly_;
    }

private:
    explicit FanoPolygon(Polygon p) : poly_(std::move(p)) {}
    Polygon poly_;
};

/// Polar dual {u : u(v) >= -1 for all v in P}; requires the origin strictly
/// interior (always true for Fano input). One dual vertex per edge of P, in
/// corresponding cyclic order.
Polygon dual(const Polygon& polygon);
Polygon dual(const FanoPolygon& polygon);

Polygon apply_map(const UnimodularMap& map, const Polygon& polygon);
FanoPolygon apply_map(const UnimodularMap& map, const FanoPolygon& polygon);

/// Canonical representative of the GL_2(Z)-orbit: among the finitely many
/// Hermite-reduced images (one per vertex sequence rotation and orientation),
/// the lexicographically smallest vertex list.
FanoPolygon normal_form(const FanoPolygon& polygon);

}  // namespace qpc
