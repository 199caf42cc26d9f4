#include <algorithm>
#include <vector>

#include "qpc/error.hpp"
#include "qpc/geometry.hpp"

namespace qpc {

namespace {

// U with U*v = (1,0) for primitive v, via the extended gcd.
UnimodularMap to_first_axis(const Vec2& v) {
    Int g, al, be;
    mpz_gcdext(g.get_mpz_t(), al.get_mpz_t(), be.get_mpz_t(), v.x.get_mpz_t(), v.y.get_mpz_t());
    // g == 1 since v is primitive
    return {al, be, -v.y, v.x};
}

bool tuple_less(const std::vector<Vec2>& a, const std::vector<Vec2>& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == b[i]) continue;
        return a[i] < b[i];
    }
    return false;
}

}  // namespace

FanoPolygon normal_form(const FanoPolygon& polygon) {
    const std::vector<Vec2> vs = polygon.lattice_vertices();
    const std::size_t n = vs.size();

    // Candidates: one Hermite-reduced image per (rotation, orientation).
    std::vector<Vec2> best;
    for (std::size_t j = 0; j < n; ++j) {
        for (int dir : {+1, -1}) {
            std::vector<Vec2> seq(n);
            for (std::size_t i = 0; i < n; ++i) {
                const std::size_t step = dir > 0 ? i : n - i;
                seq[i] = vs[(j + step) % n];
            }

            const UnimodularMap u0 = to_first_axis(seq[0]);
            std::vector<Vec2> img(n);
            for (std::size_t i = 0; i < n; ++i) img[i] = u0(seq[i]);

            std::size_t t = 1;
            while (t < n && img[t].y == 0) ++t;  // t exists: the polygon is 2-dimensional
            if (img[t].y < 0)
                for (auto& p : img) p.y = -p.y;
            // shear x -> x - b*y puts the pivot column in Hermite position 0 <= x < y
            const Int b = floor_div(img[t].x, img[t].y);
            for (auto& p : img) p.x -= b * p.y;

            if (best.empty() || tuple_less(img, best)) best = std::move(img);
        }
    }

    std::vector<Point2> pts;
    pts.reserve(n);
    for (const auto& v : best) pts.push_back(to_point(v));
    return FanoPolygon::validate(Polygon::create(std::move(pts)));
}

}  // namespace qpc
