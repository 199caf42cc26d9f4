#include "qpc/mutation.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "qpc/error.hpp"
#include "qpc/singularity.hpp"

namespace qpc {

MutationData MutationData::make(const Vec2& w, const Vec2& f, const Int& m) {
    if (!is_primitive(w)) fail(Errc::invalid_mutation_data, "w " + w.str() + " not primitive");
    if (!is_primitive(f)) fail(Errc::invalid_mutation_data, "f " + f.str() + " not primitive");
    if (dot(w, f) != 0) fail(Errc::invalid_mutation_data, "w(f) != 0");
    if (m < 1) fail(Errc::invalid_mutation_data, "factor length must be positive");
    return {w, f, m};
}

bool operator<(const MutationData& a, const MutationData& b) {
    if (!(a.w == b.w)) return a.w < b.w;
    if (!(a.f == b.f)) return a.f < b.f;
    return a.m < b.m;
}

namespace {

// Lattice points of P on the height line {w = h}, as base + t*dir for
// t in [tlo, thi]; dir is the fixed primitive direction (-w.y, w.x).
struct Slice {
    Vec2 base, dir;
    Int tlo, thi;
};

std::optional<Slice> lattice_slice(const std::vector<HalfPlane>& planes, const Vec2& w,
                                   const Int& h) {
    Int g, al, be;
    mpz_gcdext(g.get_mpz_t(), al.get_mpz_t(), be.get_mpz_t(), w.x.get_mpz_t(), w.y.get_mpz_t());
    const Vec2 base{al * h, be * h};  // w(base) = h
    const Vec2 dir{-w.y, w.x};

    bool has_lo = false, has_hi = false;
    Int tlo, thi;
    for (const auto& p : planes) {
        const Int coef = p.a * dir.x + p.b * dir.y;
        const Int rhs = p.c - p.a * base.x - p.b * base.y;
        if (coef == 0) {
            if (rhs < 0) return std::nullopt;
        } else if (coef > 0) {
            const Int v = floor_div(rhs, coef);
            if (!has_hi || v < thi) thi = v;
            has_hi = true;
        } else {
            const Int v = ceil_div(rhs, coef);
            if (!has_lo || v > tlo) tlo = v;
            has_lo = true;
        }
    }
    if (!has_lo || !has_hi) fail(Errc::invariant_violation, "unbounded slice");
    if (tlo > thi) return std::nullopt;
    return Slice{base, dir, tlo, thi};
}

// factor span in dir units: m*f = span_sign * m * dir
long factor_sign(const Vec2& f, const Vec2& dir) {
    if (f == dir) return 1;
    if (f == -dir) return -1;
    fail(Errc::invalid_mutation_data, "f is not perpendicular-primitive to w");
}

struct FactorSpan {
    Int lo, hi;  // F = [lo, hi] in dir units (one of the ends is 0)
};

FactorSpan factor_span(const MutationData& data, const Vec2& dir, const Int& scale) {
    const long s = factor_sign(data.f, dir);
    const Int len = scale * data.m;
    return s > 0 ? FactorSpan{Int(0), len} : FactorSpan{-len, Int(0)};
}

std::map<Int, long> vertex_height_histogram(const FanoPolygon& polygon, const Vec2& w) {
    std::map<Int, long> hist;
    for (const auto& v : polygon.lattice_vertices()) hist[dot(w, v)] += 1;
    return hist;
}

}  // namespace

FactorWitness validate_factor(const FanoPolygon& polygon, const MutationData& data) {
    const auto planes = polygon.polygon().half_planes();
    const auto heights = vertex_height_histogram(polygon, data.w);
    const Int h_min = heights.begin()->first;

    FactorWitness witness;
    for (Int h = h_min; h < 0; ++h) {
        const auto slice = lattice_slice(planes, data.w, h);
        const bool carries_vertex = heights.count(h) > 0;
        if (!slice) {
            if (carries_vertex)
                fail(Errc::invariant_violation, "vertex on an empty lattice slice");
            witness.rows[h] = std::nullopt;
            continue;
        }
        const FactorSpan f = factor_span(data, slice->dir, abs(h));
        const Int lo = slice->tlo - f.lo;
        const Int hi = slice->thi - f.hi;  // maximal Minkowski difference
        if (lo > hi) {
            if (carries_vertex)
                fail(Errc::factor_too_long,
                     "height " + h.get_str() + ": slice lattice length " +
                         Int(slice->thi - slice->tlo).get_str() + " < " +
                         Int(abs(h) * data.m).get_str());
            witness.rows[h] = std::nullopt;
            continue;
        }
        witness.rows[h] =
            LatticeSegment{slice->base + lo * slice->dir, slice->dir, hi - lo};
    }
    return witness;
}

namespace {

// Checks a (possibly custom) witness against the slice-covering conditions.
void check_witness(const FanoPolygon& polygon, const MutationData& data,
                   const FactorWitness& witness) {
    const auto planes = polygon.polygon().half_planes();
    const auto heights = vertex_height_histogram(polygon, data.w);
    const Int h_min = heights.begin()->first;

    for (Int h = h_min; h < 0; ++h) {
        const auto it = witness.rows.find(h);
        const bool has_row = it != witness.rows.end() && it->second.has_value();
        const auto slice = lattice_slice(planes, data.w, h);
        const bool carries_vertex = heights.count(h) > 0;
        if (!has_row) {
            if (carries_vertex)
                fail(Errc::vertex_not_covered, "height " + h.get_str() + " has no witness row");
            continue;
        }
        const LatticeSegment& seg = *it->second;
        if (!slice) fail(Errc::vertex_not_covered, "witness row on an empty slice");
        if (!(seg.dir == slice->dir) || seg.len < 0 || dot(data.w, seg.base) != h)
            fail(Errc::invalid_mutation_data, "malformed witness row at height " + h.get_str());
        const FactorSpan f = factor_span(data, slice->dir, abs(h));
        // base offset in dir units
        const Vec2 delta = seg.base - slice->base;
        const Int t0 = slice->dir.x != 0 ? Int(delta.x / slice->dir.x) : Int(delta.y / slice->dir.y);
        if (!(t0 * slice->dir == delta))
            fail(Errc::invalid_mutation_data, "witness base off the slice lattice");
        const Int cover_lo = t0 + f.lo, cover_hi = t0 + seg.len + f.hi;
        if (cover_lo < slice->tlo || cover_hi > slice->thi)
            fail(Errc::invalid_mutation_data,
                 "witness row exceeds the slice at height " + h.get_str());
        if (carries_vertex) {
            for (const auto& v : polygon.lattice_vertices()) {
                if (dot(data.w, v) != h) continue;
                const Int tv = slice->dir.x != 0 ? Int((v.x - slice->base.x) / slice->dir.x)
                                                 : Int((v.y - slice->base.y) / slice->dir.y);
                if (tv < cover_lo || tv > cover_hi)
                    fail(Errc::vertex_not_covered,
                         "height " + h.get_str() + ", vertex " + v.str());
            }
        }
    }
}

FanoPolygon hull_mutation(const FanoPolygon& polygon, const Vec2& w, const Vec2& f, const Int& m,
                          const FactorWitness& witness) {
    const auto planes = polygon.polygon().half_planes();
    Int h_max(0);
    for (const auto& v : polygon.lattice_vertices()) h_max = std::max(h_max, dot(w, v));

    std::vector<Point2> pts;
    for (const auto& [h, row] : witness.rows) {
        if (!row) continue;
        pts.push_back(to_point(row->base));
        pts.push_back(to_point(row->base + row->len * row->dir));
    }
    for (Int h = 0; h <= h_max; ++h) {
        const auto slice = lattice_slice(planes, w, h);
        if (!slice) continue;
        FactorSpan fs{Int(0), Int(0)};
        if (m > 0 && h > 0) {
            const long s = factor_sign(f, slice->dir);
            const Int len = h * m;
            fs = s > 0 ? FactorSpan{Int(0), len} : FactorSpan{-len, Int(0)};
        }
        pts.push_back(to_point(slice->base + (slice->tlo + fs.lo) * slice->dir));
        pts.push_back(to_point(slice->base + (slice->thi + fs.hi) * slice->dir));
    }
    return FanoPolygon::validate(Polygon::hull_of(pts));
}

}  // namespace

FanoPolygon mutate(const FanoPolygon& polygon, const MutationData& data) {
    const FactorWitness witness = validate_factor(polygon, data);
    return hull_mutation(polygon, data.w, data.f, data.m, witness);
}

FanoPolygon mutate_with_witness(const FanoPolygon& polygon, const MutationData& data,
                                const FactorWitness& witness) {
    check_witness(polygon, data, witness);
    return hull_mutation(polygon, data.w, data.f, data.m, witness);
}

FanoPolygon mutate_with_factor_length(const FanoPolygon& polygon, const Vec2& w, const Vec2& f,
                                      const Int& m) {
    if (m < 0) fail(Errc::invalid_mutation_data, "negative factor length");
    if (!is_primitive(w) || !is_primitive(f) || dot(w, f) != 0)
        fail(Errc::invalid_mutation_data, "w, f must be primitive with w(f) = 0");
    if (m == 0) {
        // point factor: every slice is kept as-is, so the mutation is the
        // hull of all lattice slices, i.e. the polygon itself
        FactorWitness witness;
        const auto planes = polygon.polygon().half_planes();
        Int h_min(0);
        for (const auto& v : polygon.lattice_vertices()) h_min = std::min(h_min, dot(w, v));
        for (Int h = h_min; h < 0; ++h) {
            const auto slice = lattice_slice(planes, w, h);
            if (slice)
                witness.rows[h] =
                    LatticeSegment{slice->base + slice->tlo * slice->dir, slice->dir,
                                   slice->thi - slice->tlo};
            else
                witness.rows[h] = std::nullopt;
        }
        return hull_mutation(polygon, w, f, Int(0), witness);
    }
    return mutate(polygon, MutationData::make(w, f, m));
}

const UnimodularMap& PiecewiseMap::piece_for(const Point2& u) const {
    for (const auto& p : pieces)
        if (dot(u, p.gate) >= 0) return p.map;
    fail(Errc::invariant_violation, "chambers do not cover M_Q");
}

PiecewiseMap dual_map(const MutationData& data) {
    // u -> u - u_min*w with u_min = min(0, m*u(f)); as a matrix on the second
    // chamber: I - m * w f^T
    const Int m = data.m;
    UnimodularMap shear{1 - m * data.w.x * data.f.x, -m * data.w.x * data.f.y,
                        -m * data.w.y * data.f.x, 1 - m * data.w.y * data.f.y};
    PiecewiseMap pm;
    pm.pieces.push_back({data.f, UnimodularMap::identity()});
    pm.pieces.push_back({-data.f, shear});
    return pm;
}

Polygon apply_dual_map(const PiecewiseMap& map, const Polygon& polygon) {
    if (map.pieces.size() != 2)
        fail(Errc::invariant_violation, "expected a two-chamber map");
    const Vec2 gate = map.pieces[0].gate;
    const auto& vs = polygon.vertices();
    const std::size_t n = vs.size();

    std::vector<Point2> side[2];
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& p = vs[i];
        const Point2& q = vs[(i + 1) % n];
        const Rat hp = dot(p, gate), hq = dot(q, gate);
        if (hp >= 0) side[0].push_back(p);
        if (hp <= 0) side[1].push_back(p);
        if ((hp > 0 && hq < 0) || (hp < 0 && hq > 0)) {
            const Rat t = -hp / (hq - hp);
            const Point2 x = p + t * (q - p);
            side[0].push_back(x);
            side[1].push_back(x);
        }
    }

    Rat pieces_area(0);
    std::vector<Point2> image;
    for (int s = 0; s < 2; ++s) {
        if (side[s].empty()) continue;
        std::optional<Polygon> piece;
        try {
            piece = Polygon::hull_of(side[s]);
        } catch (const Error& e) {
            // the polygon may only touch this chamber in a vertex or edge
            if (e.code() != Errc::degenerate_polygon) throw;
        }
        if (piece) pieces_area += piece->area2();
        for (const auto& p : side[s]) image.push_back(map.pieces[s].map(p));
    }

    Polygon out = Polygon::hull_of(image);
    // each piece maps by a unimodular matrix, so areas are preserved; a
    // mismatch means the union of images was not convex
    if (out.area2() != pieces_area)
        fail(Errc::non_convex_image, "mapped pieces do not assemble to a convex polygon");
    return out;
}

std::vector<std::pair<MutationData, FanoPolygon>> mutation_neighbors(const FanoPolygon& polygon) {
    std::vector<std::pair<MutationData, FanoPolygon>> out;
    const auto vs = polygon.lattice_vertices();
    const std::size_t n = vs.size();
    for (std::size_t i = 0; i < n; ++i) {
        const Vec2& p = vs[i];
        const Vec2& q = vs[(i + 1) % n];
        const auto sd = residue(classify_cone(Cone2{p, q}));
        if (sd.d < 1) continue;  // no factor of positive length along this normal
        const Vec2 edge_dir = make_primitive(q - p);
        const Vec2 w = -make_primitive(Vec2{edge_dir.y, -edge_dir.x});
        if (dot(w, p) != -sd.local_index)
            fail(Errc::invariant_violation, "inner normal height != -l");
        const Vec2 f = edge_dir;
        for (Int m(1); m <= sd.d; ++m) {
            const MutationData md = MutationData::make(w, f, m);
            try {
                out.emplace_back(md, normal_form(mutate(polygon, md)));
            } catch (const Error& e) {
                if (e.code() != Errc::factor_too_long) throw;
                // a shorter slice elsewhere can veto this length; skip it
            }
        }
    }
    return out;
}

MutationGraph mutation_graph(const FanoPolygon& start, long depth) {
    if (depth < 0) fail(Errc::invariant_violation, "negative depth");
    const FanoPolygon root = normal_form(start);

    std::map<FanoPolygon, long> dist;
    dist.emplace(root, 0);
    std::vector<FanoPolygon> frontier{root};
    struct RawEdge {
        FanoPolygon source, target;
        MutationData data;
    };
    std::vector<RawEdge> raw_edges;

    for (long d = 0; d < depth && !frontier.empty(); ++d) {
        std::vector<FanoPolygon> next;
        for (const auto& node : frontier) {
            for (auto& [data, nb] : mutation_neighbors(node)) {
                if (dist.emplace(nb, d + 1).second) next.push_back(nb);
                raw_edges.push_back({node, nb, data});
            }
        }
        std::sort(next.begin(), next.end());
        frontier = std::move(next);
    }

    MutationGraph g;
    for (const auto& [node, _] : dist) g.nodes.push_back(node);  // map order = sorted
    std::map<FanoPolygon, std::size_t> index;
    for (std::size_t i = 0; i < g.nodes.size(); ++i) index.emplace(g.nodes[i], i);
    for (const auto& e : raw_edges)
        g.edges.push_back({index.at(e.source), index.at(e.target), e.data});
    std::sort(g.edges.begin(), g.edges.end(), [](const auto& a, const auto& b) {
        if (a.source != b.source) return a.source < b.source;
        if (a.target != b.target) return a.target < b.target;
        return a.data < b.data;
    });
    return g;
}

}  // namespace qpc
